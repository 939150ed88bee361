"""
Classical and integrated empirical-process statistics.

Everything is computed from the sorted PIT sample u(1) <= ... <= u(n). On the
k-th gap between breakpoints 0, u(1), ..., u(n), 1 the integrated process is

    A_n(u) = sqrt(n) * (-S_k / n + (k / n) u - u^2 / 2),   S_k = u(1) + ... + u(k),

so its integral, the integral of its square and its extrema follow exactly
from polynomial calculus.
"""

import csv
import logging
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as P
from scipy import integrate

from ..models.density import Density
from ..models.enums import StatisticKind
from ..models.samples import SortedSample, IntegratedProcess, StatisticResult
from ...exceptions import GofDomainError, GofFileError, GofValidationError

logger = logging.getLogger(__name__)

CLASSICAL = (StatisticKind.D, StatisticKind.W1, StatisticKind.W2, StatisticKind.U2)
INTEGRATED = (StatisticKind.DBAR, StatisticKind.W1BAR, StatisticKind.W2BAR, StatisticKind.U2BAR)


def pit(raw: Sequence[float], d: Density, line_numbers: Optional[Sequence[int]] = None) -> SortedSample:
    """Sorted F(x_i). Values outside the support of d are rejected, never clamped."""
    x = np.asarray(raw, dtype=float)
    if x.ndim != 1 or x.size == 0:
        raise GofValidationError("Sample is empty", field_name="raw", expected="n >= 1")
    bad = np.flatnonzero(~np.isfinite(x) | ~d.in_support(x))
    if bad.size:
        i = int(bad[0])
        line = line_numbers[i] if line_numbers is not None else None
        raise GofDomainError(i, float(x[i]), d.support, line_number=line)
    return SortedSample.from_unsorted(d.cdf(x))


def classical_values(u: np.ndarray) -> Tuple[float, float, float, float]:
    """(D, W1, W2, U2) for an ascending array in [0, 1]."""
    n = u.size
    i = np.arange(1, n + 1)
    d_plus = np.max(i / n - u)
    d_minus = np.max(u - (i - 1) / n)
    d = np.sqrt(n) * max(d_plus, d_minus)
    w1 = np.sqrt(n) * (0.5 - np.mean(u))
    w2 = 1.0 / (12.0 * n) + np.sum((u - (2 * i - 1) / (2.0 * n)) ** 2)
    return float(d), float(w1), float(w2), float(w2 - w1 * w1)


def classical_stats(s: SortedSample) -> List[StatisticResult]:
    values = classical_values(s.values)
    return [StatisticResult(k, v, s.n) for k, v in zip(CLASSICAL, values)]


def _process_coefficients(u: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    n = u.size
    breakpoints = np.concatenate(([0.0], u, [1.0]))
    k = np.arange(n + 1)
    partial = np.concatenate(([0.0], np.cumsum(u)))
    coefficients = np.vstack((-partial / n, k / n, np.full(n + 1, -0.5)))
    return breakpoints, coefficients


def integrated_process(s: SortedSample) -> IntegratedProcess:
    """Exact piecewise-quadratic A_n with n+1 segments."""
    breakpoints, coefficients = _process_coefficients(s.values)
    return IntegratedProcess(breakpoints=breakpoints, coefficients=coefficients, n=s.n)


def _segment_integrals(coefficients: np.ndarray, lower: np.ndarray, upper: np.ndarray) -> np.ndarray:
    antiderivative = P.polyint(coefficients, axis=0)
    return P.polyval(upper, antiderivative, tensor=False) - P.polyval(lower, antiderivative, tensor=False)


def integrated_values(breakpoints: np.ndarray, coefficients: np.ndarray, n: int) -> Tuple[float, float, float, float]:
    """(Dbar, W1bar, W2bar, U2bar) from a segment representation of A_n / sqrt(n)."""
    lower, upper = breakpoints[:-1], breakpoints[1:]
    c0, c1, c2 = coefficients
    squared = np.vstack((c0 * c0, 2 * c0 * c1, c1 * c1 + 2 * c0 * c2, 2 * c1 * c2, c2 * c2))

    # zero-length segments from ties contribute nothing
    w1bar = np.sqrt(n) * float(np.sum(_segment_integrals(coefficients, lower, upper)))
    w2bar = n * float(np.sum(_segment_integrals(squared, lower, upper)))

    # the vertex of every parabola sits at u* = k/n
    vertex = c1
    inside = (vertex > lower) & (vertex < upper)
    candidates = np.concatenate((
        P.polyval(breakpoints[:-1], coefficients, tensor=False),
        P.polyval(breakpoints[1:], coefficients, tensor=False),
        P.polyval(vertex[inside], coefficients[:, inside], tensor=False),
    ))
    dbar = np.sqrt(n) * float(np.max(np.abs(candidates)))
    return dbar, w1bar, w2bar, w2bar - w1bar * w1bar


def integrated_stats(p: IntegratedProcess) -> List[StatisticResult]:
    values = integrated_values(p.breakpoints, p.coefficients, p.n)
    return [StatisticResult(k, v, p.n) for k, v in zip(INTEGRATED, values)]


def statistic_values(u: np.ndarray) -> Dict[StatisticKind, float]:
    """All eight statistics of an ascending PIT array, keyed by kind."""
    breakpoints, coefficients = _process_coefficients(u)
    values = classical_values(u) + integrated_values(breakpoints, coefficients, u.size)
    return dict(zip(CLASSICAL + INTEGRATED, values))


def all_stats(s: SortedSample) -> List[StatisticResult]:
    return classical_stats(s) + integrated_stats(integrated_process(s))


def compute(kinds: Iterable[StatisticKind], s: SortedSample) -> List[StatisticResult]:
    wanted = list(kinds)
    values = statistic_values(s.values)
    return [StatisticResult(k, values[k], s.n) for k in wanted]


def grid_oracle(s: SortedSample, points: int = 100_001) -> Dict[StatisticKind, float]:
    """
    Integrated statistics from A_n sampled on a uniform grid (trapezoid rule).
    The sample points are merged into the grid so kinks are never missed.
    Used to cross-check the exact values.
    """
    u = np.union1d(np.linspace(0.0, 1.0, points), s.values)
    a = integrated_process(s).evaluate(u)
    w1bar = float(integrate.trapezoid(a, u))
    w2bar = float(integrate.trapezoid(a * a, u))
    return {
        StatisticKind.DBAR: float(np.max(np.abs(a))),
        StatisticKind.W1BAR: w1bar,
        StatisticKind.W2BAR: w2bar,
        StatisticKind.U2BAR: w2bar - w1bar * w1bar,
    }


def load_sample(path: Union[str, Path], column: Optional[str] = None) -> Tuple[np.ndarray, List[int]]:
    """
    Read observations from a file.

    Without `column`: one value per line, blank lines and `#` comments ignored.
    With `column`: a CSV file with a header row. Returns the values together
    with their 1-based line numbers.
    """
    path = Path(path)
    values: List[float] = []
    lines: List[int] = []
    try:
        with open(path, "r", encoding="utf-8", newline="") as handle:
            if column is None:
                for number, line in enumerate(handle, start=1):
                    text = line.split("#", 1)[0].strip()
                    if not text:
                        continue
                    values.append(_parse_float(text, path, number))
                    lines.append(number)
            else:
                reader = csv.DictReader(handle)
                if reader.fieldnames is None or column not in reader.fieldnames:
                    raise GofValidationError(
                        f"Column {column!r} not found in {path}",
                        field_name="column",
                        field_value=column,
                        expected=", ".join(reader.fieldnames or []),
                    )
                for row in reader:
                    text = (row[column] or "").strip()
                    if text:
                        values.append(_parse_float(text, path, reader.line_num))
                        lines.append(reader.line_num)
    except UnicodeDecodeError as e:
        raise GofFileError(f"{path} is not UTF-8 text: {e.reason} at byte {e.start}",
                           file_path=str(path), operation="decode")
    except OSError as e:
        raise GofFileError(f"Cannot read {path}: {e}", file_path=str(path), operation="read")

    if not values:
        raise GofValidationError(f"No observations in {path}", field_name="input", expected="n >= 1")
    logger.info(f"Loaded {len(values)} observations from {path}")
    return np.asarray(values, dtype=float), lines


def _parse_float(text: str, path: Path, line: int) -> float:
    try:
        return float(text)
    except ValueError:
        raise GofValidationError(
            f"{path}, line {line}: not a number: {text!r}",
            field_name="input",
            field_value=text,
        )
