"""
Local Bahadur efficiency of the eight statistics under skew alternatives.

Two routes are implemented:

* analytic: l(T, f) from the v- and q-functionals of f, e^B = l / sigma^2(f);
* slope/KL: c(T, theta) from the b-functionals of H(., theta) and the ratio
  c(T, theta) / (2 K(theta)), which tends to e^B as theta -> 0.

b-functionals are evaluated in probability scale w = F(x) using the shift
profile tau (see skew_model):

    D(w) = int_0^w tau,      Q(w) = int_0^w D = int_0^w (w - t) tau(t) dt.

The linear functionals scale like theta and the quadratic ones like theta^2,
so all of them are computed from tau / theta and rescaled.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..models.density import Density
from ..models.enums import StatisticKind, CellStatus
from ..models.reports import (
    DensityFunctionals,
    LocalIndexReport,
    EigenConstants,
    LaoReport,
    Table1Cell,
    Table1Report,
)
from ...config import get_config
from ...data import (
    STATISTIC_ORDER,
    DENSITY_ORDER,
    KNOWN_DISCREPANCIES,
    DOCUMENTED_NOTES,
    printed_value,
)
from ...exceptions import GofValidationError
from ..utils.validation import parse_statistic
from .distributions import make_density, numeric_v_q
from .quadrature import integrate_scalar, find_root, maximize_on_bracket, cumulative_integral
from .skew_model import SkewAlternative, shift_profile, scaled_kullback_leibler

logger = logging.getLogger(__name__)

LAO_TOLERANCE = 1e-6
LAST_DIGIT = 1e-3

_EDGE = 1e-6


# eigen-constants

def _tan_plus_tanh(x: float) -> float:
    return math.tan(x) + math.tanh(x)


def eigen_constants(count: int = 1) -> EigenConstants:
    """First `count` positive roots of tan(x) + tanh(x) = 0; mu0 = kappa_1^4."""
    if count < 1:
        raise GofValidationError("count must be at least 1", field_name="count", field_value=count)
    return _eigen_constants(int(count))


@lru_cache(maxsize=8)
def _eigen_constants(count: int) -> EigenConstants:
    kappas, residuals = [], []
    for j in range(1, count + 1):
        # tan runs from -inf to 0 on ((j - 1/2) pi, j pi) while tanh stays in (0, 1)
        lower, upper = (j - 0.5) * math.pi + 1e-9, j * math.pi
        root = find_root(_tan_plus_tanh, lower, upper, label=f"kappa_{j}")
        kappas.append(root)
        residuals.append(abs(_tan_plus_tanh(root)))
    return EigenConstants(kappa=tuple(kappas), residuals=tuple(residuals))


def mu0() -> float:
    return eigen_constants(1).mu0


def leading_function(kind: Union[str, StatisticKind], j: int, x) -> np.ndarray:
    """
    psi_j(x) = cos(k_j) sinh(k_j (1 - x)) + cosh(k_j) sin(k_j (1 - x)) for W2bar,
    sin(pi j x) for U2bar.
    """
    kind = parse_statistic(kind)
    if j < 1:
        raise GofValidationError("j must be at least 1", field_name="j", field_value=j)
    x = np.asarray(x, dtype=float)
    if kind is StatisticKind.W2BAR:
        k = eigen_constants(j).kappa[j - 1]
        return math.cos(k) * np.sinh(k * (1.0 - x)) + math.cosh(k) * np.sin(k * (1.0 - x))
    if kind is StatisticKind.U2BAR:
        return np.sin(math.pi * j * x)
    raise GofValidationError(
        f"Leading functions are available for W2bar and U2bar, not {kind.value}",
        field_name="kind",
        field_value=kind.value,
    )


# analytic route

def _v_q_callables(d: Density) -> Tuple[Callable, Callable]:
    if d.v_closed is not None and d.q_closed is not None:
        return d.v_closed, d.q_closed
    v_func, q_func = numeric_v_q(d.pdf, d.support)
    return np.vectorize(v_func), np.vectorize(q_func)


@lru_cache(maxsize=None)
def density_functionals(d: Density) -> DensityFunctionals:
    """
    sup|v|, int v f, int v^2 f, sup|q|, int q f and int q^2 f, integrated
    over w = F(x) in (0, 1).
    """
    v_func, q_func = _v_q_callables(d)

    def over_w(g: Callable[[np.ndarray], np.ndarray], label: str) -> float:
        return integrate_scalar(lambda w: float(g(d.quantile(w))), 0.0, 1.0,
                                points=(0.5,), label=f"{label} ({d.name})")

    int_vf = over_w(v_func, "int v f")
    int_v2f = over_w(lambda x: v_func(x) ** 2, "int v^2 f")
    int_qf = over_w(q_func, "int q f")
    int_q2f = over_w(lambda x: q_func(x) ** 2, "int q^2 f")

    # v peaks in modulus at 0 and q is monotone; the grid scan guards both claims
    scan = d.quantile(np.linspace(_EDGE, 1.0 - _EDGE, get_config().sup_grid_points))
    sup_v = max(abs(float(v_func(0.0))), float(np.max(np.abs(v_func(scan)))))
    sup_q = max(abs(float(q_func(d.support[1]))), float(np.max(np.abs(q_func(scan)))))

    logger.debug(f"functionals of {d.name}: int_vf={int_vf:.10g} sup_q={sup_q:.10g}")
    return DensityFunctionals(
        density=d.name,
        sup_v=sup_v,
        int_vf=int_vf,
        int_v2f=int_v2f,
        sup_q=sup_q,
        int_qf=int_qf,
        int_q2f=int_q2f,
    )


def _index_value(kind: StatisticKind, fn: DensityFunctionals) -> float:
    if kind is StatisticKind.D:
        return 4.0 * fn.sup_v ** 2
    if kind is StatisticKind.W1:
        return 12.0 * fn.int_vf ** 2
    if kind is StatisticKind.W2:
        return math.pi ** 2 * fn.int_v2f
    if kind is StatisticKind.U2:
        return 4.0 * math.pi ** 2 * (fn.int_v2f - fn.int_vf ** 2)
    if kind is StatisticKind.DBAR:
        return 12.0 * fn.sup_q ** 2
    if kind is StatisticKind.W1BAR:
        return 45.0 * fn.int_qf ** 2
    if kind is StatisticKind.W2BAR:
        return mu0() * fn.int_q2f
    return math.pi ** 4 * (fn.int_q2f - fn.int_qf ** 2)


def local_index(kind: Union[str, StatisticKind], d: Density) -> LocalIndexReport:
    """l(T, f) and e^B(T) = l(T, f) / sigma^2(f) for any of the eight statistics."""
    kind = parse_statistic(kind)
    fn = density_functionals(d)
    index = _index_value(kind, fn)
    return LocalIndexReport(
        kind=kind,
        density=d.name,
        functionals=fn,
        index=index,
        variance=d.variance,
        efficiency=index / d.variance,
    )


def local_index_integrated(kind: Union[str, StatisticKind], d: Density) -> LocalIndexReport:
    """
    l(Dbar) = 12 sup q^2, l(W1bar) = 45 (int q f)^2, l(W2bar) = mu0 int q^2 f,
    l(U2bar) = pi^4 [int q^2 f - (int q f)^2].
    """
    kind = parse_statistic(kind)
    if not kind.is_integrated:
        raise GofValidationError(f"{kind.value} is not an integrated statistic", field_name="kind")
    return local_index(kind, d)


def local_index_classical(kind: Union[str, StatisticKind], d: Density) -> LocalIndexReport:
    """
    l(D) = 4 sup v^2, l(W1) = 12 (int v f)^2, l(W2) = pi^2 int v^2 f,
    l(U2) = 4 pi^2 [int v^2 f - (int v f)^2].
    """
    kind = parse_statistic(kind)
    if kind.is_integrated:
        raise GofValidationError(f"{kind.value} is not a classical statistic", field_name="kind")
    return local_index(kind, d)


# slope / KL route

def slope_coefficient(kind: StatisticKind) -> float:
    """c(T, theta) ~ coefficient * b^2 (linear kinds) or coefficient * b (quadratic kinds)."""
    return {
        StatisticKind.D: 4.0,
        StatisticKind.W1: 12.0,
        StatisticKind.W2: math.pi ** 2,
        StatisticKind.U2: 4.0 * math.pi ** 2,
        StatisticKind.DBAR: 12.0,
        StatisticKind.W1BAR: 45.0,
        StatisticKind.W2BAR: mu0(),
        StatisticKind.U2BAR: math.pi ** 4,
    }[kind]


def _sup_abs_profile(
    profile: Callable[[float], float],
    grid: np.ndarray,
    values: np.ndarray,
) -> float:
    """sup |profile| from grid values refined around the best grid point."""
    i = int(np.argmax(np.abs(values)))
    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, grid.size - 1)]
    return max(float(np.abs(values[i])), maximize_on_bracket(lambda w: abs(profile(w)), lo, hi))


def _scaled_b(kind: StatisticKind, f: Density, G: Density, theta: float) -> float:
    """b(T, theta) / theta (linear kinds) or / theta^2 (quadratic kinds)."""
    tau = shift_profile(f, G, theta, scaled=True)

    def D(w: float) -> float:
        return integrate_scalar(tau, 0.0, w, label="D(w)")

    def Q(w: float) -> float:
        return integrate_scalar(lambda t: (w - t) * tau(t), 0.0, w, label="Q(w)")

    if kind is StatisticKind.W1:
        return integrate_scalar(lambda t: (1.0 - t) * tau(t), 0.0, 1.0, points=(0.5,), label="b(W1)")
    if kind is StatisticKind.W1BAR:
        return integrate_scalar(lambda t: 0.5 * (1.0 - t) ** 2 * tau(t), 0.0, 1.0,
                                points=(0.5,), label="b(W1bar)")
    if kind is StatisticKind.W2:
        # D(1 - w) = D(w)
        return 2.0 * integrate_scalar(lambda w: D(w) ** 2, 0.0, 0.5, label="b(W2)")
    if kind is StatisticKind.U2:
        return _scaled_b(StatisticKind.W2, f, G, theta) - _scaled_b(StatisticKind.W1, f, G, theta) ** 2
    if kind is StatisticKind.W2BAR:
        return integrate_scalar(lambda w: Q(w) ** 2, 0.0, 1.0, points=(0.5,), label="b(W2bar)")
    if kind is StatisticKind.U2BAR:
        return _scaled_b(StatisticKind.W2BAR, f, G, theta) - _scaled_b(StatisticKind.W1BAR, f, G, theta) ** 2

    grid = np.linspace(0.0, 1.0, get_config().sup_grid_points + 1)
    d_grid = cumulative_integral(tau, grid, label="D(w)")
    if kind is StatisticKind.D:
        return _sup_abs_profile(D, grid, d_grid)
    m_grid = cumulative_integral(lambda t: t * tau(t), grid, label="M(w)")
    return _sup_abs_profile(Q, grid, grid * d_grid - m_grid)


def b_function(kind: Union[str, StatisticKind], a: SkewAlternative) -> float:
    """
    b(T, theta), the limit in probability of the normalized statistic under the
    alternative. Signed for W1 and W1bar, nonnegative otherwise.
    """
    kind = parse_statistic(kind)
    if a.theta == 0:
        return 0.0
    scale = a.theta ** 2 if kind.is_quadratic else a.theta
    return scale * _scaled_b(kind, a.f, a.G, a.theta)


def exact_slope(kind: Union[str, StatisticKind], a: SkewAlternative) -> float:
    """Locally approximated exact slope c(T, theta)."""
    kind = parse_statistic(kind)
    b = b_function(kind, a)
    return slope_coefficient(kind) * (b if kind.is_quadratic else b * b)


def slope_ratio(kind: Union[str, StatisticKind], a: SkewAlternative) -> float:
    """c(T, theta) / (2 K(theta)), computed from theta-scaled integrands."""
    kind = parse_statistic(kind)
    if a.theta <= 0:
        raise GofValidationError("slope_ratio needs theta > 0", field_name="theta", field_value=a.theta)
    b = _scaled_b(kind, a.f, a.G, a.theta)
    c = slope_coefficient(kind) * (b if kind.is_quadratic else b * b)
    return c / (2.0 * scaled_kullback_leibler(a.f, a.G, a.theta))


def richardson(thetas: Sequence[float], values: Sequence[float]) -> float:
    """Extrapolate values(theta) to theta = 0 as a polynomial in theta^2 (Neville)."""
    x = np.asarray(thetas, dtype=float) ** 2
    y = np.asarray(values, dtype=float).copy()
    if x.size != y.size or x.size == 0:
        raise GofValidationError("thetas and values must be nonempty and of equal length",
                                 field_name="thetas")
    if np.unique(x).size != x.size:
        raise GofValidationError("thetas must be distinct", field_name="thetas")
    n = x.size
    for level in range(1, n):
        for i in range(n - level):
            j = i + level
            y[i] = (x[j] * y[i] - x[i] * y[i + 1]) / (x[j] - x[i])
    return float(y[0])


# local asymptotic optimality

def _residual_range(d: Density) -> np.ndarray:
    hi = d.support[1] if d.is_bounded else float(d.quantile(1.0 - _EDGE))
    return np.linspace(-hi, hi, 1001)


def lao_check(kind: Union[str, StatisticKind], d: Density) -> LaoReport:
    """
    Efficiency of the statistic at d, whether it attains the Bahadur bound, and
    the residual of the characterizing equation where one is known:

    * Dbar: F(x) - 1/2 must be linear on the support;
    * U2bar: F(x) = arcsin(x / b) / pi + 1/2 on [-b, b];
    * W2bar: v(x) = C psi_1(F(x)); C is fitted by least squares and the
      relative residual is reported (the equation is evaluated, not solved).
    """
    kind = parse_statistic(kind)
    report = local_index(kind, d)
    is_lao = abs(report.efficiency - 1.0) < LAO_TOLERANCE
    residual_name, residual, constant = None, None, None

    if kind is StatisticKind.DBAR:
        x = _residual_range(d)
        b = x[-1]
        slope = (float(d.cdf(b)) - 0.5) / b
        residual_name = "linearity"
        residual = float(np.max(np.abs(d.cdf(x) - 0.5 - slope * x)))
    elif kind is StatisticKind.U2BAR:
        x = _residual_range(d)
        b = x[-1]
        residual_name = "arcsine"
        residual = float(np.max(np.abs(d.cdf(x) - (np.arcsin(x / b) / math.pi + 0.5))))
    elif kind is StatisticKind.W2BAR:
        w = np.linspace(0.0, 1.0, 1001)[1:-1]
        v_func, _ = _v_q_callables(d)
        target = np.asarray(v_func(d.quantile(w)), dtype=float)
        psi = leading_function(kind, 1, w)
        constant = float(np.dot(target, psi) / np.dot(psi, psi))
        residual_name = "psi1"
        residual = float(np.linalg.norm(target - constant * psi) / np.linalg.norm(target))

    return LaoReport(
        kind=kind,
        density=d.name,
        efficiency=report.efficiency,
        is_lao=is_lao,
        residual_name=residual_name,
        residual=residual,
        fitted_constant=constant,
    )


# efficiency table

def cell_status(kind: StatisticKind, density: str, efficiency: float, printed: float,
                tolerance: float) -> Tuple[CellStatus, Optional[str]]:
    note = KNOWN_DISCREPANCIES.get((kind.value, density))
    if note is not None:
        return CellStatus.DISCREPANCY, note
    gap = abs(efficiency - printed)
    if gap <= tolerance:
        return CellStatus.MATCH, None
    if gap <= tolerance + LAST_DIGIT:
        return CellStatus.LAST_DIGIT, f"printed {printed:.3f}, computed {efficiency:.5f}"
    return CellStatus.MISMATCH, None


def table1(
    statistics: Optional[Iterable[Union[str, StatisticKind]]] = None,
    densities: Optional[Iterable[str]] = None,
    tolerance: Optional[float] = None,
    workers: int = 1,
) -> Table1Report:
    """Local Bahadur efficiencies of the eight statistics at the five built-in densities."""
    kinds = tuple(parse_statistic(k) for k in (statistics or STATISTIC_ORDER))
    names = tuple(make_density(n).name for n in (densities or DENSITY_ORDER))
    tolerance = get_config().table_tolerance if tolerance is None else tolerance

    # warm the shared caches before fanning out
    mu0()
    pairs = [(k, n) for k in kinds for n in names]

    def build(pair: Tuple[StatisticKind, str]) -> Table1Cell:
        kind, name = pair
        report = local_index(kind, make_density(name))
        printed = printed_value(kind.value, name)
        status, note = cell_status(kind, name, report.efficiency, printed, tolerance)
        return Table1Cell(kind=kind, density=name, report=report, printed=printed,
                          status=status, note=note)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(build, pairs))
    else:
        cells = [build(p) for p in pairs]

    for cell in cells:
        if cell.status is CellStatus.DISCREPANCY:
            logger.warning(f"{cell.kind.value}/{cell.density}: {cell.note}")
    for note in DOCUMENTED_NOTES:
        logger.warning(note)

    return Table1Report(cells=tuple(cells), statistics=kinds, densities=names, tolerance=tolerance,
                        notes=DOCUMENTED_NOTES)
