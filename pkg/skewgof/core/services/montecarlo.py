"""
Seeded Monte Carlo: null distributions and critical values, power under skew
alternatives, and the empirical limit of the normalized statistics.

Replicate r of a simulation draws from
SeedSequence(seed, spawn_key=(stream, ..., r)), so each replicate owns its
random stream and results do not depend on how replicates are split across
workers.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..calculators.gof_statistics import statistic_values
from ..calculators.local_efficiency import b_function
from ..calculators.skew_model import SkewAlternative, sample
from ..models.density import Density
from ..models.enums import StatisticKind, Alternative
from ..models.reports import (
    NullTable,
    PowerPoint,
    PowerCurve,
    ConvergenceRow,
    ConvergenceReport,
)
from ..models.reports import level_key
from ..utils.validation import (
    parse_statistics,
    parse_alternative,
    validate_level,
    validate_sample_size,
    validate_theta_grid,
)
from ...exceptions import GofDependencyError, GofValidationError

logger = logging.getLogger(__name__)

NULL_STREAM = 0
ALTERNATIVE_STREAM = 1
CONVERGENCE_STREAM = 2

DEFAULT_LEVELS = (0.90, 0.95, 0.99)
MIN_NULL_REPLICATES = 1000
QUANTILE_METHOD = "linear"


def replicate_rng(seed: int, *key: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=tuple(int(k) for k in key)))


def _run_replicates(
    task: Callable[[int], np.ndarray],
    replicates: int,
    width: int,
    workers: int = 1,
) -> np.ndarray:
    """Row r of the result is task(r); rows are filled by index, never by completion order."""
    out = np.empty((replicates, width), dtype=float)

    def run_chunk(bounds: Tuple[int, int]) -> None:
        for r in range(*bounds):
            out[r] = task(r)

    if workers <= 1 or replicates < 2 * workers:
        run_chunk((0, replicates))
    else:
        edges = np.linspace(0, replicates, 4 * workers + 1).astype(int)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(run_chunk, zip(edges[:-1], edges[1:])))
    return out


def simulate_null(
    kinds: Iterable[StatisticKind],
    n: int,
    replicates: int,
    seed: int,
    density: Optional[Density] = None,
    workers: int = 1,
) -> Dict[StatisticKind, np.ndarray]:
    """
    Null values of each statistic. Uniform samples by default; with `density`
    the sample is drawn from it and transformed by its cdf.
    """
    kinds = parse_statistics(kinds)
    validate_sample_size(n)
    validate_sample_size(replicates, field_name="replicates")

    def task(r: int) -> np.ndarray:
        rng = replicate_rng(seed, NULL_STREAM, r)
        if density is None:
            u = np.sort(rng.random(n))
        else:
            u = np.sort(density.cdf(density.sampler(rng, n)))
        values = statistic_values(u)
        return np.array([values[k] for k in kinds])

    logger.info(f"simulating {replicates} null replicates at n={n}"
                + (f" under {density.name}" if density is not None else ""))
    table = _run_replicates(task, replicates, len(kinds), workers)
    return {k: table[:, i] for i, k in enumerate(kinds)}


def _quantiles(values: np.ndarray, levels: Sequence[float]) -> Dict[float, float]:
    return {level_key(p): float(np.quantile(values, p, method=QUANTILE_METHOD)) for p in levels}


def table_from_values(kind: StatisticKind, values: np.ndarray, n: int, seed: int,
                      levels: Sequence[float] = DEFAULT_LEVELS) -> NullTable:
    levels = sorted({level_key(p) for p in levels})
    return NullTable(
        kind=kind,
        n=n,
        replicates=int(values.size),
        seed=seed,
        upper=_quantiles(values, levels),
        lower={p: float(np.quantile(values, 1.0 - p, method=QUANTILE_METHOD)) for p in levels},
        absolute=_quantiles(np.abs(values), levels),
        quantile_method=QUANTILE_METHOD,
    )


def table_levels(extra_levels: Iterable[float] = ()) -> List[float]:
    """Tabulated quantile levels: 0.90, 0.95, 0.99 plus 1 - alpha for each requested alpha."""
    return sorted({level_key(p) for p in DEFAULT_LEVELS} |
                  {level_key(1.0 - validate_level(a)) for a in extra_levels})


def null_tables(
    kinds: Iterable[StatisticKind],
    n: int,
    replicates: int,
    seed: int,
    levels: Sequence[float] = DEFAULT_LEVELS,
    workers: int = 1,
) -> Dict[StatisticKind, NullTable]:
    """Null tables of several statistics from one shared simulation."""
    if replicates < MIN_NULL_REPLICATES:
        raise GofValidationError(
            f"Null tables need at least {MIN_NULL_REPLICATES} replicates",
            field_name="replicates",
            field_value=replicates,
            expected=f">= {MIN_NULL_REPLICATES}",
        )
    simulated = simulate_null(kinds, n, replicates, seed, workers=workers)
    return {k: table_from_values(k, v, n, seed, levels) for k, v in simulated.items()}


def null_table(
    kind: StatisticKind,
    n: int,
    replicates: int,
    seed: int,
    levels: Sequence[float] = DEFAULT_LEVELS,
    workers: int = 1,
) -> NullTable:
    """Empirical (type-7) null quantiles of one statistic."""
    kind = parse_statistics([kind])[0]
    return null_tables([kind], n, replicates, seed, levels, workers)[kind]


def critical_value_for(table: Optional[NullTable], kind: StatisticKind, n: int,
                       level: float, alternative: Alternative) -> float:
    if table is None:
        raise GofDependencyError(
            f"No null table for {kind.value} at n={n}",
            missing=f"nulltable:{kind.value}:n={n}",
        )
    if table.kind is not kind or table.n != n:
        raise GofDependencyError(
            f"Null table is for {table.kind.value} at n={table.n}, not {kind.value} at n={n}",
            missing=f"nulltable:{kind.value}:n={n}",
        )
    try:
        return table.critical_value(level, alternative)
    except KeyError:
        raise GofDependencyError(
            f"Null table for {kind.value} at n={n} has no quantile for level {level}",
            missing=f"nulltable:{kind.value}:n={n}:level={level}",
        )


def power(
    kind: StatisticKind,
    a: SkewAlternative,
    n: int,
    level: float,
    replicates: int,
    seed: int,
    table: Optional[NullTable],
    alternative: Optional[Alternative] = None,
    workers: int = 1,
) -> PowerPoint:
    """Rejection rate of the level-`level` test when sampling from the skew alternative."""
    kind = parse_statistics([kind])[0]
    alternative = parse_alternative(alternative, kind)
    validate_level(level)
    validate_sample_size(n)
    validate_sample_size(replicates, field_name="replicates")
    critical_value_for(table, kind, n, level, alternative)

    def task(r: int) -> np.ndarray:
        x = sample(a, n, replicate_rng(seed, ALTERNATIVE_STREAM, r))
        value = statistic_values(np.sort(a.f.cdf(x)))[kind]
        return np.array([float(table.rejects(value, level, alternative))])

    rejections = int(_run_replicates(task, replicates, 1, workers).sum())
    p = rejections / replicates
    logger.info(f"power of {kind.value} at {a.label}, n={n}: {p:.4f}")
    return PowerPoint(
        theta=a.theta,
        power=p,
        standard_error=float(np.sqrt(p * (1.0 - p) / replicates)),
        rejections=rejections,
    )


def power_curve(
    kind: StatisticKind,
    f: Density,
    G: Density,
    thetas: Sequence[float],
    n: int,
    level: float,
    replicates: int,
    seed: int,
    table: Optional[NullTable],
    alternative: Optional[Alternative] = None,
    workers: int = 1,
) -> PowerCurve:
    kind = parse_statistics([kind])[0]
    alternative = parse_alternative(alternative, kind)
    grid = validate_theta_grid(thetas)
    points = tuple(
        power(kind, SkewAlternative(f, G, t), n, level, replicates, seed, table, alternative, workers)
        for t in grid
    )
    return PowerCurve(
        kind=kind,
        density=f.name,
        skewing=G.name,
        n=n,
        level=level,
        alternative=alternative,
        replicates=replicates,
        seed=seed,
        points=points,
    )


def verify_b_convergence(
    kind: StatisticKind,
    a: SkewAlternative,
    n_grid: Sequence[int] = (100, 1000, 10000),
    replicates: int = 200,
    seed: int = 0,
    workers: int = 1,
) -> ConvergenceReport:
    """
    Mean and spread of T_n / sqrt(n) (linear statistics) or T_n / n (quadratic
    statistics) under the alternative, against the exact b(T, theta).
    """
    kind = parse_statistics([kind])[0]
    for n in n_grid:
        validate_sample_size(n)
    validate_sample_size(replicates, minimum=2, field_name="replicates")
    b = b_function(kind, a)

    rows = []
    for n in n_grid:
        scale = float(n) if kind.is_quadratic else float(np.sqrt(n))

        def task(r: int, n: int = n, scale: float = scale) -> np.ndarray:
            x = sample(a, n, replicate_rng(seed, CONVERGENCE_STREAM, n, r))
            return np.array([statistic_values(np.sort(a.f.cdf(x)))[kind] / scale])

        values = _run_replicates(task, replicates, 1, workers)[:, 0]
        mean, std = float(np.mean(values)), float(np.std(values, ddof=1))
        rows.append(ConvergenceRow(
            n=n,
            mean=mean,
            std=std,
            standard_error=std / np.sqrt(replicates),
            deviation=abs(mean - b),
        ))
        logger.info(f"{kind.value} at {a.label}, n={n}: mean {mean:.6g} vs b {b:.6g}")

    return ConvergenceReport(
        kind=kind,
        density=a.f.name,
        skewing=a.G.name,
        theta=a.theta,
        b_value=b,
        replicates=replicates,
        seed=seed,
        rows=tuple(rows),
    )
