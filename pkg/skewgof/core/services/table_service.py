"""
Orchestration used by the CLI: efficiency tables, null-table resolution
through the cache, goodness-of-fit decisions on user data and power studies.
"""

import logging
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

import numpy as np

from ...config import GofConfig
from ..calculators.gof_statistics import pit, compute
from ..calculators.local_efficiency import table1
from ..models.density import Density
from ..models.enums import StatisticKind, Alternative
from ..models.reports import NullTable, PowerCurve, Table1Report, TestDecision
from ..utils.validation import parse_statistics, parse_alternative, validate_level
from .cache_service import NullTableCache
from .montecarlo import critical_value_for, null_tables, power_curve, table_levels

logger = logging.getLogger(__name__)


def efficiency_table(config: GofConfig, tolerance: Optional[float] = None) -> Table1Report:
    return table1(tolerance=config.table_tolerance if tolerance is None else tolerance,
                  workers=config.workers)


def resolve_null_tables(
    kinds: Iterable[StatisticKind],
    n: int,
    config: GofConfig,
    levels: Optional[Sequence[float]] = None,
) -> Dict[StatisticKind, NullTable]:
    """Null tables from the cache, simulating (and caching) whatever is missing."""
    kinds = parse_statistics(kinds)
    levels = table_levels([config.level]) if levels is None else list(levels)
    cache = NullTableCache(config.cache_dir, enabled=config.use_cache)

    found = {k: cache.load(k, n, config.replicates, config.seed, levels) for k in kinds}
    missing = [k for k, table in found.items() if table is None]
    if missing:
        simulated = null_tables(missing, n, config.replicates, config.seed, levels, config.workers)
        for kind, table in simulated.items():
            cache.store(table, levels)
            found[kind] = table
    return {k: found[k] for k in kinds}


def run_test(
    raw: Sequence[float],
    density: Density,
    kinds: Iterable[StatisticKind],
    config: GofConfig,
    level: Optional[float] = None,
    alternatives: Optional[Mapping[StatisticKind, Alternative]] = None,
    line_numbers: Optional[Sequence[int]] = None,
    tables: Optional[Mapping[StatisticKind, NullTable]] = None,
) -> List[TestDecision]:
    """Test H0: theta = 0 with each requested statistic."""
    kinds = parse_statistics(kinds)
    level = validate_level(config.level if level is None else level)
    sample = pit(np.asarray(raw, dtype=float), density, line_numbers)
    if tables is None:
        tables = resolve_null_tables(kinds, sample.n, config, table_levels([level]))

    decisions = []
    for result in compute(kinds, sample):
        alternative = parse_alternative((alternatives or {}).get(result.kind), result.kind)
        table = tables.get(result.kind)
        critical = critical_value_for(table, result.kind, sample.n, level, alternative)
        decisions.append(TestDecision(
            kind=result.kind,
            value=result.value,
            n=result.n,
            critical_value=critical,
            level=level,
            alternative=alternative,
            reject=table.rejects(result.value, level, alternative),
        ))
    return decisions


def run_power_study(
    kind: StatisticKind,
    f: Density,
    G: Density,
    thetas: Sequence[float],
    n: int,
    config: GofConfig,
    level: Optional[float] = None,
    alternative: Optional[Alternative] = None,
) -> PowerCurve:
    level = validate_level(config.level if level is None else level)
    table = resolve_null_tables([kind], n, config, table_levels([level]))[kind]
    return power_curve(kind, f, G, thetas, n, level, config.replicates, config.seed,
                       table, alternative, config.workers)
