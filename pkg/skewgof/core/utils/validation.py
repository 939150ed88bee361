"""
Shared argument validation for the library and the CLI.
"""

import math
from typing import Iterable, List, Optional, Sequence, Union

from ..models.enums import StatisticKind, Alternative
from ...exceptions import GofConfigurationError, GofValidationError


def parse_statistic(kind: Union[str, StatisticKind]) -> StatisticKind:
    """Statistic kind from its name (D, W1, W2, U2, Dbar, W1bar, W2bar, U2bar)."""
    if isinstance(kind, StatisticKind):
        return kind
    for candidate in StatisticKind:
        if candidate.value.lower() == str(kind).strip().lower():
            return candidate
    raise GofConfigurationError(
        f"Unknown statistic: {kind}",
        config_field="statistic",
        valid_values=StatisticKind.names(),
    )


def parse_statistics(kinds: Optional[Union[str, Iterable[Union[str, StatisticKind]]]]) -> List[StatisticKind]:
    """A comma separated list or an iterable of names; None or "all" means all eight."""
    if kinds is None:
        return list(StatisticKind)
    if isinstance(kinds, str):
        if kinds.strip().lower() == "all":
            return list(StatisticKind)
        kinds = [k for k in kinds.split(",") if k.strip()]
    parsed = [parse_statistic(k) for k in kinds]
    if not parsed:
        raise GofValidationError("At least one statistic is required", field_name="statistic")
    return list(dict.fromkeys(parsed))


def parse_alternative(value: Optional[Union[str, Alternative]], kind: StatisticKind) -> Alternative:
    if value is None:
        return Alternative.default_for(kind)
    if isinstance(value, Alternative):
        return value
    try:
        return Alternative(value)
    except ValueError:
        raise GofConfigurationError(
            f"Unknown alternative: {value}",
            config_field="alternative",
            valid_values=[a.value for a in Alternative],
        )


def validate_theta(theta: float) -> float:
    if not isinstance(theta, (int, float)) or not math.isfinite(theta) or theta < 0:
        raise GofValidationError(
            "theta must be a finite nonnegative number",
            field_name="theta",
            field_value=theta,
            expected="theta >= 0",
        )
    return float(theta)


def validate_theta_grid(thetas: Sequence[float], positive: bool = False) -> List[float]:
    grid = [validate_theta(t) for t in thetas]
    if not grid:
        raise GofValidationError("theta grid is empty", field_name="theta_grid")
    if positive and min(grid) <= 0:
        raise GofValidationError("theta grid must be positive", field_name="theta_grid",
                                 field_value=grid)
    return grid


def validate_sample_size(n: int, minimum: int = 1, field_name: str = "n") -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < minimum:
        raise GofValidationError(
            f"{field_name} must be an integer >= {minimum}",
            field_name=field_name,
            field_value=n,
            expected=f">= {minimum}",
        )
    return n


def validate_level(level: float) -> float:
    if not isinstance(level, (int, float)) or not 0.0 < level < 1.0:
        raise GofValidationError(
            "level must lie strictly between 0 and 1",
            field_name="level",
            field_value=level,
            expected="0 < level < 1",
        )
    return float(level)
