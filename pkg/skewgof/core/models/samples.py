"""
Sample and statistic value types.
"""

from dataclasses import dataclass
from typing import Dict, Any, Sequence, Union
import numpy as np
from numpy.polynomial import polynomial as P

from .enums import StatisticKind
from ...exceptions import GofValidationError


@dataclass(frozen=True)
class SortedSample:
    """Ascending probability-integral-transformed sample in [0, 1]"""
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1 or values.size < 1:
            raise GofValidationError(
                "A sample needs at least one value",
                field_name="values",
                field_value=values.size,
                expected="n >= 1"
            )
        if not np.all(np.isfinite(values)) or values[0] < 0.0 or values[-1] > 1.0:
            raise GofValidationError(
                "Sample values must lie in [0, 1]",
                field_name="values",
                expected="values in [0, 1]"
            )
        if np.any(np.diff(values) < 0):
            raise GofValidationError("Sample values must be sorted", field_name="values")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_unsorted(cls, values: Union[Sequence[float], np.ndarray]) -> "SortedSample":
        return cls(np.sort(np.asarray(values, dtype=float)))

    @property
    def n(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True)
class IntegratedProcess:
    """
    Exact piecewise-quadratic representation of A_n(u) = int_0^u alpha_n(s) ds.

    Segment k runs over [breakpoints[k], breakpoints[k+1]] and carries
    A_n(u) = sqrt(n) * (coefficients[0, k] + coefficients[1, k] * u + coefficients[2, k] * u**2).
    """
    breakpoints: np.ndarray
    coefficients: np.ndarray
    n: int

    @property
    def segments(self) -> int:
        return int(self.coefficients.shape[1])

    @property
    def slopes(self) -> np.ndarray:
        """G_n on each segment; also the location of each parabola's vertex"""
        return self.coefficients[1]

    def evaluate(self, u: Union[float, np.ndarray]) -> np.ndarray:
        """Vectorized evaluation of A_n at points of [0, 1]"""
        u = np.asarray(u, dtype=float)
        if np.any((u < 0.0) | (u > 1.0)):
            raise GofValidationError("A_n is defined on [0, 1]", field_name="u")
        k = np.searchsorted(self.breakpoints, u, side="right") - 1
        k = np.clip(k, 0, self.segments - 1)
        return np.sqrt(self.n) * P.polyval(u, self.coefficients[:, k], tensor=False)


@dataclass(frozen=True)
class StatisticResult:
    """A computed statistic value with the sample size it was computed at"""
    kind: StatisticKind
    value: float
    n: int

    @property
    def normalized(self) -> float:
        """T_n / sqrt(n) for linear statistics, T_n / n for quadratic ones"""
        return self.value / (self.n if self.kind.is_quadratic else np.sqrt(self.n))

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind.value, "n": self.n, "value": self.value}
