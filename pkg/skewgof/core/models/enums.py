"""
Enumerations shared across the skewgof package.
"""

from enum import Enum
from typing import List


class StatisticKind(Enum):
    """The four classical and four integrated goodness-of-fit statistics"""
    D = "D"
    W1 = "W1"
    W2 = "W2"
    U2 = "U2"
    DBAR = "Dbar"
    W1BAR = "W1bar"
    W2BAR = "W2bar"
    U2BAR = "U2bar"

    @property
    def is_integrated(self) -> bool:
        return self in (StatisticKind.DBAR, StatisticKind.W1BAR,
                        StatisticKind.W2BAR, StatisticKind.U2BAR)

    @property
    def is_signed(self) -> bool:
        """W1 and W1bar take both signs; all other statistics are nonnegative"""
        return self in (StatisticKind.W1, StatisticKind.W1BAR)

    @property
    def is_quadratic(self) -> bool:
        """Quadratic statistics carry n (not sqrt n) and converge to b without squaring"""
        return self in (StatisticKind.W2, StatisticKind.U2,
                        StatisticKind.W2BAR, StatisticKind.U2BAR)

    @property
    def label(self) -> str:
        return _LABELS[self]

    @classmethod
    def names(cls) -> List[str]:
        return [k.value for k in cls]


_LABELS = {
    StatisticKind.D: "D_n",
    StatisticKind.W1: "omega_n^1",
    StatisticKind.W2: "omega_n^2",
    StatisticKind.U2: "U_n^2",
    StatisticKind.DBAR: "Dbar_n",
    StatisticKind.W1BAR: "omegabar_n^1",
    StatisticKind.W2BAR: "omegabar_n^2",
    StatisticKind.U2BAR: "Ubar_n^2",
}


class DensityKind(Enum):
    """The built-in symmetric densities"""
    NORMAL = "normal"
    LOGISTIC = "logistic"
    ARCSINE = "arcsine"
    UNIFORM = "uniform"
    STUDENT5 = "student5"

    @classmethod
    def names(cls) -> List[str]:
        return [k.value for k in cls]


class Alternative(Enum):
    """Rejection region for a test statistic"""
    TWO_SIDED = "two-sided"
    GREATER = "greater"
    LESS = "less"

    @classmethod
    def default_for(cls, kind: StatisticKind) -> "Alternative":
        return cls.TWO_SIDED if kind.is_signed else cls.GREATER


class OutputFormat(Enum):
    """Output format options"""
    TEXT = "text"
    CSV = "csv"
    JSON = "json"
    LATEX = "latex"


class CellStatus(Enum):
    """Outcome of comparing a computed value with a printed reference value"""
    MATCH = "match"
    LAST_DIGIT = "last-digit"
    DISCREPANCY = "discrepancy"
    MISMATCH = "mismatch"


class VerificationSuite(Enum):
    """Named groups of verification checks"""
    CONDITIONS = "conditions"
    SLOPES = "slopes"
    LAO = "lao"
    EIGEN = "eigen"
    STATISTICS = "statistics"

    @classmethod
    def names(cls) -> List[str]:
        return [k.value for k in cls]
