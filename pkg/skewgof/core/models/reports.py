"""
Report types returned by the efficiency engine, the Monte Carlo services
and the verification suites. Every report serializes through to_dict().
"""

from dataclasses import dataclass, field, asdict
from typing import Dict, Any, List, Optional, Tuple

from ..._version import __version__
from .enums import StatisticKind, Alternative, CellStatus

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class DensityFunctionals:
    """The v- and q-functionals every local index is built from"""
    density: str
    sup_v: float
    int_vf: float
    int_v2f: float
    sup_q: float
    int_qf: float
    int_q2f: float

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class LocalIndexReport:
    kind: StatisticKind
    density: str
    functionals: DensityFunctionals
    index: float
    variance: float
    efficiency: float

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "statistic": self.kind.value,
            "density": self.density,
            "index": self.index,
            "variance": self.variance,
            "efficiency": self.efficiency,
        }
        data.update({k: v for k, v in self.functionals.to_dict().items() if k != "density"})
        return data


@dataclass(frozen=True)
class EigenConstants:
    kappa: Tuple[float, ...]
    residuals: Tuple[float, ...]

    @property
    def mu0(self) -> float:
        return self.kappa[0] ** 4

    def to_dict(self) -> Dict[str, Any]:
        return {"kappa": list(self.kappa), "residuals": list(self.residuals), "mu0": self.mu0}


@dataclass(frozen=True)
class LaoReport:
    kind: StatisticKind
    density: str
    efficiency: float
    is_lao: bool
    residual_name: Optional[str] = None
    residual: Optional[float] = None
    fitted_constant: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["kind"] = self.kind.value
        return data


@dataclass(frozen=True)
class ConditionReport:
    """Convergence of a local expansion along a shrinking theta grid"""
    name: str
    density: str
    skewing: str
    thetas: Tuple[float, ...]
    values: Tuple[float, ...]
    target: float
    converging: bool

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class Table1Cell:
    kind: StatisticKind
    density: str
    report: LocalIndexReport
    printed: float
    status: CellStatus
    note: Optional[str] = None

    @property
    def efficiency(self) -> float:
        return self.report.efficiency

    @property
    def difference(self) -> float:
        return self.report.efficiency - self.printed

    def to_dict(self) -> Dict[str, Any]:
        data = self.report.to_dict()
        data.update({
            "printed": self.printed,
            "difference": self.difference,
            "status": self.status.value,
            "note": self.note,
        })
        return data


@dataclass(frozen=True)
class Table1Report:
    cells: Tuple[Table1Cell, ...]
    statistics: Tuple[StatisticKind, ...]
    densities: Tuple[str, ...]
    tolerance: float
    notes: Tuple[str, ...] = ()

    def cell(self, kind: StatisticKind, density: str) -> Table1Cell:
        for c in self.cells:
            if c.kind is kind and c.density == density:
                return c
        raise KeyError((kind, density))

    def row(self, kind: StatisticKind) -> List[float]:
        return [self.cell(kind, d).efficiency for d in self.densities]

    @property
    def mismatches(self) -> List[Table1Cell]:
        return [c for c in self.cells if c.status is CellStatus.MISMATCH]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "tolerance": self.tolerance,
            "statistics": [k.value for k in self.statistics],
            "densities": list(self.densities),
            "cells": [c.to_dict() for c in self.cells],
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class NullTable:
    """Simulated null critical values of one statistic at one sample size"""
    kind: StatisticKind
    n: int
    replicates: int
    seed: int
    upper: Dict[float, float]
    lower: Dict[float, float]
    absolute: Dict[float, float]
    quantile_method: str = "linear"

    @property
    def levels(self) -> List[float]:
        return sorted(self.upper)

    def critical_value(self, level: float, alternative: Alternative) -> float:
        """Critical value for a test of size `level` (e.g. 0.05)"""
        key = level_key(1.0 - level)
        table = {
            Alternative.GREATER: self.upper,
            Alternative.TWO_SIDED: self.absolute,
            Alternative.LESS: self.lower,
        }[alternative]
        if key not in table:
            raise KeyError(key)
        return table[key]

    def rejects(self, value: float, level: float, alternative: Alternative) -> bool:
        critical = self.critical_value(level, alternative)
        if alternative is Alternative.TWO_SIDED:
            return abs(value) > critical
        if alternative is Alternative.LESS:
            return value < critical
        return value > critical

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": self.kind.value,
            "n": self.n,
            "replicates": self.replicates,
            "package_version": __version__,
            "seed": self.seed,
            "quantile_method": self.quantile_method,
            "upper": {str(k): v for k, v in sorted(self.upper.items())},
            "lower": {str(k): v for k, v in sorted(self.lower.items())},
            "absolute": {str(k): v for k, v in sorted(self.absolute.items())},
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "NullTable":
        return cls(
            kind=StatisticKind(data["kind"]),
            n=int(data["n"]),
            replicates=int(data["replicates"]),
            seed=int(data["seed"]),
            upper={float(k): float(v) for k, v in data["upper"].items()},
            lower={float(k): float(v) for k, v in data["lower"].items()},
            absolute={float(k): float(v) for k, v in data["absolute"].items()},
            quantile_method=data.get("quantile_method", "linear"),
        )


def level_key(level: float) -> float:
    return round(level, 10)


@dataclass(frozen=True)
class PowerPoint:
    theta: float
    power: float
    standard_error: float
    rejections: int


@dataclass(frozen=True)
class PowerCurve:
    kind: StatisticKind
    density: str
    skewing: str
    n: int
    level: float
    alternative: Alternative
    replicates: int
    seed: int
    points: Tuple[PowerPoint, ...]

    @property
    def thetas(self) -> List[float]:
        return [p.theta for p in self.points]

    @property
    def powers(self) -> List[float]:
        return [p.power for p in self.points]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": self.kind.value,
            "density": self.density,
            "skewing": self.skewing,
            "n": self.n,
            "level": self.level,
            "alternative": self.alternative.value,
            "package_version": __version__,
            "replicates": self.replicates,
            "seed": self.seed,
            "points": [asdict(p) for p in self.points],
        }


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    mean: float
    std: float
    standard_error: float
    deviation: float


@dataclass(frozen=True)
class ConvergenceReport:
    """Normalized statistic against its limit b(T, theta) along a grid of n"""
    kind: StatisticKind
    density: str
    skewing: str
    theta: float
    b_value: float
    replicates: int
    seed: int
    rows: Tuple[ConvergenceRow, ...]

    @property
    def final_relative_deviation(self) -> float:
        last = self.rows[-1]
        scale = abs(self.b_value) if self.b_value != 0 else 1.0
        return abs(last.mean - self.b_value) / scale

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": self.kind.value,
            "density": self.density,
            "skewing": self.skewing,
            "theta": self.theta,
            "b_value": self.b_value,
            "replicates": self.replicates,
            "seed": self.seed,
            "rows": [asdict(r) for r in self.rows],
            "final_relative_deviation": self.final_relative_deviation,
        }


@dataclass(frozen=True)
class TestDecision:
    __test__ = False

    kind: StatisticKind
    value: float
    n: int
    critical_value: float
    level: float
    alternative: Alternative
    reject: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "n": self.n,
            "value": self.value,
            "critical_value": self.critical_value,
            "level": self.level,
            "alternative": self.alternative.value,
            "reject": self.reject,
        }


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    value: Optional[float] = None
    expected: Optional[float] = None


@dataclass
class VerificationReport:
    suite: str
    checks: List[CheckResult] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "",
            value: Optional[float] = None, expected: Optional[float] = None) -> None:
        self.checks.append(CheckResult(name, bool(passed), detail, value, expected))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed(self) -> List[str]:
        return [c.name for c in self.checks if not c.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "suite": self.suite,
            "passed": self.passed,
            "checks": [asdict(c) for c in self.checks],
        }
