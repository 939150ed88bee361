from .enums import (
    StatisticKind,
    DensityKind,
    Alternative,
    OutputFormat,
    CellStatus,
    VerificationSuite,
)
from .density import Density
from .samples import SortedSample, IntegratedProcess, StatisticResult
from .reports import (
    SCHEMA_VERSION,
    DensityFunctionals,
    LocalIndexReport,
    EigenConstants,
    LaoReport,
    ConditionReport,
    Table1Cell,
    Table1Report,
    NullTable,
    PowerPoint,
    PowerCurve,
    ConvergenceRow,
    ConvergenceReport,
    TestDecision,
    CheckResult,
    VerificationReport,
)
