"""
skewgof
=======

Classical and integrated empirical-process goodness-of-fit statistics, the
generalized skew alternatives h(x) = 2 f(x) G(theta x), and the local Bahadur
efficiency of every statistic against them.

Basic Usage:
-----------
    from skewgof import make_density, local_index, table1

    # Local index and efficiency of the integrated Cramer-von Mises statistic
    report = local_index("W2bar", make_density("normal"))
    report.efficiency          # 0.912...

    # The whole 8 x 5 efficiency table with its comparison statuses
    table = table1()

Testing Data:
------------
    from skewgof import SkewAlternative, sample, pit, compute

    a = SkewAlternative.from_names("normal", "normal", theta=0.5)
    x = sample(a, 200, seed=1)
    compute(["W2bar", "U2bar"], pit(x, a.f))

CLI Usage:
---------
    skewgof table1 --format json
    skewgof test data.txt --density normal --statistics W2bar,U2bar
    skewgof nulltable --n 50 --statistics all
    skewgof power --statistic Dbar --thetas 0,0.2,0.5 --n 100 --format csv
    skewgof verify eigen
"""

from ._version import __version__
from .config import get_config, set_config, save_config, GofConfig
from .core.models.enums import (
    StatisticKind,
    DensityKind,
    Alternative,
    OutputFormat,
    CellStatus,
    VerificationSuite,
)
from .core.models.density import Density
from .core.models.samples import SortedSample, IntegratedProcess, StatisticResult
from .core.calculators.distributions import make_density, all_densities
from .core.calculators.skew_model import (
    SkewAlternative,
    skew_pdf,
    skew_cdf,
    sample,
    kullback_leibler,
    verify_condition2,
    verify_condition3,
)
from .core.calculators.gof_statistics import (
    pit,
    compute,
    all_stats,
    integrated_process,
    grid_oracle,
    load_sample,
)
from .core.calculators.local_efficiency import (
    eigen_constants,
    mu0,
    density_functionals,
    local_index,
    b_function,
    exact_slope,
    slope_ratio,
    richardson,
    lao_check,
    table1,
)
from .core.services.montecarlo import null_table, power, power_curve, verify_b_convergence
from .core.services.verification_service import run_suite

try:
    from .cli.main import cli
    _CLI_AVAILABLE = True
except ImportError:
    _CLI_AVAILABLE = False
    cli = None

__description__ = "Goodness-of-fit statistics and their local Bahadur efficiency under skew alternatives"
__license__ = "MIT"

__package_name__ = "skew-gof"
__python_requires__ = ">=3.9"

__all__ = [
    # Configuration
    "GofConfig",
    "get_config",
    "set_config",
    "save_config",

    # Types
    "StatisticKind",
    "DensityKind",
    "Alternative",
    "OutputFormat",
    "CellStatus",
    "VerificationSuite",
    "Density",
    "SortedSample",
    "IntegratedProcess",
    "StatisticResult",
    "SkewAlternative",

    # Densities and the skew model
    "make_density",
    "all_densities",
    "skew_pdf",
    "skew_cdf",
    "sample",
    "kullback_leibler",
    "verify_condition2",
    "verify_condition3",

    # Statistics
    "pit",
    "compute",
    "all_stats",
    "integrated_process",
    "grid_oracle",
    "load_sample",

    # Efficiency
    "eigen_constants",
    "mu0",
    "density_functionals",
    "local_index",
    "b_function",
    "exact_slope",
    "slope_ratio",
    "richardson",
    "lao_check",
    "table1",

    # Simulation and verification
    "null_table",
    "power",
    "power_curve",
    "verify_b_convergence",
    "run_suite",

    "__version__",
]

if _CLI_AVAILABLE:
    __all__.append("cli")


def efficiency(statistic, density="normal"):
    """
    Quick access to one local Bahadur efficiency

    Args:
        statistic: statistic name, e.g. "W2bar"
        density: built-in density name

    Returns:
        float in (0, 1]
    """
    return local_index(statistic, make_density(density)).efficiency


__all__.append("efficiency")
