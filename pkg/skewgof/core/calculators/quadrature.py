"""
Thin wrappers around scipy's adaptive quadrature and root finding that
turn silent accuracy loss into GofNumericError.
"""

import logging
import warnings
from typing import Callable, Optional, Sequence

import numpy as np
from scipy import integrate, optimize

from ...config import get_config
from ...exceptions import GofNumericError

logger = logging.getLogger(__name__)

# An error estimate above this (absolute, or relative to the result) is a failure.
FAILURE_THRESHOLD = 1e-7


def integrate_scalar(
    func: Callable[[float], float],
    a: float,
    b: float,
    *,
    epsabs: Optional[float] = None,
    epsrel: Optional[float] = None,
    points: Optional[Sequence[float]] = None,
    limit: int = 200,
    label: str = "integral",
) -> float:
    """Adaptive Gauss-Kronrod integral of func over [a, b] (infinite ends allowed)."""
    if a == b:
        return 0.0
    config = get_config()
    epsabs = config.quad_epsabs if epsabs is None else epsabs
    epsrel = config.quad_epsrel if epsrel is None else epsrel

    kwargs = {"epsabs": epsabs, "epsrel": epsrel, "limit": limit, "full_output": 1}
    if points is not None and np.isfinite(a) and np.isfinite(b):
        inner = [p for p in points if min(a, b) < p < max(a, b)]
        if inner:
            kwargs["points"] = inner

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        result = integrate.quad(func, a, b, **kwargs)

    value, abserr = float(result[0]), float(result[1])
    message = result[3] if len(result) > 3 else None
    if not np.isfinite(value) or abserr > FAILURE_THRESHOLD * max(1.0, abs(value)):
        raise GofNumericError(
            f"Quadrature of {label} over [{a}, {b}] did not converge"
            + (f": {message}" if message else ""),
            achieved_error=abserr,
            requested_tolerance=max(epsabs, epsrel * abs(value)),
            input_values={"lower": a, "upper": b, "label": label},
        )
    if message:
        logger.debug(f"{label} on [{a}, {b}]: {value:.12g} (err {abserr:.2e}; {message})")
    return value


def find_root(
    func: Callable[[float], float],
    lower: float,
    upper: float,
    *,
    xtol: float = 1e-15,
    label: str = "root",
) -> float:
    """Bracketed root by Brent's method."""
    f_lo, f_hi = func(lower), func(upper)
    if not (np.isfinite(f_lo) and np.isfinite(f_hi)) or np.sign(f_lo) == np.sign(f_hi):
        raise GofNumericError(
            f"{label}: no sign change on [{lower}, {upper}]",
            input_values={"lower": lower, "upper": upper, "f_lower": f_lo, "f_upper": f_hi},
        )
    root, info = optimize.brentq(func, lower, upper, xtol=xtol, rtol=4 * np.finfo(float).eps,
                                 maxiter=200, full_output=True, disp=False)
    if not info.converged:
        raise GofNumericError(f"{label}: root finder did not converge ({info.flag})")
    logger.debug(f"{label} in [{lower}, {upper}] -> {root!r} after {info.iterations} iterations")
    return float(root)


def maximize_on_bracket(
    func: Callable[[float], float],
    lower: float,
    upper: float,
    *,
    xatol: float = 1e-12,
) -> float:
    """Maximum of func on [lower, upper] by bounded Brent search, endpoints included."""
    candidates = [func(lower), func(upper)]
    if upper > lower:
        res = optimize.minimize_scalar(lambda x: -func(x), bounds=(lower, upper),
                                       method="bounded", options={"xatol": xatol})
        candidates.append(-float(res.fun))
    return float(max(candidates))


def cumulative_integral(
    func: Callable[[float], float],
    grid: np.ndarray,
    *,
    label: str = "cumulative integral",
) -> np.ndarray:
    """int_{grid[0]}^{grid[i]} func for every grid point, summed over consecutive cells."""
    pieces = [integrate_scalar(func, lo, hi, label=label) for lo, hi in zip(grid[:-1], grid[1:])]
    return np.concatenate(([0.0], np.cumsum(pieces)))
