"""
Registry of the built-in symmetric densities and the v / q helper functions

    v(x) = int_{-inf}^x u f(u) du,        q(s) = int_{-inf}^s v(x) f(x) dx.

Closed forms are used where known; any other symmetric density gets
quadrature-backed v and q through numeric_v_q.
"""

import logging
from typing import Callable, Dict, Tuple, Union

import numpy as np
from scipy import special

from ..models.density import Density
from ..models.enums import DensityKind
from ...exceptions import GofConfigurationError, GofValidationError, GofNumericError
from .quadrature import integrate_scalar

logger = logging.getLogger(__name__)

SQRT_2PI = np.sqrt(2.0 * np.pi)
SQRT_PI = np.sqrt(np.pi)


# normal

def _normal_pdf(x):
    x = np.asarray(x, dtype=float)
    return np.exp(-0.5 * x * x) / SQRT_2PI


def _normal_v(x):
    return -_normal_pdf(x)


def _normal_q(s):
    return -special.ndtr(np.asarray(s, dtype=float) * np.sqrt(2.0)) / (2.0 * SQRT_PI)


def _normal_sampler(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.standard_normal(n)


# logistic

def _logistic_pdf(x):
    p = special.expit(np.asarray(x, dtype=float))
    return p * (1.0 - p)


def _logistic_v(x):
    x = np.asarray(x, dtype=float)
    return x * special.expit(x) - np.logaddexp(0.0, x)


def _logistic_q(s):
    s = np.asarray(s, dtype=float)
    p = special.expit(s)
    log1pexp = np.logaddexp(0.0, s)
    # 0 * inf at s = +-inf
    with np.errstate(invalid="ignore"):
        value = 0.5 * ((1.0 - p) + s * p * p - (2.0 * p - 1.0) * log1pexp) - 0.5
    return np.where(np.isposinf(s), -0.5, np.where(np.isneginf(s), 0.0, value))


def _logistic_sampler(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.logistic(size=n)


# arcsine on [-1, 1]

def _arcsine_pdf(x):
    x = np.asarray(x, dtype=float)
    inside = np.abs(x) < 1.0
    safe = np.where(inside, x, 0.0)
    return np.where(inside, 1.0 / (np.pi * np.sqrt(1.0 - safe * safe)), 0.0)


def _arcsine_centered(x):
    return (2.0 / np.pi) * np.arcsin(np.clip(np.asarray(x, dtype=float), -1.0, 1.0))


def _arcsine_quantile(u):
    return np.sin(np.pi * (np.asarray(u, dtype=float) - 0.5))


def _arcsine_v(x):
    x = np.clip(np.asarray(x, dtype=float), -1.0, 1.0)
    return -np.sqrt(1.0 - x * x) / np.pi


def _arcsine_q(s):
    s = np.clip(np.asarray(s, dtype=float), -1.0, 1.0)
    return -(s + 1.0) / np.pi ** 2


def _arcsine_sampler(rng: np.random.Generator, n: int) -> np.ndarray:
    return _arcsine_quantile(rng.random(n))


# uniform on [-1, 1]

def _uniform_pdf(x):
    x = np.asarray(x, dtype=float)
    return np.where(np.abs(x) <= 1.0, 0.5, 0.0)


def _uniform_centered(x):
    return np.clip(np.asarray(x, dtype=float), -1.0, 1.0)


def _uniform_v(x):
    x = np.clip(np.asarray(x, dtype=float), -1.0, 1.0)
    return -0.25 * (1.0 - x * x)


def _uniform_q(s):
    s = np.clip(np.asarray(s, dtype=float), -1.0, 1.0)
    return (s ** 3 - 3.0 * s - 2.0) / 24.0


def _uniform_sampler(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.uniform(-1.0, 1.0, size=n)


# f(x) = 8 / (3 pi (1 + x^2)^3), a Student t5 variable divided by sqrt(5)

def _student5_pdf(x):
    x = np.asarray(x, dtype=float)
    return 8.0 / (3.0 * np.pi * (1.0 + x * x) ** 3)


def _student5_centered(x):
    x = np.asarray(x, dtype=float)
    r = 1.0 / (1.0 + x * x)
    with np.errstate(invalid="ignore"):
        value = (2.0 / np.pi) * (np.arctan(x) + x * r + (2.0 / 3.0) * x * r * r)
    return np.where(np.isinf(x), np.sign(x), value)


def _student5_cdf(x):
    return 0.5 * (1.0 + _student5_centered(x))


def _student5_quantile(u):
    u = np.asarray(u, dtype=float)
    x = special.stdtrit(5, u) / np.sqrt(5.0)
    finite = np.isfinite(x)
    safe = np.where(finite, x, 0.0)
    # one Newton step against the closed-form cdf
    polished = safe - (_student5_cdf(safe) - u) / _student5_pdf(safe)
    return np.where(finite, polished, np.where(u <= 0.0, -np.inf, np.inf))


def _student5_v(x):
    x = np.asarray(x, dtype=float)
    return -2.0 / (3.0 * np.pi * (1.0 + x * x) ** 2)


def _student5_q(s):
    s = np.asarray(s, dtype=float)
    s2 = s * s
    with np.errstate(invalid="ignore", over="ignore"):
        poly = s * (279.0 + 511.0 * s2 + 385.0 * s2 ** 2 + 105.0 * s2 ** 3) / (1.0 + s2) ** 4
        value = -(poly + 105.0 * np.arctan(s)) / (216.0 * np.pi ** 2) - 35.0 / (144.0 * np.pi)
    limit = np.where(s > 0, -35.0 / (72.0 * np.pi), 0.0)
    return np.where(np.isfinite(value), value, limit)


def _student5_sampler(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.standard_t(5, size=n) / np.sqrt(5.0)


def _build(kind: DensityKind) -> Density:
    if kind is DensityKind.NORMAL:
        return Density(
            name=kind.value, pdf=_normal_pdf, cdf=special.ndtr, quantile=special.ndtri,
            centered_cdf=lambda x: special.erf(np.asarray(x, dtype=float) / np.sqrt(2.0)),
            sampler=_normal_sampler, variance=1.0, support=(-np.inf, np.inf),
            density_at_zero=1.0 / SQRT_2PI, v_closed=_normal_v, q_closed=_normal_q,
        )
    if kind is DensityKind.LOGISTIC:
        return Density(
            name=kind.value, pdf=_logistic_pdf, cdf=special.expit, quantile=special.logit,
            centered_cdf=lambda x: np.tanh(0.5 * np.asarray(x, dtype=float)),
            sampler=_logistic_sampler, variance=np.pi ** 2 / 3.0, support=(-np.inf, np.inf),
            density_at_zero=0.25, v_closed=_logistic_v, q_closed=_logistic_q,
        )
    if kind is DensityKind.ARCSINE:
        return Density(
            name=kind.value, pdf=_arcsine_pdf,
            cdf=lambda x: 0.5 * (1.0 + _arcsine_centered(x)), quantile=_arcsine_quantile,
            centered_cdf=_arcsine_centered, sampler=_arcsine_sampler, variance=0.5,
            support=(-1.0, 1.0), density_at_zero=1.0 / np.pi,
            v_closed=_arcsine_v, q_closed=_arcsine_q,
        )
    if kind is DensityKind.UNIFORM:
        return Density(
            name=kind.value, pdf=_uniform_pdf,
            cdf=lambda x: 0.5 * (1.0 + _uniform_centered(x)),
            quantile=lambda u: 2.0 * np.asarray(u, dtype=float) - 1.0,
            centered_cdf=_uniform_centered, sampler=_uniform_sampler, variance=1.0 / 3.0,
            support=(-1.0, 1.0), density_at_zero=0.5, v_closed=_uniform_v, q_closed=_uniform_q,
        )
    return Density(
        name=kind.value, pdf=_student5_pdf, cdf=_student5_cdf, quantile=_student5_quantile,
        centered_cdf=_student5_centered, sampler=_student5_sampler, variance=1.0 / 3.0,
        support=(-np.inf, np.inf), density_at_zero=8.0 / (3.0 * np.pi),
        v_closed=_student5_v, q_closed=_student5_q,
    )


_REGISTRY: Dict[DensityKind, Density] = {}


def make_density(kind: Union[str, DensityKind]) -> Density:
    """Built-in density by name (normal, logistic, arcsine, uniform, student5)."""
    if isinstance(kind, str):
        try:
            kind = DensityKind(kind.lower())
        except ValueError:
            raise GofConfigurationError(
                f"Unknown density: {kind}",
                config_field="density",
                valid_values=DensityKind.names()
            )
    if kind not in _REGISTRY:
        _REGISTRY[kind] = _build(kind)
    return _REGISTRY[kind]


def all_densities() -> Tuple[Density, ...]:
    return tuple(make_density(k) for k in DensityKind)


def v(d: Density, x: float) -> float:
    """v(x) = int_{-inf}^x u f(u) du."""
    if d.v_closed is not None:
        return float(d.v_closed(x))
    v_func, _ = numeric_v_q(d.pdf, d.support)
    return v_func(x)


def q(d: Density, s: float) -> float:
    """q(s) = int_{-inf}^s v(x) f(x) dx."""
    if d.q_closed is not None:
        return float(d.q_closed(s))
    _, q_func = numeric_v_q(d.pdf, d.support)
    return q_func(s)


def numeric_v_q(
    pdf: Callable[[np.ndarray], np.ndarray],
    support: Tuple[float, float] = (-np.inf, np.inf),
    *,
    check_grid_points: int = 41,
) -> Tuple[Callable[[float], float], Callable[[float], float]]:
    """
    Quadrature-backed v and q for a user supplied symmetric density.

    Raises GofValidationError when the density is visibly asymmetric, does not
    integrate to one, or has no finite variance.
    """
    lo, hi = float(support[0]), float(support[1])
    if lo != -hi:
        raise GofValidationError(
            "Support must be symmetric about 0",
            field_name="support",
            field_value=support,
        )
    edge = hi if np.isfinite(hi) else 10.0
    grid = np.linspace(0.0, edge, check_grid_points)[1:-1]
    left, right = np.asarray(pdf(-grid), dtype=float), np.asarray(pdf(grid), dtype=float)
    if np.any(np.abs(left - right) > 1e-12 * np.maximum(1.0, np.abs(right))):
        raise GofValidationError("Density is not symmetric about 0", field_name="pdf")

    def scalar_pdf(x: float) -> float:
        return float(pdf(np.asarray(x, dtype=float)))

    mass = 2.0 * integrate_scalar(scalar_pdf, 0.0, hi, label="density mass")
    if abs(mass - 1.0) > 1e-8:
        raise GofValidationError(
            f"Density integrates to {mass:.10f}, not 1",
            field_name="pdf",
            field_value=mass,
        )
    try:
        variance = 2.0 * integrate_scalar(lambda x: x * x * scalar_pdf(x), 0.0, hi,
                                          label="second moment")
    except GofNumericError:
        variance = np.inf
    if not np.isfinite(variance):
        raise GofValidationError("Density must have a finite variance", field_name="pdf")

    def v_func(x: float) -> float:
        x = float(x)
        if x <= lo or x >= hi:
            return 0.0
        # v is even; integrate from the nearer tail
        return integrate_scalar(lambda u: u * scalar_pdf(u), lo, -abs(x), label="v")

    def q_func(s: float) -> float:
        s = float(s)
        if s <= lo:
            return 0.0
        upper = min(s, hi)
        return integrate_scalar(lambda x: v_func(x) * scalar_pdf(x), lo, upper,
                                points=(0.0,), label="q")

    logger.debug(f"numeric v/q ready: mass {mass:.12f}, variance {variance:.12g}")
    return v_func, q_func
