"""
The skew alternative h(x, theta) = 2 f(x) G(theta x).

Throughout, 2G(y) - 1 is taken from G.centered_cdf, so h = f (1 + eps) with
eps = G.centered_cdf(theta x), and in probability scale w = F(x)

    H(x, theta) - F(x) = int_0^{F(x)} tau(t) dt,   tau(t) = eps(F^{-1}(t)).
"""

import logging
from dataclasses import dataclass, replace
from typing import Callable, Sequence, Union

import numpy as np

from ..models.density import Density
from ..models.reports import ConditionReport
from ...exceptions import GofValidationError
from .distributions import make_density
from .quadrature import integrate_scalar, cumulative_integral

logger = logging.getLogger(__name__)

DEFAULT_THETA_GRID = (1e-1, 1e-2, 1e-3)

SeedLike = Union[int, np.random.SeedSequence, np.random.Generator, None]


@dataclass(frozen=True)
class SkewAlternative:
    """Base density f, skewing law G (only its cdf and g(0) matter) and theta >= 0."""
    f: Density
    G: Density
    theta: float

    def __post_init__(self):
        if not np.isfinite(self.theta) or self.theta < 0:
            raise GofValidationError(
                "theta must be a finite nonnegative number",
                field_name="theta",
                field_value=self.theta,
                expected="theta >= 0"
            )

    @classmethod
    def from_names(cls, f: str, G: str, theta: float) -> "SkewAlternative":
        return cls(make_density(f), make_density(G), float(theta))

    def with_theta(self, theta: float) -> "SkewAlternative":
        return replace(self, theta=float(theta))

    @property
    def label(self) -> str:
        return f"f={self.f.name}, G={self.G.name}, theta={self.theta:g}"


def skew_pdf_unrestricted(f: Density, G: Density, theta: float, x) -> np.ndarray:
    """h(x, theta) for any real theta."""
    x = np.asarray(x, dtype=float)
    return f.pdf(x) * (1.0 + G.centered_cdf(theta * x))


def skew_pdf(a: SkewAlternative, x) -> np.ndarray:
    return skew_pdf_unrestricted(a.f, a.G, a.theta, x)


def shift_profile(f: Density, G: Density, theta: float, scaled: bool = False) -> Callable[[float], float]:
    """tau(t) = 2G(theta F^{-1}(t)) - 1 on (0, 1); divided by theta when scaled."""
    if scaled and theta == 0:
        slope = 2.0 * G.density_at_zero
        return lambda t: slope * float(f.quantile(t))
    divisor = theta if scaled else 1.0

    def tau(t: float) -> float:
        return float(G.centered_cdf(theta * f.quantile(t))) / divisor

    return tau


def skew_cdf(a: SkewAlternative, x) -> Union[float, np.ndarray]:
    """H(x, theta) by quadrature of the shift profile up to F(x)."""
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    tau = shift_profile(a.f, a.G, a.theta)
    out = np.empty_like(xs)
    for i, xi in enumerate(xs):
        w = float(a.f.cdf(xi))
        if w <= 0.0 or w >= 1.0 or a.theta == 0:
            out[i] = w
        else:
            out[i] = min(1.0, max(0.0, w + integrate_scalar(tau, 0.0, w, label="H - F")))
    return float(out[0]) if np.ndim(x) == 0 else out


def sample(a: SkewAlternative, n: int, seed: SeedLike = None) -> np.ndarray:
    """
    Exact draws from h(., theta): keep Z ~ f with probability G(theta Z), else
    return -Z. Works because G is symmetric.
    """
    if n < 1:
        raise GofValidationError("n must be at least 1", field_name="n", field_value=n)
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    z = a.f.sampler(rng, n)
    u = rng.random(n)
    keep = u <= 0.5 * (1.0 + a.G.centered_cdf(a.theta * z))
    return np.where(keep, z, -z)


def _kl_bracket(eps: np.ndarray) -> np.ndarray:
    """(1+e)ln(1+e) + (1-e)ln(1-e), written as ln(1-e^2) + 2e atanh(e)."""
    eps = np.asarray(eps, dtype=float)
    edge = np.abs(eps) >= 1.0
    safe = np.where(edge, 0.0, eps)
    value = np.log1p(-safe * safe) + 2.0 * safe * np.arctanh(safe)
    return np.where(edge, 2.0 * np.log(2.0), value)


def scaled_kullback_leibler(f: Density, G: Density, theta: float) -> float:
    """K(theta) / theta^2, with the theta -> 0 limit 2 g(0)^2 sigma^2(f)."""
    theta = abs(theta)
    if theta == 0:
        return 2.0 * G.density_at_zero ** 2 * f.variance

    def integrand(x: float) -> float:
        return float(f.pdf(x) * _kl_bracket(G.centered_cdf(theta * x))) / theta ** 2

    # the bracket is even in x
    return integrate_scalar(integrand, 0.0, f.support[1], epsabs=0.0, label="K(theta)/theta^2")


def kullback_leibler(a: SkewAlternative) -> float:
    """K(theta) = int h ln(h / f) = 2 int ln(2G(theta x)) f(x) G(theta x) dx."""
    if a.theta == 0:
        return 0.0
    return a.theta ** 2 * scaled_kullback_leibler(a.f, a.G, a.theta)


def _v_callable(d: Density) -> Callable[[np.ndarray], np.ndarray]:
    if d.v_closed is not None:
        return d.v_closed
    from .distributions import numeric_v_q
    v_func, _ = numeric_v_q(d.pdf, d.support)
    return np.vectorize(v_func)


def verify_condition2(
    a: SkewAlternative,
    theta_grid: Sequence[float] = DEFAULT_THETA_GRID,
    grid_points: int = 257,
) -> ConditionReport:
    """
    sup_x |H(x, theta) - F(x) - 2 theta g(0) v(x)| / theta along theta_grid.
    The values must shrink towards 0.
    """
    f, G = a.f, a.G
    g0 = G.density_at_zero
    w = np.linspace(0.0, 1.0, grid_points)
    interior = w[1:-1]
    v_inner = _v_callable(f)(f.quantile(interior))

    values = []
    for theta in theta_grid:
        if theta == 0:
            values.append(0.0)
            continue
        tau = shift_profile(f, G, theta, scaled=True)
        scaled_diff = cumulative_integral(tau, w, label="H - F")[1:-1]
        values.append(float(np.max(np.abs(scaled_diff - 2.0 * g0 * v_inner))))
        logger.debug(f"condition 2, {f.name}/{G.name}, theta={theta:g}: {values[-1]:.3e}")

    order = np.argsort(theta_grid)[::-1]
    ordered = np.asarray(values)[order]
    converging = bool(np.all(np.diff(ordered) <= 1e-8))
    return ConditionReport(
        name="condition2",
        density=f.name,
        skewing=G.name,
        thetas=tuple(float(t) for t in theta_grid),
        values=tuple(values),
        target=0.0,
        converging=converging,
    )


def verify_condition3(
    a: SkewAlternative,
    theta_grid: Sequence[float] = DEFAULT_THETA_GRID,
) -> ConditionReport:
    """K(theta) / (2 g(0)^2 sigma^2(f) theta^2) along theta_grid; the limit is 1."""
    f, G = a.f, a.G
    limit = 2.0 * G.density_at_zero ** 2 * f.variance
    values = [scaled_kullback_leibler(f, G, t) / limit for t in theta_grid]
    order = np.argsort(theta_grid)[::-1]
    gaps = np.abs(np.asarray(values)[order] - 1.0)
    return ConditionReport(
        name="condition3",
        density=f.name,
        skewing=G.name,
        thetas=tuple(float(t) for t in theta_grid),
        values=tuple(float(v) for v in values),
        target=1.0,
        converging=bool(np.all(np.diff(gaps) <= 1e-9)),
    )
