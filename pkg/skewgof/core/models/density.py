"""
Symmetric hypothesized density model.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional, Tuple, Dict, Any
import numpy as np

ArrayFunc = Callable[[np.ndarray], np.ndarray]
Sampler = Callable[[np.random.Generator, int], np.ndarray]


@dataclass(frozen=True)
class Density:
    """
    A symmetric law F with finite variance.

    All callables are vectorized over numpy arrays. `centered_cdf` is 2F(x)-1,
    kept separately because it is the quantity the skewing law enters through
    and it stays accurate near x = 0 where F(x) - 1/2 would cancel.
    """
    name: str
    pdf: ArrayFunc
    cdf: ArrayFunc
    quantile: ArrayFunc
    centered_cdf: ArrayFunc
    sampler: Sampler
    variance: float
    support: Tuple[float, float]
    density_at_zero: float
    v_closed: Optional[ArrayFunc] = field(default=None, compare=False)
    q_closed: Optional[ArrayFunc] = field(default=None, compare=False)

    @property
    def is_bounded(self) -> bool:
        return bool(np.isfinite(self.support[1]))

    def in_support(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return (x >= self.support[0]) & (x <= self.support[1])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "variance": self.variance,
            "support": list(self.support),
            "density_at_zero": self.density_at_zero,
            "closed_forms": self.v_closed is not None and self.q_closed is not None,
        }
