"""Small statistical value types: Monte Carlo estimates and empirical laws."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np


@dataclass(frozen=True)
class DensityEstimate:
    """A density value in [0,1] with its Monte Carlo standard error.

    ``stderr`` is the sample standard deviation of the per-draw indicator
    (or indicator product) divided by sqrt(samples).  Exact values carry
    ``stderr = 0.0`` and ``samples = 0``.
    """

    value: float
    stderr: float
    samples: int

    def agrees_with(self, other: "DensityEstimate", nsigma: float = 4.0,
                    atol: float = 1e-12) -> bool:
        combined = math.hypot(self.stderr, other.stderr)
        return abs(self.value - other.value) <= nsigma * combined + atol


def bernoulli_estimate(successes: float, samples: int) -> DensityEstimate:
    """Estimate for a mean of 0/1 draws given the success count."""
    if samples <= 0:
        raise ValueError("samples must be positive")
    p = successes / samples
    if samples > 1:
        # sample variance of a Bernoulli column with ddof=1
        var = samples / (samples - 1) * p * (1.0 - p)
        stderr = math.sqrt(var / samples)
    else:
        stderr = 0.0
    return DensityEstimate(p, stderr, samples)


class EmpiricalDistribution:
    """A sorted sample of reals in [0,1] with CDF/quantile evaluation."""

    def __init__(self, values: Iterable[float]):
        arr = np.sort(np.asarray(list(values) if not isinstance(values, np.ndarray)
                                 else values, dtype=float))
        if arr.size == 0:
            raise ValueError("empty sample")
        self._values = arr

    @property
    def values(self) -> np.ndarray:
        return self._values

    def __len__(self) -> int:
        return self._values.size

    def mean(self) -> float:
        return float(self._values.mean())

    def cdf(self, x) -> float | np.ndarray:
        """Right-continuous empirical CDF."""
        out = np.searchsorted(self._values, x, side="right") / self._values.size
        return float(out) if np.isscalar(x) else out

    def quantile(self, q: float) -> float:
        if not 0.0 <= q <= 1.0:
            raise ValueError("quantile level must be in [0,1]")
        idx = min(int(math.ceil(q * len(self))) - 1, len(self) - 1)
        return float(self._values[max(idx, 0)])

    def ks_distance(self, cdf: Callable[[np.ndarray], np.ndarray]) -> float:
        """Kolmogorov-Smirnov distance against a continuous reference CDF."""
        n = self._values.size
        f = np.asarray(cdf(self._values), dtype=float)
        steps_hi = np.arange(1, n + 1) / n
        steps_lo = np.arange(0, n) / n
        return float(max(np.max(steps_hi - f), np.max(f - steps_lo)))

    def mass_at_least(self, x: float) -> float:
        """Fraction of the sample that is >= x."""
        return 1.0 - np.searchsorted(self._values, x, side="left") / self._values.size

    def mass_in(self, lo: float, hi: float) -> float:
        """Fraction of the sample in the half-open window [lo, hi)."""
        a = np.searchsorted(self._values, lo, side="left")
        b = np.searchsorted(self._values, hi, side="left")
        return (b - a) / self._values.size
