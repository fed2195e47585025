"""Interval space, probability models on it, and sample transforms.

The basic object is a closed subinterval [a,b] of [0,1], identified with a
point of the triangle {(a,b): 0 <= a <= b <= 1}.  A measure model is a
sampleable probability law on that triangle; the built-in families below
cover the uniform triangle, lines x = a*y, fixed-length intervals, the
one-common-point laws whose intersection graphs are complete, unions of
blocks (disjoint cliques), tilted rectangles, mixtures of lines, empirical
laws over a stored interval list, and laws supported on a monotone curve.

Transforms on finite samples (rank normalization of a marginal, reflection)
preserve the induced intersection graph edge-for-edge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import DomainError, ParameterError
from .stats import EmpiricalDistribution


@dataclass(frozen=True)
class Interval:
    """A closed subinterval [left, right] of [0,1]; length 0 is allowed."""

    left: float
    right: float

    def __post_init__(self):
        if not (0.0 <= self.left <= self.right <= 1.0):
            raise ParameterError(
                f"invalid interval [{self.left}, {self.right}]: "
                "need 0 <= left <= right <= 1")

    @property
    def length(self) -> float:
        return self.right - self.left

    def contains(self, x: float) -> bool:
        return self.left <= x <= self.right

    def as_tuple(self) -> tuple[float, float]:
        return (self.left, self.right)


def intervals_to_array(sample) -> np.ndarray:
    """Coerce a sequence of Interval (or an (n,2) array) to an (n,2) array."""
    if isinstance(sample, np.ndarray):
        arr = np.asarray(sample, dtype=float)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ParameterError("endpoint array must have shape (n, 2)")
        return arr
    return np.array([(iv.left, iv.right) for iv in sample],
                    dtype=float).reshape(-1, 2)


def array_to_intervals(arr: np.ndarray) -> list[Interval]:
    return [Interval(float(a), float(b)) for a, b in arr]


@dataclass(frozen=True)
class MonotoneCurve:
    """A weakly increasing piecewise-linear curve t -> (left(t), right(t)).

    Control points are (t_k, left_k, right_k) with all three coordinate
    sequences weakly increasing and left_k <= right_k.  Laws supported on
    such a curve generate proper (unit) interval graphs.
    """

    ts: tuple[float, ...]
    lefts: tuple[float, ...]
    rights: tuple[float, ...]

    def __post_init__(self):
        ts, ls, rs = map(np.asarray, (self.ts, self.lefts, self.rights))
        if not (len(ts) == len(ls) == len(rs)) or len(ts) < 2:
            raise ParameterError("curve needs >= 2 aligned control points")
        if np.any(np.diff(ts) < 0) or np.any(np.diff(ls) < 0) or np.any(np.diff(rs) < 0):
            raise ParameterError("curve coordinates must be weakly increasing")
        if ts[0] == ts[-1]:
            raise ParameterError("curve parameter range is degenerate")
        if np.any(ls > rs) or ls.min() < 0 or rs.max() > 1:
            raise ParameterError("curve must stay inside the interval triangle")

    @classmethod
    def from_points(cls, points: Iterable[tuple[float, float, float]]) -> "MonotoneCurve":
        ts, ls, rs = zip(*points)
        return cls(tuple(map(float, ts)), tuple(map(float, ls)), tuple(map(float, rs)))

    @property
    def t_range(self) -> tuple[float, float]:
        return (self.ts[0], self.ts[-1])

    def evaluate(self, t) -> np.ndarray:
        """Evaluate the curve at parameter values; returns an (n,2) array."""
        t = np.asarray(t, dtype=float)
        left = np.interp(t, self.ts, self.lefts)
        right = np.interp(t, self.ts, self.rights)
        return np.column_stack([left, right])


# ---------------------------------------------------------------------------
# measure models


class MeasureModel:
    """A sampleable probability law on the space of closed subintervals."""

    #: short identifier used in CLI output and seed derivation
    model_id: str = "abstract"

    def sample_array(self, n: int, rng: np.random.Generator) -> np.ndarray:
        """Draw n i.i.d. intervals as an (n,2) endpoint array."""
        raise NotImplementedError

    def omega_value(self) -> tuple[float, float] | None:
        """Closed-form (value, argmax) of the clique functional, if known."""
        return None


@dataclass(frozen=True)
class UniformTriangle(MeasureModel):
    """Uniform law on {(a,b): 0 <= a <= b <= 1} (density 2)."""

    model_id: str = field(default="uniform", init=False)

    def sample_array(self, n, rng):
        u = rng.random((n, 2))
        u.sort(axis=1)
        return u

    def omega_value(self):
        # coverage of a point c is 2*c*(1-c), maximal at c = 1/2
        return (0.5, 0.5)


@dataclass(frozen=True)
class Line(MeasureModel):
    """Uniform law on the line left = a * right: intervals [a*U, U]."""

    a: float

    def __post_init__(self):
        if not 0.0 <= self.a <= 1.0:
            raise ParameterError(f"line slope a={self.a} outside [0,1]")

    @property
    def model_id(self):
        return f"line:{self.a:g}"

    def sample_array(self, n, rng):
        u = rng.random(n)
        return np.column_stack([self.a * u, u])

    def omega_value(self):
        # coverage of c is min(c/a, 1) - c, maximal at c = a
        return (1.0 - self.a, self.a)


@dataclass(frozen=True)
class LineMixture(MeasureModel):
    """Mixture of Line(a) laws: pick a slope by weight, then [a*U, U]."""

    weights: tuple[float, ...]
    a_values: tuple[float, ...]

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        a = np.asarray(self.a_values, dtype=float)
        if w.size == 0 or w.size != a.size:
            raise ParameterError("weights and a-values must align and be nonempty")
        if np.any(w <= 0) or not math.isclose(w.sum(), 1.0, abs_tol=1e-9):
            raise ParameterError("mixture weights must be positive and sum to 1")
        if np.any(a < 0) or np.any(a > 1):
            raise ParameterError("mixture a-values must lie in [0,1]")

    @property
    def model_id(self):
        pairs = ",".join(f"{w:g}@{a:g}" for w, a in zip(self.weights, self.a_values))
        return f"line-mixture:{pairs}"

    def sample_array(self, n, rng):
        idx = rng.choice(len(self.a_values), size=n, p=np.asarray(self.weights))
        a = np.asarray(self.a_values)[idx]
        u = rng.random(n)
        return np.column_stack([a * u, u])


@dataclass(frozen=True)
class FixedLength(MeasureModel):
    """Uniform law on intervals of fixed length r: [X, X+r], X ~ U(0,1-r)."""

    r: float

    def __post_init__(self):
        if not 0.0 < self.r <= 1.0:
            raise ParameterError(f"fixed length r={self.r} outside (0,1]")

    @property
    def model_id(self):
        return f"fixed:{self.r:g}"

    def sample_array(self, n, rng):
        x = rng.random(n) * (1.0 - self.r)
        return np.column_stack([x, x + self.r])

    def omega_value(self):
        if self.r >= 0.5:
            return (1.0, 0.5)
        return (self.r / (1.0 - self.r), self.r)


@dataclass(frozen=True)
class CompleteL(MeasureModel):
    """Law of [U, 1], U ~ U(0,1): every pair shares the point 1."""

    model_id: str = field(default="complete-l", init=False)

    def sample_array(self, n, rng):
        u = rng.random(n)
        return np.column_stack([u, np.ones(n)])

    def omega_value(self):
        return (1.0, 1.0)


@dataclass(frozen=True)
class CompleteR(MeasureModel):
    """Law of [0, U], U ~ U(0,1): every pair shares the point 0."""

    model_id: str = field(default="complete-r", init=False)

    def sample_array(self, n, rng):
        u = rng.random(n)
        return np.column_stack([np.zeros(n), u])

    def omega_value(self):
        return (1.0, 0.0)


@dataclass(frozen=True)
class BlockUnion(MeasureModel):
    """Disjoint-clique law: partition (0,1] into blocks J_i of length p_i,
    draw L uniform and set R to the right end of the containing block."""

    probs: tuple[float, ...]

    def __post_init__(self):
        p = np.asarray(self.probs, dtype=float)
        if p.size == 0 or np.any(p <= 0) or not math.isclose(p.sum(), 1.0, abs_tol=1e-9):
            raise ParameterError("block masses must be positive and sum to 1")

    @property
    def model_id(self):
        return "block:" + ",".join(f"{p:g}" for p in self.probs)

    def block_edges(self) -> np.ndarray:
        return np.concatenate([[0.0], np.cumsum(self.probs)])

    def sample_array(self, n, rng):
        edges = self.block_edges()
        left = rng.random(n)
        idx = np.searchsorted(edges, left, side="left")  # (0,1] blocks
        idx = np.clip(idx, 1, len(edges) - 1)
        return np.column_stack([left, edges[idx]])

    def omega_value(self):
        i = int(np.argmax(self.probs))
        return (float(self.probs[i]), float(self.block_edges()[i + 1]))


@dataclass(frozen=True)
class TiltedRectangle(MeasureModel):
    """Centre/half-width law [X-P, X+P] with X ~ U(0,1), P ~ U(0,r),
    rescaled affinely so all intervals lie inside [0,1]."""

    r: float

    def __post_init__(self):
        if self.r <= 0:
            raise ParameterError(f"half-width bound r={self.r} must be positive")

    @property
    def model_id(self):
        return f"tilted:{self.r:g}"

    def sample_array(self, n, rng):
        x = rng.random(n)
        rho = rng.random(n) * self.r
        scale = 1.0 + 2.0 * self.r
        return np.column_stack([(x - rho + self.r) / scale,
                                (x + rho + self.r) / scale])


@dataclass(frozen=True)
class Empirical(MeasureModel):
    """Uniform resampling with replacement from a stored interval list."""

    intervals: tuple[Interval, ...]

    def __post_init__(self):
        if len(self.intervals) == 0:
            raise ParameterError("empirical model needs at least one interval")

    @property
    def model_id(self):
        return f"empirical[{len(self.intervals)}]"

    @property
    def endpoints(self) -> np.ndarray:
        return intervals_to_array(self.intervals)

    def sample_array(self, n, rng):
        idx = rng.integers(0, len(self.intervals), size=n)
        return self.endpoints[idx]


@dataclass(frozen=True)
class CurveSupported(MeasureModel):
    """Law supported on a monotone curve; the parameter T is uniform on the
    curve's range unless a custom t-law callable(n, rng) is supplied."""

    curve: MonotoneCurve
    t_law: Callable[[int, np.random.Generator], np.ndarray] | None = None

    @property
    def model_id(self):
        return f"curve[{len(self.curve.ts)}pts]"

    def sample_array(self, n, rng):
        if self.t_law is None:
            lo, hi = self.curve.t_range
            t = lo + (hi - lo) * rng.random(n)
        else:
            t = np.asarray(self.t_law(n, rng), dtype=float)
        return self.curve.evaluate(t)


# ---------------------------------------------------------------------------
# sampling and sample transforms


def sample_endpoints(model: MeasureModel, n: int, seed: int) -> np.ndarray:
    """Draw n i.i.d. intervals as an (n,2) array; deterministic given seed."""
    if n < 0:
        raise ParameterError("sample size must be nonnegative")
    rng = np.random.default_rng(seed)
    if n == 0:
        return np.empty((0, 2))
    arr = model.sample_array(n, rng)
    return np.asarray(arr, dtype=float).reshape(n, 2)


def sample(model: MeasureModel, n: int, seed: int) -> list[Interval]:
    """Draw n i.i.d. intervals from the model's law."""
    return array_to_intervals(sample_endpoints(model, n, seed))


def reflect(sample_in) -> list[Interval]:
    """Reflect every interval [a,b] to [1-b,1-a]; an involution that
    preserves the intersection graph exactly."""
    arr = intervals_to_array(sample_in)
    out = np.column_stack([1.0 - arr[:, 1], 1.0 - arr[:, 0]])
    return array_to_intervals(out)


def _tie_broken_endpoints(arr: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Grow each interval by a tiny index-dependent amount so that all
    endpoint values become distinct while the intersection graph is
    unchanged (growth can only re-confirm edges of touching pairs)."""
    n = arr.shape[0]
    values = np.unique(arr)
    gaps = np.diff(values)
    gaps = gaps[gaps > 0]
    eps = (gaps.min() if gaps.size else 1.0) / 4.0
    delta = eps * (np.arange(1, n + 1) / (n + 2.0))
    left = arr[:, 0] - eps + delta     # shifts in (-eps, 0), increasing in index
    right = arr[:, 1] + delta          # shifts in (0, eps), increasing in index
    return left, right


def normalize(sample_in, mode: str) -> list[Interval]:
    """Rank-normalize one marginal of a finite sample.

    Applies a strictly increasing piecewise-linear map to both endpoints of
    every interval; the map sends the tie-broken empirical ranks of the left
    endpoints (mode "L"), right endpoints ("R"), or pooled endpoints ("m")
    onto the grid (2j+1)/(2m).  The intersection graph of the output equals
    that of the input edge-for-edge.  Ties are broken by (value, index).
    """
    arr = intervals_to_array(sample_in)
    n = arr.shape[0]
    if n == 0:
        raise DomainError("cannot normalize an empty sample")
    if mode not in ("L", "R", "m"):
        raise ParameterError(f"unknown normalization mode {mode!r}")

    left, right = _tie_broken_endpoints(arr)
    if mode == "L":
        keys = left
    elif mode == "R":
        keys = right
    else:
        keys = np.concatenate([left, right])
    m = keys.size
    order = np.argsort(keys, kind="stable")
    targets = np.empty(m)
    targets[order] = (2.0 * np.arange(m) + 1.0) / (2.0 * m)

    # interpolation table for the non-anchored endpoints
    xs = keys[order]
    ys = np.sort(targets)
    lo = min(left.min(), xs[0]) - 1.0
    hi = max(right.max(), xs[-1]) + 1.0
    full_xs = np.concatenate([[lo], xs, [hi]])
    full_ys = np.concatenate([[0.0], ys, [1.0]])

    if mode == "L":
        new_left = targets
        new_right = np.interp(right, full_xs, full_ys)
    elif mode == "R":
        new_left = np.interp(left, full_xs, full_ys)
        new_right = targets
    else:
        new_left = targets[:n]
        new_right = targets[n:]
    return array_to_intervals(np.column_stack([new_left, new_right]))


@dataclass(frozen=True)
class MarginalReport:
    """Empirical endpoint marginals plus any exactly-shared atom locations."""

    left_cdf: EmpiricalDistribution
    right_cdf: EmpiricalDistribution
    common_atoms: tuple[tuple[float, float, float], ...]


def marginals(sample_in, atom_tol: float = 0.0) -> MarginalReport:
    """Empirical marginals of a sample with common-atom detection.

    An atom location is flagged when both the left-endpoint and the
    right-endpoint marginal put mass strictly above ``atom_tol`` at exactly
    the same floating-point value.  Continuous models almost surely never
    produce such collisions, so a hit signals a genuine common atom.
    """
    arr = intervals_to_array(sample_in)
    n = arr.shape[0]
    if n == 0:
        raise DomainError("marginals of an empty sample are undefined")
    if atom_tol < 0:
        raise ParameterError("atom tolerance must be nonnegative")
    lv, lc = np.unique(arr[:, 0], return_counts=True)
    rv, rc = np.unique(arr[:, 1], return_counts=True)
    lmass = dict(zip(lv.tolist(), (lc / n).tolist()))
    rmass = dict(zip(rv.tolist(), (rc / n).tolist()))
    atoms = tuple(sorted(
        (v, lmass[v], rmass[v])
        for v in set(lmass) & set(rmass)
        if lmass[v] > atom_tol and rmass[v] > atom_tol))
    return MarginalReport(EmpiricalDistribution(arr[:, 0]),
                          EmpiricalDistribution(arr[:, 1]),
                          atoms)


# ---------------------------------------------------------------------------
# interval-list text format: one "left right" pair per line, '#' comments


def write_intervals(path, sample_in) -> None:
    arr = intervals_to_array(sample_in)
    with open(path, "w") as fh:
        fh.write("# interval list: left right (17 significant digits)\n")
        for a, b in arr:
            fh.write(f"{a:.17g} {b:.17g}\n")


def read_intervals(path) -> list[Interval]:
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ParameterError(f"malformed interval line: {line!r}")
            out.append(Interval(float(parts[0]), float(parts[1])))
    return out
