"""Circular-arc, circle-chord, and permutation intersection kernels, plus
curve-supported sampling for proper interval families and the induced
forbidden-subgraph battery for unit-interval structure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence, TypeVar

import numpy as np

from .densities import SmallGraph, t_ind_exact
from .errors import ParameterError, SizeError
from .graphs import Graph
from .intervals import Interval, MonotoneCurve, array_to_intervals

TAU = 2.0 * math.pi

T = TypeVar("T")


@dataclass(frozen=True)
class Arc:
    """A closed arc of the unit circle: start angle plus swept length.

    length = 2*pi is the full circle and intersects every arc.
    """

    start: float
    length: float

    def __post_init__(self):
        if not 0.0 <= self.start < TAU:
            raise ParameterError(f"arc start {self.start} outside [0, 2*pi)")
        if not 0.0 <= self.length <= TAU:
            raise ParameterError(f"arc length {self.length} outside [0, 2*pi]")

    def contains_angle(self, theta: float) -> bool:
        if self.length >= TAU:
            return True
        offset = (theta - self.start) % TAU
        return offset <= self.length or math.isclose(offset, TAU)


def arc_intersects(a: Arc, b: Arc) -> bool:
    """Whether two closed arcs share a point (touching endpoints count)."""
    if a.length >= TAU or b.length >= TAU:
        return True
    return (a.contains_angle(b.start) or b.contains_angle(a.start)
            or a.contains_angle((b.start + b.length) % TAU))


@dataclass(frozen=True)
class Chord:
    """A chord of the unit circle, stored as an unordered angle pair.

    Equal angles denote a degenerate chord (a single boundary point).
    """

    angle1: float
    angle2: float

    def __post_init__(self):
        for theta in (self.angle1, self.angle2):
            if not 0.0 <= theta < TAU:
                raise ParameterError(f"chord angle {theta} outside [0, 2*pi)")
        if self.angle1 > self.angle2:
            a1, a2 = self.angle2, self.angle1
            object.__setattr__(self, "angle1", a1)
            object.__setattr__(self, "angle2", a2)

    @property
    def degenerate(self) -> bool:
        return self.angle1 == self.angle2


def _strictly_inside(theta: float, lo: float, hi: float) -> bool:
    # open circular arc from lo counterclockwise to hi
    span = (hi - lo) % TAU
    off = (theta - lo) % TAU
    return 0.0 < off < span


def chord_intersects(c: Chord, d: Chord) -> bool:
    """Whether two closed chords share a point of the disk.

    Non-degenerate chords meet iff they share an endpoint or their
    endpoints strictly interleave around the circle.  A degenerate chord
    is a boundary point and meets another chord only at an endpoint.
    """
    shared = {c.angle1, c.angle2} & {d.angle1, d.angle2}
    if shared:
        return True
    if c.degenerate or d.degenerate:
        return False
    inside = _strictly_inside(d.angle1, c.angle1, c.angle2)
    other = _strictly_inside(d.angle2, c.angle1, c.angle2)
    return inside != other


@dataclass(frozen=True)
class Segment:
    """A segment from (bottom, 0) to (top, 1) between two parallel lines."""

    bottom: float
    top: float

    def __post_init__(self):
        if not (0.0 <= self.bottom <= 1.0 and 0.0 <= self.top <= 1.0):
            raise ParameterError("segment endpoints must lie in [0,1]")


def perm_intersects(s1: Segment, s2: Segment) -> bool:
    """Whether two spanning segments cross or touch: the endpoint orders on
    the two lines disagree (weakly)."""
    return (s1.bottom - s2.bottom) * (s1.top - s2.top) <= 0


def build_intersection_graph(objects: Sequence[T],
                             kernel: Callable[[T, T], bool]) -> Graph:
    """Pairwise intersection graph of a homogeneous object sequence."""
    n = len(objects)
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if kernel(objects[i], objects[j]):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, rows)


def arc_from_interval(iv: Interval) -> Arc:
    """Half-circle embedding [a,b] -> arc(start pi*a, length pi*(b-a)).

    All images lie in the upper half circle, so arc intersection reduces
    to interval intersection and the edge set is preserved exactly.
    """
    return Arc(math.pi * iv.left, math.pi * (iv.right - iv.left))


def curve_sample(curve: MonotoneCurve, n: int, seed: int) -> list[Interval]:
    """n intervals on a monotone curve, perturbed into a proper family.

    Parameters are uniform on the curve's range.  A deterministic growth
    perturbation (each interval enlarged by an amount increasing along the
    sorted order, total below a quarter of the minimum nonzero endpoint
    gap) makes both endpoint sequences strictly increasing, so no interval
    contains another, while the intersection graph is unchanged: growth
    that small can only re-confirm existing overlaps.
    """
    if n < 0:
        raise ParameterError("sample size must be nonnegative")
    if n == 0:
        return []
    rng = np.random.default_rng(seed)
    lo, hi = curve.t_range
    t = lo + (hi - lo) * rng.random(n)
    arr = curve.evaluate(t)

    order = np.lexsort((arr[:, 1], arr[:, 0]))
    values = np.unique(arr)
    gaps = np.diff(values)
    gaps = gaps[gaps > 0]
    step = (gaps.min() if gaps.size else 1.0) / (4.0 * (n + 1))
    rank = np.empty(n)
    rank[order] = np.arange(n, dtype=float)
    left = arr[:, 0] - (n - rank) * step
    right = arr[:, 1] + (rank + 1.0) * step

    # strictly increasing affine map back into [0,1] if growth overflowed
    span_lo = min(left.min(), 0.0)
    span_hi = max(right.max(), 1.0)
    scale = span_hi - span_lo
    out = np.column_stack([(left - span_lo) / scale, (right - span_lo) / scale])
    return array_to_intervals(out)


#: the induced-subgraph battery whose densities all vanish on unit
#: interval graphs: C4, C5, C6, the claw, the net S3, and its complement.
#: The full obstruction list contains every cycle C_k with k >= 4; the
#: truncation at C6 makes this a density diagnostic, not a recognizer.
BATTERY: dict[str, SmallGraph] = {
    "c4": SmallGraph.cycle(4),
    "c5": SmallGraph.cycle(5),
    "c6": SmallGraph.cycle(6),
    "claw": SmallGraph.star(3),
    "s3": SmallGraph.of(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]),
    "s3bar": SmallGraph.of(
        6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]).complement(),
}


def forbidden_battery(g: Graph) -> dict[str, float]:
    """Exact induced densities of the six-pattern battery.

    All six values are zero for every unit (proper) interval graph.  A
    zero report is necessary but not sufficient for unit-interval
    structure because the battery is truncated at C6.
    """
    if g.n < 6:
        raise SizeError("battery needs a host graph on at least 6 vertices")
    return {name: t_ind_exact(f, g) for name, f in BATTERY.items()}


# ---------------------------------------------------------------------------
# object-list text formats: one pair of reals per line, '#' comments


def _write_pairs(path, pairs, header: str) -> None:
    with open(path, "w") as fh:
        fh.write(f"# {header}\n")
        for a, b in pairs:
            fh.write(f"{a:.17g} {b:.17g}\n")


def _read_pairs(path) -> list[tuple[float, float]]:
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ParameterError(f"malformed object line: {line!r}")
            out.append((float(parts[0]), float(parts[1])))
    return out


def write_arcs(path, arcs: Sequence[Arc]) -> None:
    _write_pairs(path, ((a.start, a.length) for a in arcs),
                 "arc list: start length")


def read_arcs(path) -> list[Arc]:
    return [Arc(a, b) for a, b in _read_pairs(path)]


def write_chords(path, chords: Sequence[Chord]) -> None:
    _write_pairs(path, ((c.angle1, c.angle2) for c in chords),
                 "chord list: angle1 angle2")


def read_chords(path) -> list[Chord]:
    return [Chord(a, b) for a, b in _read_pairs(path)]


def write_segments(path, segments: Sequence[Segment]) -> None:
    _write_pairs(path, ((s.bottom, s.top) for s in segments),
                 "segment list: bottom top")


def read_segments(path) -> list[Segment]:
    return [Segment(a, b) for a, b in _read_pairs(path)]
