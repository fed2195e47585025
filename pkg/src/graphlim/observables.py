"""Clique number, chromatic number, and the clique functional of a measure.

Interval graphs are perfect, so the clique number equals the chromatic
number; the sweep-based clique count and the greedy-by-left-endpoint
coloring below realize both sides of that identity and are cross-checked
against a brute-force oracle in the tests.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SizeError
from .graphs import Graph, LabeledIntervalGraph
from .intervals import Empirical, MeasureModel


@dataclass(frozen=True)
class CliqueReport:
    """Maximum clique of an interval graph with a geometric witness."""

    omega: int
    witness_point: float
    witness_vertices: frozenset[int]


def coverage_counts(arr: np.ndarray, points: np.ndarray) -> np.ndarray:
    """Number of intervals of the family containing each query point."""
    lefts = np.sort(arr[:, 0])
    rights = np.sort(arr[:, 1])
    return (np.searchsorted(lefts, points, side="right")
            - np.searchsorted(rights, points, side="left"))


def clique_number(g: LabeledIntervalGraph) -> CliqueReport:
    """Maximum clique by endpoint sweep: the clique number of an interval
    graph is the maximum number of intervals covering a single point, and
    the maximum is attained at a left endpoint."""
    if g.n == 0:
        raise DomainError("clique number of the empty graph is undefined")
    arr = g.endpoints()
    candidates = arr[:, 0]
    counts = coverage_counts(arr, candidates)
    omega = int(counts.max())
    # the last interval (in left-endpoint order) to enter a maximum overlap
    best = candidates[counts == omega].max()
    members = np.nonzero((arr[:, 0] <= best) & (arr[:, 1] >= best))[0]
    return CliqueReport(omega, float(best), frozenset(int(i) for i in members))


def clique_number_oracle(g: Graph) -> int:
    """Exact maximum clique by branch-and-bound enumeration; |G| <= 20."""
    if g.n > 20:
        raise SizeError("brute-force clique oracle is limited to 20 vertices")
    if g.n == 0:
        raise DomainError("clique number of the empty graph is undefined")
    rows = g.rows
    best = 0

    def expand(cand: int, size: int) -> None:
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if cand == 0:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            bit = cand & -cand
            cand ^= bit
            expand(cand & rows[bit.bit_length() - 1], size + 1)

    expand((1 << g.n) - 1, 0)
    return best


def chromatic_coloring(g: LabeledIntervalGraph) -> list[int]:
    """Proper coloring with exactly omega colors.

    Vertices are processed in order of left endpoint (ties by index) and
    each receives the least color unused among its already-colored
    neighbors; for interval graphs those neighbors are exactly the
    intervals still active at the current left endpoint.
    """
    if g.n == 0:
        raise DomainError("cannot color the empty graph")
    arr = g.endpoints()
    order = sorted(range(g.n), key=lambda i: (arr[i, 0], i))
    colors = [-1] * g.n
    active: list[tuple[float, int]] = []   # (right endpoint, color) heap
    free: list[int] = []                   # released colors, min-heap
    next_color = 0
    for i in order:
        left = arr[i, 0]
        while active and active[0][0] < left:
            _, c = heapq.heappop(active)
            heapq.heappush(free, c)
        if free:
            c = heapq.heappop(free)
        else:
            c = next_color
            next_color += 1
        colors[i] = c
        heapq.heappush(active, (arr[i, 1], c))
    return colors


@dataclass(frozen=True)
class OmegaValue:
    """The clique functional of a measure: sup over points a of the mass of
    intervals containing a, together with an attaining point."""

    value: float
    argmax_a: float


def omega_of_measure(model: MeasureModel, n_grid: int = 512,
                     mc: int = 20_000, seed: int = 0) -> OmegaValue:
    """The clique functional of a measure model.

    Built-in parametric families return their closed form.  Empirical
    models are evaluated exactly: the point coverage is a step function
    changing only at left endpoints, so scanning those (plus the point 1
    and a refinement grid) attains the supremum.  Remaining families are
    evaluated on a Monte Carlo sample of size ``mc``.
    """
    if mc < 1:
        raise DomainError("need at least one Monte Carlo sample")
    closed = model.omega_value()
    if closed is not None:
        return OmegaValue(*closed)
    if isinstance(model, Empirical):
        arr = model.endpoints
    else:
        arr = model.sample_array(mc, np.random.default_rng(seed))
    candidates = np.concatenate([arr[:, 0], [1.0],
                                 np.linspace(0.0, 1.0, max(n_grid, 2))])
    counts = coverage_counts(arr, candidates)
    i = int(np.argmax(counts))
    return OmegaValue(counts[i] / arr.shape[0], float(candidates[i]))


def is_threshold(g: Graph) -> bool:
    """Whether iterated removal of a dominating-or-isolated vertex empties
    the graph (the sequential characterization of threshold graphs)."""
    alive = (1 << g.n) - 1
    remaining = g.n
    rows = g.rows
    while remaining:
        progress = False
        mask = alive
        while mask:
            bit = mask & -mask
            mask ^= bit
            v = bit.bit_length() - 1
            deg = (rows[v] & alive).bit_count()
            if deg == 0 or deg == remaining - 1:
                alive ^= bit
                remaining -= 1
                progress = True
        if not progress:
            return False
    return True
