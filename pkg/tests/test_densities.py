"""Tests for homomorphism/induced densities and the equivalence test.

The exact tensor-contraction and bitset-backtracking routines are checked
against brute-force enumerations over all vertex maps and all vertex
subsets, which are slow but obviously correct.
"""

import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphlim import (PROBES, CompleteL, CompleteR, DomainError, Empirical,
                      Graph, Interval, Line, MeasureModel, ParameterError,
                      SizeError, SmallGraph, UniformTriangle, build_graph,
                      count_induced_embeddings, density_vector,
                      empirical_measure, generate, limit_equiv_test,
                      normalize, reflect, sample, t_hom_atomic_exact,
                      t_hom_exact, t_hom_mc, t_ind_exact, w1_estimate,
                      write_density_csv)

K2 = SmallGraph.of(2, [(0, 1)])
K3 = SmallGraph.complete(3)


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = np.random.default_rng(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# brute-force oracles


def hom_density_oracle(pattern: SmallGraph, g: Graph) -> float:
    count = 0
    for phi in itertools.product(range(g.n), repeat=pattern.k):
        if all(g.has_edge(phi[u], phi[v]) for u, v in pattern.edges):
            count += 1
    return count / g.n ** pattern.k


def ind_density_oracle(pattern: SmallGraph, g: Graph) -> float:
    padj = pattern.adjacency_sets()
    hits = 0
    total = 0
    for subset in itertools.combinations(range(g.n), pattern.k):
        total += 1
        for perm in itertools.permutations(subset):
            ok = all(g.has_edge(perm[u], perm[v]) == (v in padj[u])
                     for u in range(pattern.k)
                     for v in range(u + 1, pattern.k))
            if ok:
                hits += 1
                break
    return hits / total


# ---------------------------------------------------------------------------
# SmallGraph


def test_pattern_size_limit():
    with pytest.raises(SizeError):
        SmallGraph.complete(9)


def test_automorphism_counts():
    assert SmallGraph.complete(4).automorphism_count() == 24
    assert SmallGraph.path(4).automorphism_count() == 2
    assert SmallGraph.cycle(4).automorphism_count() == 8
    assert SmallGraph.star(3).automorphism_count() == 6
    assert SmallGraph.empty(4).automorphism_count() == 24


def test_probe_family_is_the_eleven_classes():
    assert len(PROBES) == 11
    seen = set()
    for f in PROBES.values():
        assert f.k == 4
        seen.add((f.edge_count(), f.degree_sequence()))
    assert len(seen) == 11  # pairwise non-isomorphic (degree seq suffices here)


# ---------------------------------------------------------------------------
# exact densities


def test_t_hom_exact_pinned_values():
    k3 = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    assert t_hom_exact(K2, k3) == pytest.approx(2 / 3)
    assert t_hom_exact(K3, k3) == pytest.approx(2 / 9)
    edgeless = Graph(5, [0] * 5)
    assert t_hom_exact(K2, edgeless) == 0.0


def test_t_hom_exact_empty_host_rejected():
    with pytest.raises(DomainError):
        t_hom_exact(K2, Graph(0, ()))


def test_t_hom_exact_against_enumeration():
    for seed in range(6):
        g = random_graph(6, 0.5, seed)
        for f in list(PROBES.values()) + [K2, K3, SmallGraph.path(3)]:
            assert t_hom_exact(f, g) == pytest.approx(
                hom_density_oracle(f, g), abs=1e-12)


def test_t_ind_exact_pinned_values():
    p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert t_ind_exact(K2, p3) == pytest.approx(2 / 3)
    k6 = Graph.from_edges(6, itertools.combinations(range(6), 2))
    assert t_ind_exact(SmallGraph.star(3), k6) == 0.0
    with pytest.raises(SizeError):
        t_ind_exact(PROBES["k4"], p3)


def test_t_ind_exact_against_subset_enumeration():
    for seed in range(4):
        g = random_graph(9, 0.45, seed + 50)
        for name, f in PROBES.items():
            assert t_ind_exact(f, g) == pytest.approx(
                ind_density_oracle(f, g), abs=1e-12), name


def test_count_induced_embeddings_path_in_path():
    p4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    # the only induced P4 is the graph itself, 2 oriented embeddings
    assert count_induced_embeddings(SmallGraph.path(4), p4) == 2


def test_induced_densities_partition_unity():
    for seed in range(5):
        g = random_graph(10, 0.5, seed + 9)
        total = sum(t_ind_exact(f, g) for f in PROBES.values())
        assert total == pytest.approx(1.0, abs=1e-12)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(4, 12))
def test_t_hom_monotone_under_pattern_edge_removal(seed, n):
    g = generate(UniformTriangle(), n, seed).graph
    for name, f in PROBES.items():
        for edge in f.edges:
            smaller = SmallGraph.of(f.k, set(f.edges) - {edge})
            assert t_hom_exact(smaller, g) >= t_hom_exact(f, g) - 1e-12


# ---------------------------------------------------------------------------
# Monte Carlo densities


def test_t_hom_mc_uniform_edge_density():
    est = t_hom_mc(K2, UniformTriangle(), 200_000, 31)
    assert abs(est.value - 2 / 3) <= 3 * est.stderr


def test_t_hom_mc_line_edge_density():
    for a in (0.2, 0.5, 0.8):
        est = t_hom_mc(K2, Line(a), 200_000, 32)
        assert abs(est.value - (1 - a)) <= 3 * est.stderr


def test_t_hom_mc_single_atom_is_one():
    model = Empirical((Interval(0.2, 0.8),))
    est = t_hom_mc(K2, model, 1000, 1)
    assert est.value == 1.0


def test_t_hom_mc_deterministic_and_validated():
    a = t_hom_mc(K3, UniformTriangle(), 5000, 7)
    b = t_hom_mc(K3, UniformTriangle(), 5000, 7)
    assert a == b
    with pytest.raises(ParameterError):
        t_hom_mc(K2, UniformTriangle(), 0, 1)


def test_w1_estimate_uniform_closed_form():
    # neighbor mass of a pinned interval [x,y] is 1 - x^2 - (1-y)^2
    est = w1_estimate(UniformTriangle(), Interval(0.2, 0.7), 100_000, 3)
    assert abs(est.value - 0.87) <= 3 * est.stderr


# ---------------------------------------------------------------------------
# atomic-measure exact densities (the resampling route in closed form)


def test_atomic_exact_matches_mc_and_bounds_bare_density():
    g = generate(UniformTriangle(), 30, 17)
    emp = empirical_measure(g)
    for name, f in PROBES.items():
        atomic = t_hom_atomic_exact(f, emp)
        mc = t_hom_mc(f, emp, 100_000, 41)
        assert abs(atomic - mc.value) <= 4 * mc.stderr, name
        bare = t_hom_exact(f, g.graph)
        # resampling can repeat an atom and an interval meets itself, so
        # the atomic value dominates by at most the tuple-collision mass
        assert bare - 1e-12 <= atomic <= bare + math.comb(f.k, 2) / g.n + 1e-12


def test_atomic_exact_path_host_worked_example():
    g = build_graph([Interval(0, 0.3), Interval(0.2, 0.5),
                     Interval(0.4, 0.7)])
    emp = empirical_measure(g)
    assert t_hom_atomic_exact(K2, emp) == pytest.approx(7 / 9)
    assert t_hom_exact(K2, g.graph) == pytest.approx(4 / 9)


# ---------------------------------------------------------------------------
# density vectors and equivalence


def test_density_vector_edgeless_subject():
    vec = density_vector(Graph(5, [0] * 5))
    for name, est in vec.items():
        expected = 1.0 if not PROBES[name].edges else 0.0
        assert est.value == expected
        assert est.stderr == 0.0


def test_density_vector_k3_edge_probe():
    k3 = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    vec = density_vector(k3)
    assert vec["edge"].value == pytest.approx(2 / 3)


class _Reflected(MeasureModel):
    """Wraps a model, reflecting every sampled interval."""

    def __init__(self, inner):
        self.inner = inner
        self.model_id = f"reflected({inner.model_id})"

    def sample_array(self, n, rng):
        arr = self.inner.sample_array(n, rng)
        return np.column_stack([1.0 - arr[:, 1], 1.0 - arr[:, 0]])


def test_density_vector_reflection_invariance():
    base = Line(0.3)
    v1 = density_vector(base, budget=60_000, seed=5)
    v2 = density_vector(_Reflected(base), budget=60_000, seed=6)
    for name in PROBES:
        assert v1[name].agrees_with(v2[name]), name


def test_density_vector_normalization_invariance_exact():
    g = generate(UniformTriangle(), 50, 21)
    for mode in ("L", "R", "m"):
        h = build_graph(normalize(g.intervals, mode))
        assert density_vector(g) == density_vector(h)


def test_equiv_same_model_consistent():
    verdict = limit_equiv_test(Line(0.4), Line(0.4), budget=20_000, seed=1)
    assert verdict.consistent


def test_equiv_complete_pair_consistent():
    verdict = limit_equiv_test(CompleteL(), CompleteR(), budget=20_000, seed=2)
    assert verdict.consistent


def test_equiv_distinguishes_different_lines():
    verdict = limit_equiv_test(Line(0.2), Line(0.6), budget=100_000, seed=3)
    assert not verdict.consistent
    assert verdict.witness == "edge"
    assert verdict.gap == pytest.approx(0.4, abs=0.02)


def test_equiv_budget_floor():
    with pytest.raises(ParameterError):
        limit_equiv_test(Line(0.2), Line(0.6), budget=100)


def test_density_csv_format(tmp_path):
    vec = density_vector(generate(UniformTriangle(), 20, 2))
    path = tmp_path / "dens.csv"
    write_density_csv(path, vec)
    lines = path.read_text().strip().split("\n")
    assert lines[0] == "probe_id,probe_edges,value,stderr,samples"
    assert len(lines) == 1 + len(PROBES)
    first = lines[1].split(",")
    assert first[0] == "empty" and first[1] == "0"
