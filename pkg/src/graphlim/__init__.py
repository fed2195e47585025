"""Random interval graphs, their limit densities, and geometric relatives.

The package samples interval families from probability models on the
triangle {(a,b): 0 <= a <= b <= 1}, builds their intersection graphs,
computes homomorphism and induced densities exactly or by seeded Monte
Carlo, evaluates clique/chromatic observables and the clique functional
of a measure, tests pairs of models for limit equivalence, and extends
the same kernel machinery to circular arcs, circle chords, and
permutation segments.
"""

from .densities import (PROBES, EquivalenceVerdict, Kernel, SmallGraph,
                        count_induced_embeddings, degree_profile,
                        density_vector, hom_count, interval_overlap,
                        limit_equiv_test, t_hom_atomic_exact, t_hom_exact,
                        t_hom_mc, t_ind_exact,
                        w1_estimate, write_density_csv)
from .errors import DomainError, ModelSpecError, ParameterError, SizeError
from .geometries import (BATTERY, Arc, Chord, Segment, arc_from_interval,
                         arc_intersects, build_intersection_graph,
                         chord_intersects, curve_sample, forbidden_battery,
                         perm_intersects, read_arcs, read_chords,
                         read_segments, write_arcs, write_chords,
                         write_segments)
from .graphs import (Graph, LabeledIntervalGraph, build_graph,
                     build_graph_pairwise, build_graph_sweep,
                     empirical_measure, endpoint_degrees, generate,
                     graph_to_json, intersects,
                     read_edge_list, read_graph_json, write_edge_list,
                     write_graph_json)
from .intervals import (BlockUnion, CompleteL, CompleteR, CurveSupported,
                        Empirical, FixedLength, Interval, Line, LineMixture,
                        MarginalReport, MeasureModel, MonotoneCurve,
                        TiltedRectangle, UniformTriangle, marginals,
                        normalize, read_intervals, reflect, sample,
                        sample_endpoints, write_intervals)
from .observables import (CliqueReport, OmegaValue, chromatic_coloring,
                          clique_number, clique_number_oracle, is_threshold,
                          omega_of_measure)
from .stats import DensityEstimate, EmpiricalDistribution, bernoulli_estimate

__version__ = "0.1.0"

__all__ = [
    "PROBES", "BATTERY", "Arc", "BlockUnion", "Chord", "CliqueReport",
    "CompleteL", "CompleteR", "CurveSupported", "DensityEstimate",
    "DomainError", "Empirical", "EmpiricalDistribution", "EquivalenceVerdict",
    "FixedLength", "Graph", "Interval", "Kernel", "LabeledIntervalGraph",
    "Line", "LineMixture", "MarginalReport", "MeasureModel", "ModelSpecError",
    "MonotoneCurve", "OmegaValue", "ParameterError", "Segment", "SizeError",
    "SmallGraph", "TiltedRectangle", "UniformTriangle", "arc_from_interval",
    "arc_intersects", "bernoulli_estimate", "build_graph",
    "build_graph_pairwise", "build_graph_sweep", "build_intersection_graph",
    "chord_intersects", "chromatic_coloring", "clique_number",
    "clique_number_oracle", "count_induced_embeddings", "curve_sample",
    "degree_profile", "density_vector", "empirical_measure",
    "endpoint_degrees",
    "forbidden_battery", "generate", "graph_to_json", "hom_count",
    "intersects", "interval_overlap", "is_threshold", "limit_equiv_test",
    "marginals", "normalize", "omega_of_measure", "perm_intersects",
    "read_arcs", "read_chords", "read_edge_list", "read_graph_json",
    "read_intervals", "read_segments", "reflect", "sample",
    "sample_endpoints", "t_hom_atomic_exact", "t_hom_exact", "t_hom_mc",
    "t_ind_exact",
    "w1_estimate", "write_arcs", "write_chords", "write_density_csv",
    "write_edge_list", "write_graph_json", "write_intervals",
    "write_segments",
]
