"""Invariants of powers of binomial edge ideals.

Combinatorial formulas (depth, regularity, dimension, symbolic-power
behaviour) computed from graph structure, verified by an exact symbolic
oracle: lex Groebner bases, ideal arithmetic, and Koszul-homology Betti
tables over the standard-monomial basis.
"""

from .fields import GF, QQ, DEFAULT_PRIME, SECOND_PRIME
from .graphs import (Graph, CliqueCover, CutSet, parse_graph, to_graph6,
                     serialize_edge_list, connected_components, is_chordal,
                     maximal_cliques, forbidden_subgraph_scan,
                     recognize_closed, closed_under_labeling, cut_point_sets,
                     longest_induced_path, indecomposable_components,
                     classify_block_graph, relabel_graph)
from .rings import Ring, Poly, TermOrder, pair_ring, poly_parse, poly_str
from .groebner import Ideal, buchberger, normal_form, CapacityError
from .idealops import (ideal_power, ideal_intersection, intersect_many,
                       ideal_quotient, ideal_quotient_ideal)
from .hilbert import hilbert_numerator, krull_dimension, hilbert_series_ideal
from .bei import (binomial_edge_ideal, edge_binomial, minimal_primes,
                  PrimeComponent, unmixed, cm_closed, dimension_quotient,
                  symbolic_power, symbolic_power_membership,
                  symbolic_equals_ordinary, net_witness_family,
                  BipartiteInitialGraph, initial_bipartite_graph,
                  induced_matching_number)
from .formulas import (DepthProfile, RegularityProfile,
                       depth_powers_cm_closed, depth_limit_closed,
                       reg_powers_closed, persistence_check)
from .oracle import (BettiTable, KoszulStratum, betti_table,
                     depth_probe_generic_forms, hilbert_consistency,
                     depth_monotone_initial)
from .reports import InvariantReport, EnumerationRun, build_report, run_enumeration

__version__ = "0.1.0"
