"""Ehrhart series and polynomials of edge polytopes, normal or not.

Typical use::

    from edgehrhart import bowtie_graph, ehrhart_series, ehrhart_polynomial
    s = ehrhart_series(bowtie_graph())      # (1 + t + t^2 + 2*t^3)/(1-t)^7
    ehrhart_polynomial(s)(2)                # 36
"""

__version__ = "0.1.0"

from .errors import (Disconnected, DuplicateEdge, EdgehrhartError, GraphError,  # noqa: E402
                     GraphSyntaxError, HypothesisViolated, InvalidParameter, LoopEdge,
                     NumericalInstability, ResourceLimit, SignResolutionFailure)
from .graphcore import (Graph, biconnected_decomposition_with_oddments, blocks,  # noqa: E402
                        bowtie_graph, complete_graph, cycle_graph, dimension,
                        find_separating_faces, format_graph, glue, is_bipartite,
                        ladder_graph, parse_graph, path_graph, polygon_tree_graph)
from .walks import (check_odd_cycle_condition, enumerate_primitive_even_walks,  # noqa: E402
                    enumerate_simple_cycles, find_exceptional_pairs)
from .ideal import Binomial, Ring, TermOrder, build_hyperedge_generators, build_variables  # noqa: E402
from .groebner import GroebnerBasis, buchberger, initial_monomials, normal_form  # noqa: E402
from .series import (EhrhartPolynomial, MoebiusSum, PipelineConfig, RationalSeries,  # noqa: E402
                     ehrhart_polynomial, ehrhart_series, hilbert_series_edge_ring,
                     moebius_sum, run_pipeline, specialize)
from .oracle import LatticePointCount, count_lp, count_monoid, lp_feasible  # noqa: E402
from .analysis import (PolygonTreeProfile, RootReport, closed_form_series,  # noqa: E402
                       polygon_tree_profile, root_report, rv_step, verify_first_factoring,
                       verify_second_factoring)
