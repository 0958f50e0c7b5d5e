"""Regular pseudographs: (r-t,t)-colorings, {a,b}-factors and their certificates."""

from .coloring import (ColoringSpec, EdgeColoring, FactorWitness, Verdict, coloring_to_factor,
                       factor_to_coloring, incidence_profile, verify_coloring, verify_factor)
from .conditions import (ConditionReport, check_coloring_conditions, check_factor_conditions, hunt,
                         seven_graphs_search)
from .constructions import (FamilyParams, build_family, complete_graph, complete_minus_edge, double_cycle,
                            random_regular_pseudograph, theorem41_graph, theorem42_coloring, theorem42_graph)
from .decompose import (AdhesionTree, Colorable, Leaf, Node, NonColorable, decide_31, decompose_at,
                        recognize_double_cycle, verify_certificate)
from .enumeration import EnumSpec, enumerate_bounded, enumerate_regular
from .errors import AmbiguousSplit, InvalidArgument, ParseError, RegulaError, UnsupportedSize
from .graph import (EdgeCut, Pseudograph, canonical_form, connected_components, cut_vertices, degree,
                    edge_adhesion, is_k_edge_connected, is_regular, loop_adhesion, minimal_edge_cuts)
from .solver import (SearchBudget, SolveResult, Status, even_t_factor, find_3_regular_subgraph,
                     perfect_matching, solve_coloring, solve_factor, tutte_violator)

__version__ = "0.1.0"
