"""Exact toolkit for competition graphs.

Computes competition graphs of digraphs, exact competition numbers of small
graphs together with realizing acyclic digraphs as witnesses, exact edge and
vertex clique cover numbers (including covers of an edge subset), and a
family of lower bounds for the competition number that contains the two
classical cover-based bounds as its end terms.
"""

from .bounds import BoundReport, BoundTerm, general_bound, general_bound_term, opsut_edge_bound, opsut_vertex_bound
from .covers import (
    CoverInstance,
    InfeasibleCoverError,
    edge_clique_cover,
    edge_clique_cover_number,
    maximal_cliques,
    min_cover,
    min_set_cover,
    restricted_edge_cover_number,
    vertex_clique_cover_number,
)
from .graphs import (
    CycleError,
    Digraph,
    Graph,
    GraphParseError,
    all_labeled_graphs,
    complete_graph,
    complete_multipartite_graph,
    cycle_graph,
    edgeless_graph,
    generate,
    is_acyclic,
    parse_arc_list,
    parse_graph6,
    path_graph,
    random_graph,
    random_graphs,
    star_graph,
    topological_order,
    write_arc_list,
    write_dot,
    write_graph6,
)
from .realizer import (
    BudgetExceededError,
    RealizationWitness,
    Verification,
    WitnessCover,
    competition_graph,
    competition_number,
    cover_from_witness,
    find_realization,
    verify_realization,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "BoundTerm",
    "BudgetExceededError",
    "CoverInstance",
    "CycleError",
    "Digraph",
    "Graph",
    "GraphParseError",
    "InfeasibleCoverError",
    "RealizationWitness",
    "Verification",
    "WitnessCover",
    "all_labeled_graphs",
    "competition_graph",
    "competition_number",
    "complete_graph",
    "complete_multipartite_graph",
    "cover_from_witness",
    "cycle_graph",
    "edge_clique_cover",
    "edge_clique_cover_number",
    "edgeless_graph",
    "find_realization",
    "general_bound",
    "general_bound_term",
    "generate",
    "is_acyclic",
    "maximal_cliques",
    "min_cover",
    "min_set_cover",
    "opsut_edge_bound",
    "opsut_vertex_bound",
    "parse_arc_list",
    "parse_graph6",
    "path_graph",
    "random_graph",
    "random_graphs",
    "restricted_edge_cover_number",
    "star_graph",
    "topological_order",
    "verify_realization",
    "vertex_clique_cover_number",
    "write_arc_list",
    "write_dot",
    "write_graph6",
]
