"""Finite pointed graphs, their set-theoretic reading and an HF-set oracle."""
from .hfset import (
    HFSet, EMPTY, HFSyntaxError, parse_hf, show_hf, rank, singleton, pair, union,
    powerset, successor, von_neumann, transitive_closure, cumulative, hfsets_up_to_rank,
)
from .pointed import (
    FinitePointedGraph, BisimWitness, CollapseMap, O, reroot, trim, relabel, integer_labels,
    is_bisimulation, greatest_bisimulation, bisimilar, member, construct, union_graph,
    pair_graph, pow_graph, compr_graph, omega_graph, tc_graph, collapse, reify,
    largest_collapsible_subgraph, is_initial, graph_of_set,
)
from .textformat import GraphSyntaxError, parse_graph, parse_graphs, show_graph, parse_pairs, show_pairs
from .evaluate import EvaluationError, evaluate, evaluate_sets, graph_term, predicate

__all__ = [
    "HFSet", "EMPTY", "HFSyntaxError", "parse_hf", "show_hf", "rank", "singleton", "pair",
    "union", "powerset", "successor", "von_neumann", "transitive_closure", "cumulative",
    "hfsets_up_to_rank", "FinitePointedGraph", "BisimWitness", "CollapseMap", "O", "reroot",
    "trim", "relabel", "integer_labels", "is_bisimulation", "greatest_bisimulation",
    "bisimilar", "member", "construct", "union_graph", "pair_graph", "pow_graph",
    "compr_graph", "omega_graph", "tc_graph", "collapse", "reify",
    "largest_collapsible_subgraph", "is_initial", "graph_of_set", "GraphSyntaxError",
    "parse_graph", "parse_graphs", "show_graph", "parse_pairs", "show_pairs", "EvaluationError", "evaluate",
    "evaluate_sets", "graph_term", "predicate",
]
