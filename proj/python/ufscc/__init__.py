"""Strongly connected components via a level-keyed union-find."""

from ._core import (
    DirectedGraph,
    OpCounters,
    ParseError,
    SccPartition,
    __version__,
    cycle_chain_graph,
    cycle_graph,
    dag_graph,
    format_edge_list,
    format_partition,
    parse_edge_list,
    path_graph,
    random_graph,
    reachability_partition,
    run_benchmark,
    solve,
    solve_with_counters,
    tarjan_scc,
)

__all__ = [
    "DirectedGraph",
    "OpCounters",
    "ParseError",
    "SccPartition",
    "__version__",
    "cycle_chain_graph",
    "cycle_graph",
    "dag_graph",
    "format_edge_list",
    "format_partition",
    "parse_edge_list",
    "path_graph",
    "random_graph",
    "reachability_partition",
    "run_benchmark",
    "solve",
    "solve_with_counters",
    "tarjan_scc",
]
