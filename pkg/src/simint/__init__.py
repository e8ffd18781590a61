"""Simultaneous interval representations of graphs.

A graph is represented by giving every vertex an open interval and a label
set; two vertices are adjacent exactly when their intervals and their label
sets both intersect.  The package provides the graph model, representation
constructions, representation-driven solvers, exact parameter computation at
desk scale, and two hardness-construction generators, all behind one CLI.
"""

from .graphs import (
    CapExceeded,
    Digraph,
    Family,
    Graph,
    GraphError,
    Problem,
    brute_force,
    induced_subgraph,
    make_named_graph,
    parse_graph,
    write_graph,
)
from .simrep import (
    RepError,
    SimRep,
    VerifyResult,
    canonicalize,
    interval_supergraph,
    intervals_intersect,
    label_graph,
    make_rep,
    read_rep,
    realized_graph,
    restrict,
    to_track_representation,
    verify_representation,
    write_rep,
)

__all__ = [
    "CapExceeded",
    "Digraph",
    "Family",
    "Graph",
    "GraphError",
    "Problem",
    "RepError",
    "SimRep",
    "VerifyResult",
    "brute_force",
    "canonicalize",
    "induced_subgraph",
    "interval_supergraph",
    "intervals_intersect",
    "label_graph",
    "make_named_graph",
    "make_rep",
    "parse_graph",
    "read_rep",
    "realized_graph",
    "restrict",
    "to_track_representation",
    "verify_representation",
    "write_graph",
    "write_rep",
]
