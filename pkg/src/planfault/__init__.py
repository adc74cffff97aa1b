"""Fault-tolerant reachability labels for directed planar graphs.

The library builds a per-vertex label for an embedded planar digraph so
that, from the labels of any three vertices s, t, f alone, one can decide
whether t is reachable from s once f is deleted.  Correctness at desk scale
is enforced by exhaustive differential testing against a brute-force
oracle; see the verify module.
"""

from .embed import (
    DirectedPath,
    EmbeddedDigraph,
    SubgraphView,
    incise_along,
    induced_subgraph,
    reach_set,
    co_reach_set,
    reverse_orientation,
    validate_embedding,
)
from .generate import SplitMix64, gen_grid, gen_tri_disk

__all__ = [
    "DirectedPath",
    "EmbeddedDigraph",
    "SubgraphView",
    "SplitMix64",
    "co_reach_set",
    "gen_grid",
    "gen_tri_disk",
    "incise_along",
    "induced_subgraph",
    "reach_set",
    "reverse_orientation",
    "validate_embedding",
]
