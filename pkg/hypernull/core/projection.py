from collections import Counter
from itertools import combinations
from typing import List, Set

from hypernull.types import Hypergraph, ProjectedGraph
from hypernull.types.enum.graph import ProjectionMode


def project(
    hypergraph: Hypergraph, mode: ProjectionMode = ProjectionMode.SIMPLE
) -> ProjectedGraph:
    """Replace every k-edge by a k-clique; 1-edges vanish."""
    if mode == ProjectionMode.SIMPLE:
        adjacency: List[Set[int]] = [set() for _ in range(hypergraph.n)]
        # Parallel edges add nothing new to the simple projection
        for edge in hypergraph.multiplicity_index:
            for u, v in combinations(edge, 2):
                adjacency[u].add(v)
                adjacency[v].add(u)
        return ProjectedGraph(hypergraph.n, mode, adjacency)

    pair_counts: Counter = Counter()
    for edge, count in hypergraph.multiplicity_index.items():
        for pair in combinations(edge, 2):
            pair_counts[pair] += count
    return ProjectedGraph(hypergraph.n, mode, pair_counts=pair_counts)
