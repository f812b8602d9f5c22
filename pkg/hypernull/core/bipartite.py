from typing import List

from hypernull.types import BipartiteGraph, Hypergraph


def to_bipartite(hypergraph: Hypergraph) -> BipartiteGraph:
    """Incidence graph; right-layer index e is the edge's list position."""
    links = tuple(
        (v, e) for e, edge in enumerate(hypergraph.edges) for v in edge
    )
    return BipartiteGraph(hypergraph.n, hypergraph.m, links)


def from_bipartite(bipartite: BipartiteGraph) -> Hypergraph:
    edges: List[List[int]] = [[] for _ in range(bipartite.n_right)]
    for v, e in bipartite.links:
        edges[e].append(v)
    return Hypergraph.from_edges(bipartite.n_left, edges)
