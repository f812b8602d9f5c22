from math import comb
from typing import List, Set

from hypernull.types import ClusteringReport, ProjectedGraph


def triangle_counts(graph: ProjectedGraph) -> List[int]:
    """
    Triangles through each node of the simple projection.

    Each edge is oriented from lower to higher (degree, id); a triangle is
    found once, at its lowest node, by intersecting forward neighbor sets.
    """
    adjacency = graph.simple().adjacency
    degree = [len(nbrs) for nbrs in adjacency]
    forward: List[Set[int]] = [
        {w for w in nbrs if (degree[w], w) > (degree[u], u)}
        for u, nbrs in enumerate(adjacency)
    ]
    triangles = [0] * graph.n
    for u in range(graph.n):
        out_u = forward[u]
        for v in out_u:
            for w in out_u & forward[v]:
                triangles[u] += 1
                triangles[v] += 1
                triangles[w] += 1
    return triangles


def avg_local_clustering(graph: ProjectedGraph) -> ClusteringReport:
    """Mean over all nodes of T_v / W_v; nodes of degree < 2 count as 0."""
    simple = graph.simple()
    triangles = triangle_counts(simple)
    wedges = [comb(len(nbrs), 2) for nbrs in simple.adjacency]
    if graph.n == 0:
        return ClusteringReport(0.0, (), ())
    total = sum(t / w for t, w in zip(triangles, wedges) if w)
    return ClusteringReport(
        c_bar=total / graph.n,
        triangles=tuple(triangles),
        wedges=tuple(wedges),
    )
