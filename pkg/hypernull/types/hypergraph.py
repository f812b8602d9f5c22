from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Set, Tuple

import networkx as nx

from hypernull.types.enum.graph import ProjectionMode
from hypernull.types.enum.violation import ViolationKind

# Canonical edge: strictly increasing node ids.
Edge = Tuple[int, ...]


def canonical_edge(nodes: Iterable[int]) -> Edge:
    return tuple(sorted(nodes))


@dataclass(frozen=True)
class DegreeSequence:
    d: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.d)

    @property
    def total(self) -> int:
        return sum(self.d)


@dataclass(frozen=True)
class DimensionSequence:
    k: Tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.k)

    @property
    def total(self) -> int:
        return sum(self.k)


@dataclass(frozen=True)
class Hypergraph:
    """
    Node count plus a multiset of edges.

    Edge order is a storage artifact. Build through `from_edges`, which
    canonicalizes edges and computes the multiplicity index; the raw
    constructor is kept so that broken instances can be validated.
    """

    n: int
    edges: Tuple[Edge, ...]
    multiplicity_index: Dict[Edge, int] = field(compare=False, hash=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]):
        canonical = tuple(canonical_edge(e) for e in edges)
        return cls(n, canonical, dict(Counter(canonical)))

    @classmethod
    def empty(cls, n: int = 0):
        return cls(n, (), {})

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_multiset(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def same_multiset(self, other: "Hypergraph") -> bool:
        return self.n == other.n and Counter(self.edges) == Counter(
            other.edges
        )


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    message: str
    edge_index: Optional[int] = None


@dataclass(frozen=True)
class BipartiteGraph:
    """Incidence view: left layer is V, right layer is E."""

    n_left: int
    n_right: int
    links: Tuple[Tuple[int, int], ...]

    def left_degrees(self) -> List[int]:
        degrees = [0] * self.n_left
        for v, _ in self.links:
            degrees[v] += 1
        return degrees

    def right_degrees(self) -> List[int]:
        degrees = [0] * self.n_right
        for _, e in self.links:
            degrees[e] += 1
        return degrees


@dataclass
class ProjectedGraph:
    n: int
    mode: ProjectionMode
    adjacency: List[Set[int]] = field(default_factory=list)
    pair_counts: Counter = field(default_factory=Counter)

    @property
    def number_of_edges(self) -> int:
        if self.mode == ProjectionMode.SIMPLE:
            return sum(len(nbrs) for nbrs in self.adjacency) // 2
        return sum(self.pair_counts.values())

    def degrees(self) -> List[int]:
        if self.mode == ProjectionMode.SIMPLE:
            return [len(nbrs) for nbrs in self.adjacency]
        degrees = [0] * self.n
        for (u, v), count in self.pair_counts.items():
            degrees[u] += count
            degrees[v] += count
        return degrees

    def simple(self) -> "ProjectedGraph":
        if self.mode == ProjectionMode.SIMPLE:
            return self
        adjacency: List[Set[int]] = [set() for _ in range(self.n)]
        for u, v in self.pair_counts:
            adjacency[u].add(v)
            adjacency[v].add(u)
        return ProjectedGraph(self.n, ProjectionMode.SIMPLE, adjacency)

    def as_hypergraph(self) -> Hypergraph:
        """Dyadic hypergraph (all edges of size 2), parallels kept in MULTI."""
        if self.mode == ProjectionMode.SIMPLE:
            pairs = [
                (u, v)
                for u, nbrs in enumerate(self.adjacency)
                for v in sorted(nbrs)
                if u < v
            ]
        else:
            pairs = [
                pair
                for pair, count in sorted(self.pair_counts.items())
                for _ in range(count)
            ]
        return Hypergraph.from_edges(self.n, pairs)

    def to_networkx(self):
        if self.mode == ProjectionMode.SIMPLE:
            graph = nx.Graph()
            graph.add_nodes_from(range(self.n))
            graph.add_edges_from(
                (u, v)
                for u, nbrs in enumerate(self.adjacency)
                for v in nbrs
                if u < v
            )
            return graph
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.n))
        for (u, v), count in sorted(self.pair_counts.items()):
            for _ in range(count):
                graph.add_edge(u, v)
        return graph
