from collections import Counter
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, List, Tuple

from hypernull.types.hypergraph import Edge, Hypergraph

if TYPE_CHECKING:
    from hypernull.sampling.rng import ChainRNG


@dataclass(frozen=True)
class ReshuffleOutcome:
    i: int
    j: int
    old: Tuple[Edge, Edge]
    new: Tuple[Edge, Edge]
    intersection_size: int
    accepted: bool = True

    @property
    def changed(self) -> bool:
        return self.accepted and set(self.new) != set(self.old)


@dataclass
class ChainState:
    """
    Mutable sampler state owned by exactly one chain.

    The edge list and multiplicity counter are updated in place; the
    degree and dimension snapshots taken at construction are what every
    later state must reproduce.
    """

    n: int
    edges: List[Edge]
    multiplicity: Counter
    rng: "ChainRNG"
    degrees: Tuple[int, ...]
    dimensions: Tuple[int, ...]
    t: int = 0
    accepted_moves: int = field(default=0)

    @classmethod
    def from_hypergraph(cls, hypergraph: Hypergraph, rng: "ChainRNG"):
        degrees = [0] * hypergraph.n
        for edge in hypergraph.edges:
            for v in edge:
                degrees[v] += 1
        return cls(
            n=hypergraph.n,
            edges=list(hypergraph.edges),
            multiplicity=Counter(hypergraph.edges),
            rng=rng,
            degrees=tuple(degrees),
            dimensions=tuple(len(e) for e in hypergraph.edges),
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def apply(self, outcome: ReshuffleOutcome) -> None:
        """Write an accepted outcome into the edge list and the index."""
        if not outcome.accepted:
            return
        for edge in outcome.old:
            self.multiplicity[edge] -= 1
            if self.multiplicity[edge] == 0:
                del self.multiplicity[edge]
        for edge in outcome.new:
            self.multiplicity[edge] += 1
        self.edges[outcome.i], self.edges[outcome.j] = outcome.new
        self.accepted_moves += 1

    def snapshot(self) -> Hypergraph:
        return Hypergraph(self.n, tuple(self.edges), dict(self.multiplicity))
