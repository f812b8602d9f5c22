from dataclasses import dataclass, field
from typing import Dict, Tuple

from hypernull.types.hypergraph import Edge, Hypergraph


@dataclass(frozen=True)
class SpaceEnumeration:
    """Every hypergraph with sequences (d, k), in canonical edge order."""

    d: Tuple[int, ...]
    k: Tuple[int, ...]
    states: Tuple[Hypergraph, ...]
    weights_stub: Tuple[int, ...]
    state_limit: int
    _positions: Dict[Tuple[Edge, ...], int] = field(
        default=None, compare=False, repr=False
    )

    def __post_init__(self):
        positions = {
            state.edge_multiset(): i for i, state in enumerate(self.states)
        }
        object.__setattr__(self, "_positions", positions)

    def __len__(self) -> int:
        return len(self.states)

    def index_of(self, hypergraph: Hypergraph) -> int:
        return self._positions[hypergraph.edge_multiset()]


@dataclass(frozen=True)
class ExactDistribution:
    values: Tuple[float, ...]
    mean_vertex: float
    mean_stub: float
