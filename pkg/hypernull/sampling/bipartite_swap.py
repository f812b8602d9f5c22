import logging
from typing import Iterator, List, Optional, Set, Tuple

from hypernull.sampling.rng import ChainRNG
from hypernull.schemas import ChainConfigSchema
from hypernull.types import BipartiteGraph

logger = logging.getLogger(__name__)


class BipartiteSwapState:
    """Incidence links of a simple bipartite graph under edge swaps."""

    def __init__(self, bipartite: BipartiteGraph, rng: ChainRNG):
        self.n_left = bipartite.n_left
        self.n_right = bipartite.n_right
        self.links: List[Tuple[int, int]] = list(bipartite.links)
        self.link_set: Set[Tuple[int, int]] = set(self.links)
        if len(self.link_set) != len(self.links):
            raise ValueError("bipartite graph has a repeated incidence")
        self.rng = rng
        self.t = 0
        self.accepted_moves = 0

    def step(self) -> bool:
        """(u,e),(v,f) -> (u,f),(v,e); rejected if an incidence repeats."""
        a, b = self.rng.distinct_pair(len(self.links))
        u, e = self.links[a]
        v, f = self.links[b]
        self.t += 1
        if (u, f) in self.link_set or (v, e) in self.link_set:
            return False
        self.link_set.difference_update(((u, e), (v, f)))
        self.link_set.update(((u, f), (v, e)))
        self.links[a] = (u, f)
        self.links[b] = (v, e)
        self.accepted_moves += 1
        return True

    def snapshot(self) -> BipartiteGraph:
        return BipartiteGraph(self.n_left, self.n_right, tuple(self.links))


def bipartite_swap_chain(
    bipartite: BipartiteGraph,
    config: ChainConfigSchema,
    rng: Optional[ChainRNG] = None,
) -> Iterator[BipartiteGraph]:
    """Emit samples of the swap chain on the incidence graph."""
    config = config.resolve(bipartite.n_right)
    if len(bipartite.links) < 2:
        return
    state = BipartiteSwapState(bipartite, rng or ChainRNG(config.seed))
    for _ in range(config.burn_in):
        state.step()
    for _ in range(config.samples):
        for _ in range(config.interval):
            state.step()
        yield state.snapshot()
    logger.debug(
        f"bipartite swap chain finished: {state.t} steps, "
        f"{state.accepted_moves} accepted"
    )
