from typing import Iterator, List, Optional, Sequence

from hypernull.config import MAX_ATTEMPTS
from hypernull.core.bipartite import from_bipartite, to_bipartite
from hypernull.sampling.bipartite_swap import bipartite_swap_chain
from hypernull.sampling.chain import run_chain, run_chains
from hypernull.sampling.rng import ChainRNG
from hypernull.sampling.stub_matching import stub_matching
from hypernull.schemas import ChainConfigSchema
from hypernull.types import Hypergraph


class SamplerManager:
    """Single entry point to the samplers for one run configuration."""

    def __init__(
        self, config: ChainConfigSchema, max_attempts: int = MAX_ATTEMPTS
    ) -> None:
        self.config = config
        self.max_attempts = max_attempts

    # Direct sampling
    def stub_matching(
        self,
        d: Sequence[int],
        k: Sequence[int],
        simple_only: bool = False,
    ) -> Hypergraph:
        return stub_matching(
            d,
            k,
            max_attempts=self.max_attempts,
            rng=ChainRNG(self.config.seed),
            simple_only=simple_only,
        )

    # Markov chains
    def run_chain(
        self, initial: Hypergraph, verify: bool = False
    ) -> Iterator[Hypergraph]:
        return run_chain(initial, self.config, verify=verify)

    def run_chains(
        self,
        initial: Hypergraph,
        verify: bool = False,
        max_workers: Optional[int] = None,
    ) -> List[Hypergraph]:
        return run_chains(
            initial, self.config, verify=verify, max_workers=max_workers
        )

    def run_bipartite_chain(self, initial: Hypergraph) -> Iterator[Hypergraph]:
        """Swap chain on the incidence graph, pushed back to hypergraphs."""
        for sample in bipartite_swap_chain(to_bipartite(initial), self.config):
            yield from_bipartite(sample)
