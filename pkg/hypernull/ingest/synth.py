import logging
from itertools import cycle
from typing import List, Optional

from hypernull.config import DEFAULT_SEED
from hypernull.sampling.rng import ChainRNG
from hypernull.sampling.stub_matching import stub_matching
from hypernull.schemas import SynthSpecSchema
from hypernull.types import Hypergraph

logger = logging.getLogger(__name__)

# Nine nodes A..I: one 6-edge and two 2-edges sharing H
TOY_EDGES = ((0, 1, 2, 3, 4, 5), (6, 7), (7, 8))
TOY_NODES = 9


def toy_copies(copies: int) -> Hypergraph:
    """`copies` disjoint copies of the toy network."""
    edges = [
        tuple(v + TOY_NODES * c for v in edge)
        for c in range(copies)
        for edge in TOY_EDGES
    ]
    return Hypergraph.from_edges(TOY_NODES * copies, edges)


def reconcile_sizes(total: int, sizes: List[int]) -> List[int]:
    """Cycle `sizes` until they cover `total` stubs; trim the last edge."""
    dimensions: List[int] = []
    covered = 0
    for size in cycle(sizes):
        if covered >= total:
            break
        size = min(size, total - covered)
        dimensions.append(size)
        covered += size
    return dimensions


def bounded(spec: SynthSpecSchema, rng: ChainRNG) -> Hypergraph:
    degrees = rng.numpy.integers(
        spec.degree_low, spec.degree_high + 1, size=spec.n
    ).tolist()
    sizes = spec.edge_sizes or [spec.edge_size]
    dimensions = reconcile_sizes(sum(degrees), sizes)
    logger.info(
        f"bounded synth: n={spec.n}, m={len(dimensions)}, "
        f"stubs={sum(degrees)}"
    )
    return stub_matching(degrees, dimensions, rng=rng)


def synth(spec: SynthSpecSchema, seed: Optional[int] = None) -> Hypergraph:
    if spec.kind == "toy_copies":
        return toy_copies(spec.copies)
    return bounded(spec, ChainRNG(DEFAULT_SEED if seed is None else seed))
