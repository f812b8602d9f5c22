import logging
from typing import Optional, Sequence, Union

import numpy as np

from hypernull.config import DEFAULT_SEED, MAX_ATTEMPTS
from hypernull.core.validation import configurability_violations
from hypernull.sampling.rng import ChainRNG
from hypernull.types import DegreeSequence, DimensionSequence, Hypergraph
from hypernull.types.errors import (
    AttemptsExhausted,
    SamplerPreconditionError,
)

logger = logging.getLogger(__name__)


def _as_tuple(values: Union[DegreeSequence, DimensionSequence, Sequence]):
    if isinstance(values, DegreeSequence):
        return values.d
    if isinstance(values, DimensionSequence):
        return values.k
    return tuple(int(x) for x in values)


def stub_matching(
    d: Union[DegreeSequence, Sequence[int]],
    k: Union[DimensionSequence, Sequence[int]],
    max_attempts: int = MAX_ATTEMPTS,
    seed: Optional[int] = None,
    rng: Optional[ChainRNG] = None,
    simple_only: bool = False,
) -> Hypergraph:
    """
    Uniformly partition the stub multiset into edges of sizes k.

    An attempt in which any edge receives two stubs of one node is
    discarded as a whole and the partition is redrawn. With `simple_only`
    attempts containing parallel edges are discarded as well.
    """
    d, k = _as_tuple(d), _as_tuple(k)
    problems = configurability_violations(d, k)
    if problems:
        raise SamplerPreconditionError(
            "sequences are not configurable: " + "; ".join(problems)
        )
    n, m = len(d), len(k)
    if m == 0:
        return Hypergraph.empty(n)
    rng = rng or ChainRNG(DEFAULT_SEED if seed is None else seed)

    stubs = np.repeat(np.arange(n, dtype=np.int64), d)
    edge_of_position = np.repeat(np.arange(m, dtype=np.int64), k)
    offsets = np.cumsum(k)[:-1]

    for attempt in range(1, max_attempts + 1):
        permuted = rng.numpy.permutation(stubs)
        # A repeated (edge, node) key is a degenerate edge
        keys = np.sort(edge_of_position * n + permuted)
        if keys.size > 1 and np.any(keys[1:] == keys[:-1]):
            logger.debug(f"stub matching attempt {attempt} was degenerate")
            continue
        edges = [
            tuple(int(v) for v in np.sort(chunk))
            for chunk in np.split(permuted, offsets)
        ]
        if simple_only and len(set(edges)) < m:
            logger.debug(f"stub matching attempt {attempt} had parallels")
            continue
        logger.debug(f"stub matching succeeded after {attempt} attempts")
        return Hypergraph.from_edges(n, edges)

    raise AttemptsExhausted(max_attempts)
