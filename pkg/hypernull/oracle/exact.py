from collections import Counter
from typing import Callable, Iterable, List, Sequence

import numpy as np

from hypernull.types import ExactDistribution, Hypergraph, SpaceEnumeration
from hypernull.types.enum.model import Model


def exact_statistic_distribution(
    space: SpaceEnumeration, statistic: Callable[[Hypergraph], float]
) -> ExactDistribution:
    """Per-state values with their means under both models."""
    values = np.array([statistic(state) for state in space.states], float)
    weights = np.array(space.weights_stub, dtype=float)
    return ExactDistribution(
        values=tuple(values.tolist()),
        mean_vertex=float(values.mean()),
        mean_stub=float(np.dot(values, weights) / weights.sum()),
    )


def target_distribution(space: SpaceEnumeration, model: Model) -> List[float]:
    """Stationary law over the enumerated states."""
    if Model(model) == Model.VERTEX:
        return [1.0 / len(space)] * len(space)
    total = sum(space.weights_stub)
    return [w / total for w in space.weights_stub]


def state_frequencies(
    space: SpaceEnumeration, samples: Iterable[Hypergraph]
) -> List[float]:
    counts = Counter(space.index_of(sample) for sample in samples)
    total = sum(counts.values())
    return [counts[i] / total for i in range(len(space))]


def tv_distance(p: Sequence[float], q: Sequence[float]) -> float:
    return 0.5 * float(np.abs(np.asarray(p) - np.asarray(q)).sum())


def parallel_pair_count(hypergraph: Hypergraph) -> int:
    """Number of unordered pairs of parallel edges."""
    return sum(
        c * (c - 1) // 2 for c in hypergraph.multiplicity_index.values()
    )
