from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import rankdata

from hypernull.config import UNIFORM_REPS
from hypernull.core.projection import project
from hypernull.core.sequences import degree_sequence
from hypernull.sampling.rng import ChainRNG
from hypernull.types import (
    AssortativityResult,
    ChoiceFunction,
    Edge,
    Hypergraph,
    ProjectedGraph,
)
from hypernull.types.enum.graph import ProjectionMode
from hypernull.types.enum.metrics import ChoiceKind
from hypernull.types.errors import DegenerateStatistic


def choose_pair(
    edge: Edge, degrees: Sequence[int], kind: ChoiceKind, rng: ChainRNG
) -> Tuple[int, int]:
    """
    Two distinct nodes of an edge of size >= 2, returned in id order.

    TOP2 takes the two largest degrees and TOPBOTTOM the largest and the
    smallest; degree ties are broken uniformly at random.
    """
    if kind == ChoiceKind.UNIFORM:
        u, v = rng.sample(edge, 2)
    else:
        shuffled = list(edge)
        rng.shuffle(shuffled)
        # Stable sort keeps the random order among equal degrees
        ordered = sorted(shuffled, key=lambda w: degrees[w])
        if kind == ChoiceKind.TOP2:
            u, v = ordered[-1], ordered[-2]
        else:
            u, v = ordered[-1], ordered[0]
    return (u, v) if u < v else (v, u)


def _symmetric_correlation(
    pairs: List[Tuple[int, int]], ranks: np.ndarray
) -> float:
    first = ranks[[u for u, _ in pairs]]
    second = ranks[[v for _, v in pairs]]
    x = np.concatenate([first, second])
    y = np.concatenate([second, first])
    x_centered = x - x.mean()
    y_centered = y - y.mean()
    variance = float(np.dot(x_centered, x_centered))
    if variance <= 0.0:
        raise DegenerateStatistic(
            "rank variance over chosen pairs is zero; all degrees are equal"
        )
    rho = float(np.dot(x_centered, y_centered)) / variance
    return max(-1.0, min(1.0, rho))


def spearman_assortativity(
    hypergraph: Hypergraph,
    choice: ChoiceFunction = ChoiceFunction(),
    reps: Optional[int] = None,
    seed: Optional[int] = None,
) -> AssortativityResult:
    """
    Spearman correlation of node degree ranks across chosen edge pairs.

    Ranks are average ranks of hypergraph degree. Every edge of size >= 2
    contributes its chosen pair in both orders. UNIFORM is averaged over
    `reps` independent draws; when every edge is a 2-edge the choice is
    forced and a single draw is used. Draws whose chosen nodes all share
    one rank are left out of the average.
    """
    edges = [edge for edge in hypergraph.edges if len(edge) >= 2]
    if len(edges) < 2:
        raise DegenerateStatistic(
            f"need at least two edges of size >= 2, found {len(edges)}"
        )
    degrees = degree_sequence(hypergraph).d
    ranks = rankdata(degrees, method="average")
    kind = ChoiceKind(choice.kind)

    if kind == ChoiceKind.UNIFORM and any(len(e) > 2 for e in edges):
        repetitions = reps if reps is not None else UNIFORM_REPS
    else:
        repetitions = 1
    rng = ChainRNG(choice.seed if seed is None else seed)

    draws = []
    for _ in range(max(1, repetitions)):
        pairs = [choose_pair(edge, degrees, kind, rng) for edge in edges]
        try:
            draws.append(_symmetric_correlation(pairs, ranks))
        except DegenerateStatistic:
            if repetitions == 1:
                raise
    if not draws:
        raise DegenerateStatistic(
            f"all {repetitions} choice draws had zero rank variance"
        )
    rho = draws[0] if len(draws) == 1 else float(np.mean(draws))
    return AssortativityResult(
        rho=rho,
        kind=kind,
        repetitions=len(draws),
        ranks=tuple(float(r) for r in ranks),
        draws=tuple(draws),
    )


def dyadic_spearman(graph: ProjectedGraph) -> AssortativityResult:
    """Spearman assortativity of the simple projected graph."""
    dyadic = graph.simple().as_hypergraph()
    return spearman_assortativity(dyadic, ChoiceFunction(ChoiceKind.TOP2))


def projected_spearman(hypergraph: Hypergraph) -> AssortativityResult:
    return dyadic_spearman(project(hypergraph, ProjectionMode.SIMPLE))
