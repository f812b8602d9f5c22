import logging
from itertools import combinations, permutations
from typing import List, Sequence

from hypernull.config import STATE_LIMIT, STUB_COUNT_LIMIT
from hypernull.core.validation import configurability_violations
from hypernull.oracle.stub_count import (
    count_stub_labelings,
    stub_labeling_closed_form,
)
from hypernull.types import Edge, Hypergraph, SpaceEnumeration
from hypernull.types.errors import LimitExceeded, SamplerPreconditionError

logger = logging.getLogger(__name__)


def enumerate_space(
    d: Sequence[int], k: Sequence[int], state_limit: int = STATE_LIMIT
) -> SpaceEnumeration:
    """
    Backtracking enumeration of every hypergraph with sequences (d, k).

    Edges are filled in order of decreasing size; consecutive edges of
    equal size must be lexicographically non-decreasing, so each edge
    multiset is produced once.
    """
    d, k = tuple(int(x) for x in d), tuple(int(x) for x in k)
    problems = configurability_violations(d, k)
    if sum(d) != sum(k):
        raise SamplerPreconditionError("; ".join(problems))
    n, m = len(d), len(k)
    sizes = sorted(k, reverse=True)
    remaining = list(d)
    chosen: List[Edge] = []
    states: List[Hypergraph] = []
    search_budget = [state_limit * 1000]

    def fill(index: int) -> None:
        search_budget[0] -= 1
        if search_budget[0] < 0:
            raise LimitExceeded(
                f"search for d={d}, k={k} exceeded its budget"
            )
        if index == m:
            if not any(remaining):
                states.append(Hypergraph.from_edges(n, sorted(chosen)))
                if len(states) > state_limit:
                    raise LimitExceeded(
                        f"space has more than {state_limit} states"
                    )
            return
        edges_left = m - index
        if any(x > edges_left for x in remaining):
            return
        size = sizes[index]
        lower = chosen[-1] if index and sizes[index - 1] == size else None
        candidates = [v for v in range(n) if remaining[v] > 0]
        for edge in combinations(candidates, size):
            if lower is not None and edge < lower:
                continue
            for v in edge:
                remaining[v] -= 1
            chosen.append(edge)
            fill(index + 1)
            chosen.pop()
            for v in edge:
                remaining[v] += 1

    fill(0)
    states.sort(key=lambda state: state.edge_multiset())
    weights = tuple(_stub_weight(state) for state in states)
    logger.info(f"enumerated {len(states)} states for d={d}, k={k}")
    return SpaceEnumeration(
        d=d,
        k=k,
        states=tuple(states),
        weights_stub=weights,
        state_limit=state_limit,
    )


def _stub_weight(state: Hypergraph) -> int:
    try:
        return count_stub_labelings(state, STUB_COUNT_LIMIT)
    except LimitExceeded:
        logger.debug("direct stub count too large; using the closed form")
        return stub_labeling_closed_form(state)


def exhaustive_stub_matching_count(
    d: Sequence[int], k: Sequence[int], limit: int = STUB_COUNT_LIMIT
) -> int:
    """
    Distinct non-degenerate stub partitions reachable by stub matching.

    Walks every ordering of the labeled stubs; only for tiny inputs.
    """
    stubs = [(v, s) for v, x in enumerate(d) for s in range(x)]
    orderings = 1
    for i in range(2, len(stubs) + 1):
        orderings *= i
    if orderings > limit:
        raise LimitExceeded(f"{orderings} stub orderings (limit {limit})")
    offsets = []
    start = 0
    for size in k:
        offsets.append((start, start + size))
        start += size
    partitions = set()
    for ordering in permutations(stubs):
        blocks = [ordering[a:b] for a, b in offsets]
        if any(len({v for v, _ in block}) < len(block) for block in blocks):
            continue
        partitions.add(frozenset(frozenset(block) for block in blocks))
    return len(partitions)
