import math
from itertools import permutations, product
from typing import List

from hypernull.config import STUB_COUNT_LIMIT
from hypernull.core.sequences import degree_sequence
from hypernull.types import Hypergraph
from hypernull.types.errors import LimitExceeded


def stub_labeling_closed_form(hypergraph: Hypergraph) -> int:
    """Π_v d_v! / Π_c m_c! over parallel classes c."""
    numerator = math.prod(
        math.factorial(x) for x in degree_sequence(hypergraph).d
    )
    denominator = math.prod(
        math.factorial(count)
        for count in hypergraph.multiplicity_index.values()
    )
    return numerator // denominator


def count_stub_labelings(
    hypergraph: Hypergraph, limit: int = STUB_COUNT_LIMIT
) -> int:
    """
    Number of stub partitions that map to this hypergraph.

    Every node hands its d_v stubs to its d_v incident edge slots in
    each of the d_v! orders; the distinct resulting partitions (sets of
    stub blocks) are counted directly.
    """
    degrees = degree_sequence(hypergraph).d
    assignments = math.prod(math.factorial(x) for x in degrees)
    if assignments > limit:
        raise LimitExceeded(
            f"direct stub count needs {assignments} assignments "
            f"(limit {limit})"
        )
    incident: List[List[int]] = [[] for _ in range(hypergraph.n)]
    for e, edge in enumerate(hypergraph.edges):
        for v in edge:
            incident[v].append(e)

    seen = set()
    orders = [permutations(range(x)) for x in degrees]
    for assignment in product(*orders):
        blocks: List[List[tuple]] = [[] for _ in hypergraph.edges]
        for v, order in enumerate(assignment):
            for slot, e in enumerate(incident[v]):
                blocks[e].append((v, order[slot]))
        seen.add(frozenset(frozenset(block) for block in blocks))
    return len(seen)
