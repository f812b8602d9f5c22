from collections import Counter, defaultdict
from math import comb
from typing import Dict, List, Optional

from hypernull.sampling.rng import ChainRNG
from hypernull.types import Hypergraph, IntersectionProfile, SizePair
from hypernull.types.enum.metrics import ProfileKind, ProfileSource
from hypernull.types.errors import NoPairs


def size_pair(k: int, ell: int) -> SizePair:
    return (k, ell) if k <= ell else (ell, k)


def pair_totals(hypergraph: Hypergraph) -> Counter:
    """Number of distinct edge pairs per unordered size pair."""
    size_counts = Counter(len(edge) for edge in hypergraph.edges)
    sizes = sorted(size_counts)
    totals: Counter = Counter()
    for a, k in enumerate(sizes):
        totals[(k, k)] = comb(size_counts[k], 2)
        for ell in sizes[a + 1:]:
            totals[(k, ell)] = size_counts[k] * size_counts[ell]
    return +totals


def nonzero_intersections(hypergraph: Hypergraph) -> Dict[SizePair, Counter]:
    """
    Counts of intersection sizes j >= 1 per size pair.

    Walks an inverted node -> edges index that grows with the edge list,
    so each overlapping pair is seen exactly once and disjoint pairs are
    never visited.
    """
    index: Dict[int, List[int]] = defaultdict(list)
    counts: Dict[SizePair, Counter] = defaultdict(Counter)
    edges = hypergraph.edges
    for e, edge in enumerate(edges):
        overlap: Counter = Counter()
        for v in edge:
            for f in index[v]:
                overlap[f] += 1
        for f, j in overlap.items():
            counts[size_pair(len(edge), len(edges[f]))][j] += 1
        for v in edge:
            index[v].append(e)
    return dict(counts)


def _profile(
    nonzero: Counter,
    total: int,
    j_max: int,
    kind: ProfileKind,
    sizes: Optional[SizePair] = None,
) -> IntersectionProfile:
    support = {j: nonzero.get(j, 0) / total for j in range(1, j_max + 1)}
    support[0] = (total - sum(nonzero.values())) / total
    return IntersectionProfile(
        kind=kind,
        support=dict(sorted(support.items())),
        pair_count=total,
        source=ProfileSource.EMPIRICAL,
        sizes=sizes,
    )


def conditional_profile(
    hypergraph: Hypergraph, k: int, ell: int
) -> IntersectionProfile:
    """Distribution of |Δ∩Γ| over distinct pairs of a k-edge and an ℓ-edge."""
    key = size_pair(k, ell)
    total = pair_totals(hypergraph).get(key, 0)
    if total == 0:
        raise NoPairs(f"no pair of edges with sizes {key}")
    nonzero = nonzero_intersections(hypergraph).get(key, Counter())
    return _profile(nonzero, total, min(key), ProfileKind.CONDITIONAL, key)


def marginal_profile(
    hypergraph: Hypergraph,
    pair_budget: Optional[int] = None,
    seed: Optional[int] = None,
) -> IntersectionProfile:
    """
    Distribution of |Δ∩Γ| over all pairs of distinct edges.

    Without a budget the profile is exact; with one it is estimated from
    `pair_budget` uniformly drawn pairs.
    """
    if pair_budget is not None and pair_budget < 1:
        raise ValueError(f"pair_budget must be at least 1, got {pair_budget}")
    m = hypergraph.m
    if m < 2:
        raise NoPairs("the marginal profile needs at least two edges")
    j_max = max(len(edge) for edge in hypergraph.edges)
    if pair_budget is None:
        nonzero: Counter = Counter()
        for counts in nonzero_intersections(hypergraph).values():
            nonzero.update(counts)
        return _profile(nonzero, comb(m, 2), j_max, ProfileKind.MARGINAL)

    rng = ChainRNG(0 if seed is None else seed)
    drawn: Counter = Counter()
    for _ in range(pair_budget):
        i, j = rng.distinct_pair(m)
        drawn[len(set(hypergraph.edges[i]) & set(hypergraph.edges[j]))] += 1
    drawn.pop(0, None)
    return _profile(drawn, pair_budget, j_max, ProfileKind.MARGINAL)


def mean_intersection_by_size(
    hypergraph: Hypergraph,
) -> Dict[SizePair, float]:
    """⟨J⟩ for every size pair that has at least one edge pair."""
    totals = pair_totals(hypergraph)
    nonzero = nonzero_intersections(hypergraph)
    return {
        key: sum(j * c for j, c in nonzero.get(key, Counter()).items())
        / total
        for key, total in sorted(totals.items())
    }


def mean_intersection(hypergraph: Hypergraph) -> float:
    """Marginal ⟨J⟩ over all pairs of distinct edges."""
    return marginal_profile(hypergraph).mean
