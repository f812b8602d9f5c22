from math import comb, factorial
from typing import Sequence, Union

import numpy as np

from hypernull.core.sequences import degree_sequence
from hypernull.metrics.intersection import pair_totals, size_pair
from hypernull.types import DegreeSequence, Hypergraph, IntersectionProfile
from hypernull.types.enum.metrics import ProfileKind, ProfileSource
from hypernull.types.errors import NoPairs


def _degrees(d: Union[DegreeSequence, Sequence[int]]) -> np.ndarray:
    values = d.d if isinstance(d, DegreeSequence) else d
    return np.asarray(values, dtype=float)


def overlap_rate(d: Union[DegreeSequence, Sequence[int]]) -> float:
    """(E[D²] - E[D]) / (n E[D]²) with empirical plug-in moments."""
    degrees = _degrees(d)
    n = degrees.size
    if n == 0:
        return 0.0
    first = degrees.mean()
    if first == 0:
        return 0.0
    second = (degrees**2).mean()
    return float((second - first) / (n * first**2))


def _term(rate: float, k: int, ell: int, j: int) -> float:
    return factorial(j) * comb(k, j) * comb(ell, j) * rate**j


def analytic_profile(
    d: Union[DegreeSequence, Sequence[int]], k: int, ell: int, j: int
) -> float:
    """
    Large-n stub-model probability that a k-edge and an ℓ-edge share j nodes.

    j! C(k,j) C(ℓ,j) r^j for j >= 1. The j = 0 value is not that term
    (which would be 1); it is normalised to 1 minus the j >= 1 mass,
    floored at 0, so the profile over 0..min(k, ℓ) sums to one.
    """
    if not 0 <= j <= min(k, ell):
        raise ValueError(f"j = {j} outside [0, {min(k, ell)}]")
    rate = overlap_rate(d)
    if j > 0:
        return _term(rate, k, ell, j)
    rest = sum(_term(rate, k, ell, i) for i in range(1, min(k, ell) + 1))
    return max(0.0, 1.0 - rest)


def analytic_conditional_profile(
    d: Union[DegreeSequence, Sequence[int]], k: int, ell: int
) -> IntersectionProfile:
    support = {
        j: analytic_profile(d, k, ell, j) for j in range(min(k, ell) + 1)
    }
    return IntersectionProfile(
        kind=ProfileKind.CONDITIONAL,
        support=support,
        pair_count=0,
        source=ProfileSource.ANALYTIC,
        sizes=size_pair(k, ell),
    )


def analytic_marginal_profile(hypergraph: Hypergraph) -> IntersectionProfile:
    """Conditional analytic profiles mixed by size-pair frequency in H."""
    totals = pair_totals(hypergraph)
    all_pairs = sum(totals.values())
    if all_pairs == 0:
        raise NoPairs("the marginal profile needs at least two edges")
    j_max = max((len(e) for e in hypergraph.edges), default=0)
    support = {j: 0.0 for j in range(j_max + 1)}
    d = degree_sequence(hypergraph)
    for (k, ell), count in totals.items():
        weight = count / all_pairs
        for j in range(min(k, ell) + 1):
            support[j] += weight * analytic_profile(d, k, ell, j)
    return IntersectionProfile(
        kind=ProfileKind.MARGINAL,
        support=support,
        pair_count=all_pairs,
        source=ProfileSource.ANALYTIC,
    )
