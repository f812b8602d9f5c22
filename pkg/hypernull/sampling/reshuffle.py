from dataclasses import replace

from scipy.special import comb

from hypernull.types import ChainState, ReshuffleOutcome


def q_mu(size_delta: int, size_gamma: int, j: int) -> float:
    """
    Probability of one stub-level realization of a pairwise reshuffle.

    2^-j · C(|Δ|+|Γ|-2j, |Δ|-j)^-1 for an intersection of size j.
    """
    if not 0 <= j <= min(size_delta, size_gamma):
        raise ValueError(
            f"intersection size {j} outside [0, "
            f"{min(size_delta, size_gamma)}]"
        )
    splits = comb(size_delta + size_gamma - 2 * j, size_delta - j, exact=True)
    return 2.0**-j / splits


def vertex_outcome_count(size_delta: int, size_gamma: int, j: int) -> int:
    """Number of distinct vertex-level outcomes of a reshuffle."""
    return int(
        comb(size_delta + size_gamma - 2 * j, size_delta - j, exact=True)
    )


def pairwise_reshuffle(state: ChainState, i: int, j: int) -> ReshuffleOutcome:
    """
    Propose a reshuffle of edges i and j without applying it.

    Shared nodes stay in both edges; the symmetric difference is split
    uniformly with |Δ| - |Δ∩Γ| nodes going to the first edge.
    """
    if i == j:
        raise ValueError("a reshuffle needs two distinct edge indices")
    delta, gamma = state.edges[i], state.edges[j]
    gamma_nodes = set(gamma)
    shared = [v for v in delta if v in gamma_nodes]
    shared_nodes = set(shared)
    pool = [v for v in delta if v not in gamma_nodes] + [
        v for v in gamma if v not in shared_nodes
    ]
    chosen = set(state.rng.sample(pool, len(delta) - len(shared)))
    new_delta = tuple(sorted(shared + [v for v in pool if v in chosen]))
    new_gamma = tuple(sorted(shared + [v for v in pool if v not in chosen]))
    return ReshuffleOutcome(
        i=i,
        j=j,
        old=(delta, gamma),
        new=(new_delta, new_gamma),
        intersection_size=len(shared),
    )


def mcmc_step_stub(state: ChainState) -> ReshuffleOutcome:
    """One step of the chain whose vertex-level law targets the stub model."""
    i, j = state.rng.distinct_pair(state.m)
    outcome = pairwise_reshuffle(state, i, j)
    state.apply(outcome)
    state.t += 1
    return outcome


def mcmc_step_vertex(state: ChainState) -> ReshuffleOutcome:
    """
    One step targeting the vertex-labeled model.

    The proposal is uniform over vertex-level outcomes; it is accepted
    with probability 1 / (m_Δ · m_Γ), multiplicities read from the
    current state. A rejected step leaves the state unchanged but still
    advances the clock.
    """
    i, j = state.rng.distinct_pair(state.m)
    outcome = pairwise_reshuffle(state, i, j)
    weight = state.multiplicity[outcome.old[0]] * (
        state.multiplicity[outcome.old[1]]
    )
    if weight > 1 and state.rng.random() * weight >= 1.0:
        outcome = replace(outcome, accepted=False)
    state.apply(outcome)
    state.t += 1
    return outcome
