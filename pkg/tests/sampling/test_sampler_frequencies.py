import math

import pytest

from hypernull.oracle import (
    enumerate_space,
    state_frequencies,
    target_distribution,
    tv_distance,
)
from hypernull.sampling import ChainRNG, SamplerManager, stub_matching
from hypernull.schemas import ChainConfigSchema
from hypernull.types.enum.model import Model

MATCHINGS = ((1, 1, 1, 1), (2, 2))
PARALLEL_SPACE = ((2, 2, 1, 1), (2, 2, 2))


def _stub_matching_frequencies(d, k, draws, seed=0):
    space = enumerate_space(d, k)
    rng = ChainRNG(seed)
    samples = (stub_matching(d, k, rng=rng) for _ in range(draws))
    return state_frequencies(space, samples), space


def _assert_within_sigmas(empirical, target, draws, sigmas=4):
    for observed, p in zip(empirical, target):
        sd = math.sqrt(p * (1 - p) / draws)
        assert abs(observed - p) <= sigmas * sd


@pytest.mark.parametrize("d, k", [MATCHINGS, PARALLEL_SPACE])
def test_stub_matching_draws_the_stub_law(d, k):
    empirical, space = _stub_matching_frequencies(d, k, draws=20_000)
    _assert_within_sigmas(
        empirical, target_distribution(space, Model.STUB), 20_000
    )


def test_perfect_matchings_are_equally_likely():
    empirical, space = _stub_matching_frequencies(*MATCHINGS, draws=20_000)
    assert len(space) == 3
    _assert_within_sigmas(empirical, [1 / 3] * 3, 20_000)


@pytest.mark.slow
@pytest.mark.parametrize("d, k", [MATCHINGS, PARALLEL_SPACE])
def test_stub_matching_draws_the_stub_law_at_scale(d, k):
    empirical, space = _stub_matching_frequencies(d, k, draws=200_000)
    target = target_distribution(space, Model.STUB)
    _assert_within_sigmas(empirical, target, 200_000)


def _bipartite_tv(d, k, samples, seed=13):
    space = enumerate_space(d, k)
    config = ChainConfigSchema(
        burn_in=100, interval=3, samples=samples, seed=seed
    )
    manager = SamplerManager(config)
    initial = stub_matching(d, k, seed=seed)
    empirical = state_frequencies(space, manager.run_bipartite_chain(initial))
    return tv_distance(empirical, target_distribution(space, Model.STUB))


@pytest.mark.parametrize("d, k", [MATCHINGS, PARALLEL_SPACE])
def test_bipartite_swaps_match_the_stub_chain(d, k):
    assert _bipartite_tv(d, k, samples=30_000) < 0.02


@pytest.mark.slow
@pytest.mark.parametrize("d, k", [MATCHINGS, PARALLEL_SPACE])
def test_bipartite_swaps_match_the_stub_chain_at_scale(d, k):
    assert _bipartite_tv(d, k, samples=300_000) < 0.01
