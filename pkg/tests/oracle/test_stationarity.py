import pytest

from hypernull.oracle import (
    enumerate_space,
    state_frequencies,
    target_distribution,
    tv_distance,
)
from hypernull.sampling import run_chain, stub_matching
from hypernull.schemas import ChainConfigSchema
from hypernull.types.enum.model import Model

SPACES = [
    ((1, 1, 1, 1), (2, 2)),
    ((2, 2, 1, 1), (2, 2, 2)),
    ((2, 1, 1, 1, 1), (3, 3)),
    ((1, 1, 1, 1, 1, 1), (3, 3)),
]


def _chain_tv(d, k, model, steps, seed=21):
    space = enumerate_space(d, k)
    config = ChainConfigSchema(
        model=model, burn_in=0, interval=1, samples=steps, seed=seed
    )
    initial = stub_matching(d, k, seed=seed)
    empirical = state_frequencies(space, run_chain(initial, config))
    return tv_distance(empirical, target_distribution(space, model))


@pytest.mark.filterwarnings("ignore::UserWarning")
@pytest.mark.parametrize("model", [Model.STUB, Model.VERTEX])
@pytest.mark.parametrize("d, k", SPACES)
def test_chain_reaches_its_target(d, k, model):
    assert _chain_tv(d, k, model, steps=50_000) < 0.03


@pytest.mark.slow
@pytest.mark.filterwarnings("ignore::UserWarning")
@pytest.mark.parametrize("model", [Model.STUB, Model.VERTEX])
@pytest.mark.parametrize("d, k", SPACES)
def test_chain_reaches_its_target_over_a_million_steps(d, k, model):
    assert _chain_tv(d, k, model, steps=1_000_000) < 0.02
