import pytest

from hypernull.ingest import toy_copies
from hypernull.schemas import ChainConfigSchema
from hypernull.types import Hypergraph


@pytest.fixture
def toy():
    """Nine nodes A..I: one 6-edge plus G-H and H-I."""
    return toy_copies(1)


@pytest.fixture
def toy5():
    return toy_copies(5)


@pytest.fixture
def matching4():
    return Hypergraph.from_edges(4, [(0, 1), (2, 3)])


@pytest.fixture
def parallel_space_initial():
    """d = (2, 2, 1, 1), k = (2, 2, 2): its space holds a parallel pair."""
    return Hypergraph.from_edges(4, [(0, 1), (0, 2), (1, 3)])


@pytest.fixture
def small_config():
    return ChainConfigSchema(burn_in=50, interval=5, samples=20, seed=3)
