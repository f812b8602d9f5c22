import pytest

from hypernull.core import degree_sequence, dimension_sequence, validate
from hypernull.sampling import ChainRNG, stub_matching
from hypernull.types.errors import AttemptsExhausted, SamplerPreconditionError


def test_rng_is_deterministic():
    a, b = ChainRNG(11), ChainRNG(11)
    assert [a.randrange(100) for _ in range(5)] == [
        b.randrange(100) for _ in range(5)
    ]
    assert a.numpy.integers(0, 10, 4).tolist() == (
        b.numpy.integers(0, 10, 4).tolist()
    )


def test_derived_seeds_are_stable_prefixes():
    four = ChainRNG.derive_seeds(5, 4)
    assert ChainRNG.derive_seeds(5, 2) == four[:2]
    assert len(set(four)) == 4
    assert [rng.seed for rng in ChainRNG.spawn(5, 4)] == four


def test_distinct_pair():
    rng = ChainRNG(0)
    for _ in range(200):
        i, j = rng.distinct_pair(3)
        assert i != j
        assert 0 <= i < 3 and 0 <= j < 3


def test_stub_matching_preserves_sequences():
    d = (3, 2, 2, 1, 1, 1)
    k = (3, 3, 2, 2)
    hypergraph = stub_matching(d, k, seed=4)
    assert validate(hypergraph) == []
    assert degree_sequence(hypergraph).d == d
    assert dimension_sequence(hypergraph).k == k


def test_stub_matching_is_reproducible():
    d, k = (2, 2, 2, 1, 1), (3, 3, 2)
    assert stub_matching(d, k, seed=9) == stub_matching(d, k, seed=9)


def test_perfect_matching():
    hypergraph = stub_matching([1] * 100, [2] * 50, seed=1)
    assert hypergraph.m == 50
    assert degree_sequence(hypergraph).d == (1,) * 100


def test_empty_dimension_sequence():
    hypergraph = stub_matching((0, 0, 0), ())
    assert hypergraph.n == 3
    assert hypergraph.m == 0


def test_unconfigurable_sequences_are_refused():
    with pytest.raises(SamplerPreconditionError):
        stub_matching((1, 1, 1), (2, 2))


def test_always_degenerate_sequences_exhaust_attempts():
    # The 3-edge can only draw from the stubs of two nodes
    with pytest.raises(AttemptsExhausted) as info:
        stub_matching((2, 2, 0), (3, 1), max_attempts=5)
    assert info.value.attempts == 5


def test_simple_only_rejects_parallel_edges():
    for seed in range(10):
        hypergraph = stub_matching(
            (2, 2, 2, 2), (2, 2, 2, 2), seed=seed, simple_only=True
        )
        assert max(hypergraph.multiplicity_index.values()) == 1
