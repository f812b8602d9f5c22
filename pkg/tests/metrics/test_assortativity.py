import pytest

from hypernull.core import project
from hypernull.metrics import (
    choose_pair,
    dyadic_spearman,
    projected_spearman,
    spearman_assortativity,
)
from hypernull.sampling import ChainRNG, stub_matching
from hypernull.types import ChoiceFunction, Hypergraph
from hypernull.types.enum.metrics import ChoiceKind
from hypernull.types.errors import DegenerateStatistic


@pytest.mark.parametrize("kind", list(ChoiceKind))
def test_toy_is_disassortative(toy, kind):
    result = spearman_assortativity(toy, ChoiceFunction(kind))
    assert result.rho == pytest.approx(-0.5)


def test_copies_do_not_change_the_coefficient(toy, toy5):
    choice = ChoiceFunction(ChoiceKind.TOP2)
    assert spearman_assortativity(toy5, choice).rho == pytest.approx(
        spearman_assortativity(toy, choice).rho
    )


def test_choice_functions_coincide_on_dyadic_input():
    dyadic = stub_matching(
        [3, 2, 2, 2, 1, 1, 1], [2] * 6, seed=5, simple_only=True
    )
    values = {
        kind: spearman_assortativity(dyadic, ChoiceFunction(kind, 7)).rho
        for kind in ChoiceKind
    }
    assert len(set(values.values())) == 1
    assert dyadic_spearman(project(dyadic)).rho == pytest.approx(
        values[ChoiceKind.TOP2]
    )


def test_uniform_draws_are_averaged():
    hypergraph = stub_matching(
        [3, 2, 2, 2, 1, 1, 1, 2, 1], [4, 3, 3, 2, 3], seed=2
    )
    result = spearman_assortativity(hypergraph, reps=8, seed=1)
    assert result.repetitions <= 8
    assert result.rho == pytest.approx(sum(result.draws) / len(result.draws))
    again = spearman_assortativity(hypergraph, reps=8, seed=1)
    assert again.rho == result.rho


def test_choose_pair():
    degrees = [5, 1, 3, 2]
    rng = ChainRNG(0)
    edge = (0, 1, 2, 3)
    assert choose_pair(edge, degrees, ChoiceKind.TOP2, rng) == (0, 2)
    assert choose_pair(edge, degrees, ChoiceKind.TOPBOTTOM, rng) == (0, 1)
    u, v = choose_pair(edge, degrees, ChoiceKind.UNIFORM, rng)
    assert u < v and {u, v} <= set(edge)


def test_too_few_edges():
    single = Hypergraph.from_edges(3, [(0, 1, 2), (1,)])
    with pytest.raises(DegenerateStatistic):
        spearman_assortativity(single)


def test_equal_degrees_are_degenerate():
    matching = Hypergraph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(DegenerateStatistic):
        spearman_assortativity(matching)


def test_projected_coefficient_of_toy(toy):
    # Simple-projection degrees: six 5s inside the clique, then 1, 2, 1
    assert projected_spearman(toy).rho > 0
