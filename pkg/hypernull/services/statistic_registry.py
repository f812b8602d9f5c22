from dataclasses import dataclass
from typing import Callable, Optional

from hypernull.config import UNIFORM_REPS
from hypernull.core.projection import project
from hypernull.metrics.assortativity import (
    projected_spearman,
    spearman_assortativity,
)
from hypernull.metrics.clustering import avg_local_clustering
from hypernull.metrics.intersection import mean_intersection
from hypernull.types import ChoiceFunction, Hypergraph
from hypernull.types.enum.graph import ProjectionMode
from hypernull.types.enum.metrics import ChoiceKind
from hypernull.types.errors import FormatError

Statistic = Callable[[Hypergraph], float]


@dataclass(frozen=True)
class StatisticSpec:
    """
    A scalar statistic and how to evaluate it in each space.

    `projected` receives either the data or a dyadic null sample and
    evaluates on its simple projection; None marks a natively polyadic
    statistic.
    """

    name: str
    hypergraph: Statistic
    projected: Optional[Statistic]


def _clustering(hypergraph: Hypergraph) -> float:
    return avg_local_clustering(
        project(hypergraph, ProjectionMode.SIMPLE)
    ).c_bar


def _edge_count(hypergraph: Hypergraph) -> float:
    return float(hypergraph.m)


def _projected_edge_count(hypergraph: Hypergraph) -> float:
    return float(project(hypergraph, ProjectionMode.SIMPLE).number_of_edges)


def resolve_statistic(
    name: str, seed: int = 0, reps: int = UNIFORM_REPS
) -> StatisticSpec:
    """Parse names such as `clustering` or `assortativity:top2`."""
    base, _, option = name.partition(":")
    if base == "clustering":
        return StatisticSpec(name, _clustering, _clustering)
    if base == "edge_count":
        return StatisticSpec(name, _edge_count, _projected_edge_count)
    if base in ("mean_intersection", "profile"):
        return StatisticSpec(name, mean_intersection, None)
    if base == "assortativity":
        try:
            kind = ChoiceKind(option or ChoiceKind.UNIFORM.value)
        except ValueError:
            raise FormatError(f"unknown choice function '{option}'")
        choice = ChoiceFunction(kind, seed)

        def hypergraph_rho(hypergraph: Hypergraph) -> float:
            return spearman_assortativity(hypergraph, choice, reps=reps).rho

        def projected_rho(hypergraph: Hypergraph) -> float:
            return projected_spearman(hypergraph).rho

        return StatisticSpec(name, hypergraph_rho, projected_rho)
    raise FormatError(f"unknown statistic '{name}'")
