import logging
from typing import List, Optional

from hypernull.core.projection import project
from hypernull.sampling.chain import run_chains
from hypernull.schemas import (
    ChainConfigSchema,
    NullTestReportSchema,
    ProvenanceSchema,
)
from hypernull.services.statistic_registry import (
    StatisticSpec,
    resolve_statistic,
)
from hypernull.types import Hypergraph
from hypernull.types.enum.graph import ProjectionMode
from hypernull.types.enum.model import Model, Space
from hypernull.types.errors import StatisticSpaceMismatch
from hypernull.utils import ReportUtils

logger = logging.getLogger(__name__)


class NullTestService:
    def __init__(
        self, config: ChainConfigSchema, max_workers: Optional[int] = None
    ):
        self.config = config
        self.max_workers = max_workers

    def null_samples(
        self, hypergraph: Hypergraph, model: Model, space: Space
    ) -> List[Hypergraph]:
        """
        Draw the null ensemble for one cell.

        HYPERGRAPH randomizes the data itself; PROJECTED randomizes the
        multigraph projection, read as an all-2-edges hypergraph.
        """
        initial = hypergraph
        if Space(space) == Space.PROJECTED:
            initial = project(hypergraph, ProjectionMode.MULTI).as_hypergraph()
        config = self.config.model_copy(update={"model": Model(model)})
        logger.info(
            f"running {Model(model).value} null in {Space(space).value} "
            f"space: n={initial.n}, m={initial.m}"
        )
        return run_chains(initial, config, max_workers=self.max_workers)

    def null_test(
        self,
        hypergraph: Hypergraph,
        statistic: str,
        model: Model,
        space: Space,
        dataset: Optional[str] = None,
    ) -> NullTestReportSchema:
        spec: StatisticSpec = resolve_statistic(statistic, self.config.seed)
        if Space(space) == Space.PROJECTED and spec.projected is None:
            raise StatisticSpaceMismatch(
                f"'{statistic}' is natively polyadic and has no projected "
                "null"
            )
        evaluate = (
            spec.hypergraph
            if Space(space) == Space.HYPERGRAPH
            else spec.projected
        )
        observed = evaluate(hypergraph)
        samples = self.null_samples(hypergraph, model, space)
        values = [evaluate(sample) for sample in samples]

        summary = ReportUtils.summarize(observed, values)
        if summary["constant_statistic"]:
            logger.warning(f"'{statistic}' is constant under the null")
        initial_m = (
            hypergraph.m
            if Space(space) == Space.HYPERGRAPH
            else project(hypergraph, ProjectionMode.MULTI).number_of_edges
        )
        resolved = self.config.resolve(initial_m)
        return NullTestReportSchema(
            statistic=statistic,
            observed=observed,
            null_samples=values,
            model=Model(model),
            space=Space(space),
            provenance=ProvenanceSchema(
                seed=resolved.seed,
                burn_in=resolved.burn_in,
                interval=resolved.interval,
                samples=resolved.samples,
                chains=resolved.chains,
            ),
            dataset=dataset,
            **summary,
        )


def null_test(
    hypergraph: Hypergraph,
    statistic: str,
    model: Model,
    space: Space,
    config: ChainConfigSchema,
) -> NullTestReportSchema:
    return NullTestService(config).null_test(
        hypergraph, statistic, model, space
    )
