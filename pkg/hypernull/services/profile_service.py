import logging
from typing import Iterable, List, Optional

import numpy as np

from hypernull.metrics.analytic import analytic_marginal_profile
from hypernull.metrics.intersection import marginal_profile
from hypernull.sampling.chain import run_chains
from hypernull.schemas import (
    ChainConfigSchema,
    ProfileNullReportSchema,
    ProvenanceSchema,
)
from hypernull.types import Hypergraph
from hypernull.types.enum.model import Model

logger = logging.getLogger(__name__)


class ProfileService:
    def __init__(
        self, config: ChainConfigSchema, max_workers: Optional[int] = None
    ):
        self.config = config
        self.max_workers = max_workers

    def profile_null(
        self,
        hypergraph: Hypergraph,
        model: Model,
        analytic: bool = False,
        samples: Optional[Iterable[Hypergraph]] = None,
        dataset: Optional[str] = None,
    ) -> ProfileNullReportSchema:
        """Expected marginal profile under the null, with per-j errors."""
        config = self.config.model_copy(
            update={"model": Model(model)}
        ).resolve(hypergraph.m)
        if samples is None:
            samples = run_chains(
                hypergraph, config, max_workers=self.max_workers
            )
        j_max = max(len(edge) for edge in hypergraph.edges)
        observed = marginal_profile(hypergraph).as_list(j_max)
        null = np.array(
            [marginal_profile(s).as_list(j_max) for s in samples], float
        )
        logger.info(
            f"profile null ({Model(model).value}) from {len(null)} samples"
        )
        if len(null) > 1:
            se = null.std(axis=0, ddof=1) / np.sqrt(len(null))
        else:
            se = np.zeros(j_max + 1)
        return ProfileNullReportSchema(
            j=list(range(j_max + 1)),
            observed=observed,
            null_mean=null.mean(axis=0).tolist(),
            null_se=se.tolist(),
            analytic=(
                analytic_marginal_profile(hypergraph).as_list(j_max)
                if analytic
                else None
            ),
            model=Model(model),
            provenance=ProvenanceSchema(
                seed=config.seed,
                burn_in=config.burn_in,
                interval=config.interval,
                samples=len(null),
                chains=config.chains,
            ),
            dataset=dataset,
        )

    @staticmethod
    def profile_rows(report: ProfileNullReportSchema) -> List[dict]:
        rows = []
        for index, j in enumerate(report.j):
            rows.append(
                {
                    "dataset": report.dataset,
                    "model": report.model,
                    "j": j,
                    "observed": report.observed[index],
                    "null_mean": report.null_mean[index],
                    "null_se": report.null_se[index],
                    "analytic": (
                        report.analytic[index] if report.analytic else None
                    ),
                }
            )
        return rows


def profile_null(
    hypergraph: Hypergraph,
    model: Model,
    config: ChainConfigSchema,
    analytic: bool = False,
) -> ProfileNullReportSchema:
    return ProfileService(config).profile_null(
        hypergraph, model, analytic=analytic
    )
