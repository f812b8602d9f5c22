import logging
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from hypernull.schemas import ChainConfigSchema, NullTestReportSchema
from hypernull.services.cache import ReportCache
from hypernull.services.null_test_service import NullTestService
from hypernull.types import Hypergraph
from hypernull.types.enum.model import Model, Space
from hypernull.utils import ReportUtils

logger = logging.getLogger(__name__)

DEFAULT_NULLS: Tuple[Tuple[Model, Space], ...] = (
    (Model.VERTEX, Space.HYPERGRAPH),
    (Model.STUB, Space.HYPERGRAPH),
    (Model.VERTEX, Space.PROJECTED),
    (Model.STUB, Space.PROJECTED),
)

TABLE_COLUMNS = [
    "dataset",
    "statistic",
    "model",
    "space",
    "observed",
    "null_mean",
    "null_sd",
    "z",
    "p_lower",
    "p_upper",
    "samples",
    "seed",
    "error",
]
DENSITY_COLUMNS = ["dataset", "statistic", "model", "space", "sample", "value"]


class BatchReportService:
    """One null test per (dataset, statistic, model, space) cell."""

    def __init__(
        self,
        config: ChainConfigSchema,
        output_dir: Union[str, Path],
        max_workers: Optional[int] = None,
    ):
        self.config = config
        self.output_dir = Path(output_dir)
        self.cache = ReportCache(self.output_dir / "reports")
        self.null_test_service = NullTestService(config, max_workers)

    def run(
        self,
        datasets: Mapping[str, Hypergraph],
        statistics: Sequence[str],
        nulls: Sequence[Tuple[Model, Space]] = DEFAULT_NULLS,
    ) -> List[Dict]:
        rows: List[Dict] = []
        density: List[Dict] = []
        for dataset, hypergraph in datasets.items():
            for statistic in statistics:
                for model, space in nulls:
                    row, report = self._run_cell(
                        dataset, hypergraph, statistic, model, space
                    )
                    rows.append(row)
                    if report is not None:
                        density.extend(self.density_rows(report))
        self.write_tables(rows, density)
        logger.info(f"batch report finished with {len(rows)} cells")
        return rows

    def write_tables(self, rows: List[Dict], density: List[Dict]) -> None:
        ReportUtils.write_csv(
            rows, self.output_dir / "table1.csv", TABLE_COLUMNS
        )
        ReportUtils.write_csv(
            density, self.output_dir / "fig2_density.csv", DENSITY_COLUMNS
        )

    def _run_cell(
        self,
        dataset: str,
        hypergraph: Hypergraph,
        statistic: str,
        model: Model,
        space: Space,
    ) -> Tuple[Dict, Optional[NullTestReportSchema]]:
        key = ReportCache.cell_key(
            dataset, statistic, Model(model).value, Space(space).value
        )
        report = self.cache.get(key, self.config)
        if report is not None:
            logger.debug(f"cell {key} restored from cache")
            row = self.report_row(dataset, statistic, model, space, report)
            return row, report
        try:
            report = self.null_test_service.null_test(
                hypergraph, statistic, model, space, dataset=dataset
            )
        except Exception as e:
            logger.error(f"cell {key} failed: {str(e)}", exc_info=True)
            row = self.report_row(dataset, statistic, model, space, None)
            row["error"] = f"{type(e).__name__}: {e}"
            return row, None
        self.cache.set(key, report)
        row = self.report_row(dataset, statistic, model, space, report)
        return row, report

    @staticmethod
    def report_row(
        dataset: str,
        statistic: str,
        model: Model,
        space: Space,
        report: Optional[NullTestReportSchema],
    ) -> Dict:
        row = {
            "dataset": dataset,
            "statistic": statistic,
            "model": Model(model).value,
            "space": Space(space).value,
            "error": None,
        }
        if report is not None:
            row.update(
                observed=report.observed,
                null_mean=report.null_mean,
                null_sd=report.null_sd,
                z=report.z,
                p_lower=report.p_lower,
                p_upper=report.p_upper,
                samples=report.provenance.samples,
                seed=report.provenance.seed,
            )
        return row

    @staticmethod
    def density_rows(report: NullTestReportSchema) -> List[Dict]:
        """Null sample values, one row each, for density plots."""
        return [
            {
                "dataset": report.dataset,
                "statistic": report.statistic,
                "model": report.model,
                "space": report.space,
                "sample": index,
                "value": value,
            }
            for index, value in enumerate(report.null_samples)
        ]


def batch_report(
    datasets: Mapping[str, Hypergraph],
    statistics: Sequence[str],
    nulls: Sequence[Tuple[Model, Space]],
    config: ChainConfigSchema,
    output_dir: Union[str, Path],
) -> List[Dict]:
    return BatchReportService(config, output_dir).run(
        datasets, statistics, nulls
    )
