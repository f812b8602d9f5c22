import logging
from argparse import Namespace
from pathlib import Path
from typing import Dict, List, Sequence

from hypernull.cli.inputs import (
    add_chain_arguments,
    add_input_arguments,
    chain_config,
    load_inputs,
    models,
)
from hypernull.metrics.analytic import analytic_marginal_profile
from hypernull.metrics.intersection import marginal_profile
from hypernull.metrics.null_grid import null_ratio_grid
from hypernull.sampling.chain import run_chains
from hypernull.schemas import ChainConfigSchema
from hypernull.services import ProfileService
from hypernull.types import Hypergraph
from hypernull.types.enum.model import Model
from hypernull.utils import ReportUtils

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "profile", help="Intersection profiles against their nulls"
    )
    add_input_arguments(parser)
    add_chain_arguments(parser, model="all", allow_all=True)
    parser.add_argument(
        "--analytic-only",
        action="store_true",
        help="Skip Monte Carlo; write observed and analytic profiles only",
    )
    parser.add_argument("--out-dir", required=True)
    parser.set_defaults(handler=run)


def write_profiles(
    datasets: Dict[str, Hypergraph],
    null_models: Sequence[Model],
    config: ChainConfigSchema,
    out_dir: Path,
    grid: bool = True,
    profile: bool = True,
) -> List[Path]:
    """Ratio grids and marginal profiles, sharing one ensemble per model."""
    service = ProfileService(config)
    grid_rows, profile_rows = [], []
    artifacts: List[Path] = []
    for dataset, hypergraph in datasets.items():
        for model in null_models:
            samples = run_chains(
                hypergraph,
                config.model_copy(update={"model": model}),
            )
            if grid:
                ratios = null_ratio_grid(
                    hypergraph, model, config, samples=samples
                )
                grid_rows.extend(
                    dict(row, dataset=dataset, model=model.value)
                    for row in ReportUtils.grid_rows(ratios)
                )
            if profile:
                report = service.profile_null(
                    hypergraph,
                    model,
                    analytic=True,
                    samples=samples,
                    dataset=dataset,
                )
                profile_rows.extend(service.profile_rows(report))
                artifacts.append(
                    ReportUtils.write_json(
                        report,
                        out_dir
                        / "reports"
                        / f"{dataset}_profile_{model.value}.json",
                    )
                )
    if grid:
        artifacts.append(
            ReportUtils.write_csv(grid_rows, out_dir / "fig3a_grid.csv")
        )
    if profile:
        artifacts.append(
            ReportUtils.write_csv(profile_rows, out_dir / "fig3b_profile.csv")
        )
    return artifacts


def write_analytic_profiles(
    datasets: Dict[str, Hypergraph], out_dir: Path
) -> Path:
    rows = []
    for dataset, hypergraph in datasets.items():
        rows.extend(
            ReportUtils.profile_rows(marginal_profile(hypergraph), dataset)
        )
        rows.extend(
            ReportUtils.profile_rows(
                analytic_marginal_profile(hypergraph), dataset
            )
        )
    return ReportUtils.write_csv(rows, out_dir / "fig4_profiles.csv")


def run(args: Namespace) -> List[Path]:
    datasets = load_inputs(args)
    out_dir = Path(args.out_dir)
    artifacts = [write_analytic_profiles(datasets, out_dir)]
    if not args.analytic_only:
        artifacts.extend(
            write_profiles(datasets, models(args), chain_config(args), out_dir)
        )
    return artifacts
