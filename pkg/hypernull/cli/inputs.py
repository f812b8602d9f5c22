"""Flags and input loading shared by the subcommands."""

from argparse import ArgumentParser, Namespace
from pathlib import Path
from typing import Dict, List, Tuple

from hypernull.config import DEFAULT_SEED
from hypernull.core.serialization import read_hypergraph
from hypernull.ingest import BensonLoader, load_benson, load_edge_list
from hypernull.schemas import ChainConfigSchema, IngestConfigSchema
from hypernull.types import Hypergraph
from hypernull.types.enum.model import Model
from hypernull.types.errors import FormatError


def add_input_arguments(parser: ArgumentParser) -> None:
    group = parser.add_argument_group("input")
    group.add_argument(
        "--benson",
        action="append",
        default=[],
        metavar="PREFIX",
        help="Benson triple (<prefix>-nverts/-simplices/-times.txt)",
    )
    group.add_argument(
        "--edges",
        action="append",
        default=[],
        metavar="PATH",
        help="Edge list, one edge per line",
    )
    group.add_argument(
        "--json",
        action="append",
        default=[],
        metavar="PATH",
        help="Canonical hypergraph JSON",
    )
    group.add_argument("--name", help="Dataset name used in reports")
    group.add_argument(
        "--tau", type=float, help="Keep only edges with time > tau"
    )
    group.add_argument(
        "--tau-inclusive",
        action="store_true",
        help="Keep edges with time >= tau instead",
    )
    group.add_argument(
        "--degenerate",
        choices=["dedupe", "drop", "strict"],
        default="dedupe",
        help="Handling of edges that repeat a node",
    )


def add_chain_arguments(
    parser: ArgumentParser, model: str = "vertex", allow_all: bool = False
) -> None:
    group = parser.add_argument_group("chain")
    group.add_argument("--burn-in", type=int, help="Default 20·m steps")
    group.add_argument("--interval", type=int, help="Default m steps")
    group.add_argument("--samples", type=int, help="Default 500")
    group.add_argument("--seed", type=int, default=DEFAULT_SEED)
    group.add_argument(
        "--chains",
        type=int,
        default=1,
        help="Independent chains, run concurrently",
    )
    parser.add_argument(
        "--model",
        choices=[m.value for m in Model] + (["all"] if allow_all else []),
        default=model,
    )


def ingest_config(args: Namespace) -> IngestConfigSchema:
    return IngestConfigSchema(
        tau=args.tau,
        tau_inclusive=args.tau_inclusive,
        dedupe_within_edge=args.degenerate == "dedupe",
        drop_degenerate=args.degenerate == "drop",
    )


def chain_config(args: Namespace) -> ChainConfigSchema:
    model = Model.VERTEX if args.model == "all" else Model(args.model)
    return ChainConfigSchema(
        model=model,
        burn_in=args.burn_in,
        interval=args.interval,
        samples=args.samples,
        seed=args.seed,
        chains=args.chains,
    )


def models(args: Namespace) -> List[Model]:
    if args.model == "all":
        return [Model.VERTEX, Model.STUB]
    return [Model(args.model)]


def input_paths(args: Namespace) -> List[Path]:
    paths: List[Path] = []
    for prefix in getattr(args, "benson", []):
        paths.extend(BensonLoader().paths(prefix))
    paths.extend(Path(p) for p in getattr(args, "edges", []))
    paths.extend(Path(p) for p in getattr(args, "json", []))
    return paths


def load_inputs(args: Namespace) -> Dict[str, Hypergraph]:
    """Every input keyed by dataset name, in flag order."""
    config = ingest_config(args)
    datasets: Dict[str, Hypergraph] = {}
    for prefix in args.benson:
        datasets[Path(prefix).name] = load_benson(prefix, config)[0]
    for path in args.edges:
        datasets[Path(path).stem] = load_edge_list(path, config)[0]
    for path in args.json:
        datasets[Path(path).stem] = read_hypergraph(path)
    if not datasets:
        raise FormatError("no input given; use --benson, --edges or --json")
    if args.name and len(datasets) == 1:
        datasets = {args.name: next(iter(datasets.values()))}
    return datasets


def load_single(args: Namespace) -> Tuple[str, Hypergraph]:
    datasets = load_inputs(args)
    if len(datasets) != 1:
        raise FormatError(
            f"expected exactly one input, got {len(datasets)}"
        )
    return next(iter(datasets.items()))
