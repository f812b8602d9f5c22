from argparse import Namespace
from pathlib import Path
from typing import List

from hypernull.config import DEFAULT_SEED
from hypernull.core.serialization import write_hypergraph
from hypernull.ingest import synth
from hypernull.schemas import SynthSpecSchema


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "synth", help="Generate a synthetic hypergraph"
    )
    parser.add_argument(
        "--kind", choices=["toy_copies", "bounded"], default="toy_copies"
    )
    parser.add_argument("--copies", type=int, default=1)
    parser.add_argument("--n", type=int, default=100)
    parser.add_argument("--degree-low", type=int, default=1)
    parser.add_argument("--degree-high", type=int, default=1)
    parser.add_argument("--edge-size", type=int, default=2)
    parser.add_argument(
        "--edge-sizes",
        type=lambda text: [int(x) for x in text.split(",") if x.strip()],
        help="Comma-separated sizes cycled over edges",
    )
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--output", required=True)
    parser.set_defaults(handler=run)


def run(args: Namespace) -> List[Path]:
    spec = SynthSpecSchema(
        kind=args.kind,
        copies=args.copies,
        n=args.n,
        degree_low=args.degree_low,
        degree_high=args.degree_high,
        edge_size=args.edge_size,
        edge_sizes=args.edge_sizes,
    )
    hypergraph = synth(spec, args.seed)
    output = Path(args.output)
    output.parent.mkdir(parents=True, exist_ok=True)
    write_hypergraph(hypergraph, output)
    print(f"n = {hypergraph.n}, m = {hypergraph.m}")
    return [output]
