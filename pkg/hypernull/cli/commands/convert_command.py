import json
from argparse import Namespace
from pathlib import Path
from typing import List

import numpy as np

from hypernull.cli.inputs import add_input_arguments, ingest_config
from hypernull.core.sequences import degree_sequence, dimension_sequence
from hypernull.core.serialization import read_hypergraph, write_hypergraph
from hypernull.ingest import load_benson, load_edge_list
from hypernull.types import LabelMap
from hypernull.types.errors import FormatError


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "convert", help="Ingest a dataset and write canonical JSON"
    )
    add_input_arguments(parser)
    parser.add_argument("--output", required=True, help="JSON destination")
    parser.add_argument(
        "--labels", help="Also write raw labels in id order to this file"
    )
    parser.set_defaults(handler=run)


def _summary(values) -> str:
    if len(values) == 0:
        return "-"
    array = np.asarray(values)
    return f"min {array.min()}, mean {array.mean():.2f}, max {array.max()}"


def run(args: Namespace) -> List[Path]:
    config = ingest_config(args)
    sources = len(args.benson) + len(args.edges) + len(args.json)
    if sources != 1:
        raise FormatError(f"convert takes exactly one input, got {sources}")
    if args.benson:
        hypergraph, labels = load_benson(args.benson[0], config)
    elif args.edges:
        hypergraph, labels = load_edge_list(args.edges[0], config)
    else:
        hypergraph = read_hypergraph(args.json[0])
        labels = LabelMap.from_labels(range(hypergraph.n))

    output = Path(args.output)
    output.parent.mkdir(parents=True, exist_ok=True)
    write_hypergraph(hypergraph, output)
    artifacts = [output]
    if args.labels:
        Path(args.labels).write_text(
            json.dumps([str(label) for label in labels.labels]) + "\n",
            encoding="utf-8",
        )
        artifacts.append(Path(args.labels))

    print(f"n = {hypergraph.n}, m = {hypergraph.m}")
    print(f"degrees: {_summary(degree_sequence(hypergraph).d)}")
    print(f"edge sizes: {_summary(dimension_sequence(hypergraph).k)}")
    return artifacts
