from argparse import Namespace
from pathlib import Path
from typing import List

from hypernull.cli.inputs import (
    add_chain_arguments,
    add_input_arguments,
    load_single,
)
from hypernull.config import STATE_LIMIT
from hypernull.core.sequences import degree_sequence, dimension_sequence
from hypernull.oracle import (
    enumerate_space,
    state_frequencies,
    target_distribution,
    tv_distance,
)
from hypernull.sampling import run_chain, stub_matching
from hypernull.schemas import ChainConfigSchema, ExactReportSchema
from hypernull.types.enum.model import Model
from hypernull.utils import ReportUtils


def _int_list(text: str) -> List[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "exact",
        help="Compare chain state frequencies with the enumerated target",
    )
    add_input_arguments(parser)
    add_chain_arguments(parser)
    parser.add_argument(
        "--degrees", type=_int_list, help="Comma-separated d, without input"
    )
    parser.add_argument(
        "--dims", type=_int_list, help="Comma-separated k, without input"
    )
    parser.add_argument("--steps", type=int, default=1_000_000)
    parser.add_argument("--state-limit", type=int, default=STATE_LIMIT)
    parser.add_argument("--out-dir", required=True)
    parser.set_defaults(handler=run)


def run(args: Namespace) -> List[Path]:
    if args.degrees is not None and args.dims is not None:
        d, k = args.degrees, args.dims
        initial = stub_matching(d, k, seed=args.seed)
    else:
        _, initial = load_single(args)
        d = list(degree_sequence(initial).d)
        k = list(dimension_sequence(initial).k)

    model = Model(args.model)
    space = enumerate_space(d, k, args.state_limit)
    # Every step is recorded
    config = ChainConfigSchema(
        model=model, burn_in=0, interval=1, samples=args.steps, seed=args.seed
    )
    empirical = state_frequencies(space, run_chain(initial, config))
    target = target_distribution(space, model)
    tv = tv_distance(empirical, target)

    report = ExactReportSchema(
        d=list(d),
        k=list(k),
        model=model,
        states=[
            [list(edge) for edge in state.edge_multiset()]
            for state in space.states
        ],
        target=target,
        empirical=empirical,
        tv=tv,
        steps=args.steps,
        seed=args.seed,
    )
    path = ReportUtils.write_json(report, Path(args.out_dir) / "exact.json")
    print(
        f"{model.value} chain: TV distance {tv:.4f} over {len(space)} "
        f"states after {args.steps} steps"
    )
    return [path]
