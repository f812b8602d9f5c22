from argparse import Namespace
from pathlib import Path
from typing import List

from hypernull.cli.inputs import (
    add_chain_arguments,
    add_input_arguments,
    chain_config,
    load_single,
)
from hypernull.core.sequences import degree_sequence, dimension_sequence
from hypernull.core.serialization import write_ndjson
from hypernull.sampling import SamplerManager
from hypernull.schemas import SampleManifestSchema
from hypernull.utils import ReportUtils


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "sample", help="Draw null samples with the MCMC chain"
    )
    add_input_arguments(parser)
    add_chain_arguments(parser)
    parser.add_argument("--out-dir", required=True)
    parser.set_defaults(handler=run)


def run(args: Namespace) -> List[Path]:
    _, hypergraph = load_single(args)
    config = chain_config(args).resolve(hypergraph.m)
    manager = SamplerManager(config)
    # Every sample is validated before it is written
    if config.chains == 1:
        samples = manager.run_chain(hypergraph, verify=True)
    else:
        samples = manager.run_chains(hypergraph, verify=True)

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    samples_path = out_dir / "samples.ndjson"
    count = write_ndjson(samples, samples_path)
    manifest = SampleManifestSchema(
        d=list(degree_sequence(hypergraph).d),
        k=list(dimension_sequence(hypergraph).k),
        model=config.model.value,
        seed=config.seed,
        burn_in=config.burn_in,
        interval=config.interval,
        samples=count,
        chains=config.chains,
        files=[samples_path.name],
    )
    manifest_path = ReportUtils.write_json(
        manifest, out_dir / "sample_manifest.json"
    )
    print(f"wrote {count} {config.model.value} samples to {samples_path}")
    return [samples_path, manifest_path]
