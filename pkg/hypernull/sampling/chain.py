import logging
import warnings
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from hypernull.config import HYPERNULL_THREADS
from hypernull.core.validation import validate
from hypernull.sampling.reshuffle import mcmc_step_stub, mcmc_step_vertex
from hypernull.sampling.rng import ChainRNG
from hypernull.schemas import ChainConfigSchema
from hypernull.types import ChainState, Hypergraph, ReshuffleOutcome
from hypernull.types.enum.model import Model
from hypernull.types.errors import (
    DegenerateChainWarning,
    InvariantViolation,
    SamplerPreconditionError,
)

logger = logging.getLogger(__name__)

STEP_FUNCTIONS: Dict[Model, Callable[[ChainState], ReshuffleOutcome]] = {
    Model.STUB: mcmc_step_stub,
    Model.VERTEX: mcmc_step_vertex,
}


def aperiodicity_warnings(
    dimensions: Sequence[int], model: Model
) -> List[str]:
    """Equilibrium preconditions of the chains that fail for k."""
    problems = []
    if sum(1 for size in dimensions if size >= 2) < 2:
        problems.append("fewer than two edges of size two or larger")
    if model == Model.VERTEX and sum(1 for s in dimensions if s > 2) < 2:
        problems.append("fewer than two edges larger than two")
    return problems


def check_state(state: ChainState) -> None:
    """Raise InvariantViolation if the state drifted from its sequences."""
    snapshot = state.snapshot()
    violations = validate(snapshot)
    if violations:
        raise InvariantViolation(
            f"step {state.t}: " + "; ".join(v.message for v in violations)
        )
    degrees = [0] * state.n
    for edge in state.edges:
        for v in edge:
            degrees[v] += 1
    if tuple(degrees) != state.degrees:
        raise InvariantViolation(f"step {state.t}: degree sequence changed")
    if tuple(len(e) for e in state.edges) != state.dimensions:
        raise InvariantViolation(
            f"step {state.t}: dimension sequence changed"
        )


def run_chain(
    initial: Hypergraph,
    config: ChainConfigSchema,
    rng: Optional[ChainRNG] = None,
    verify: bool = False,
) -> Iterator[Hypergraph]:
    """
    Burn in, then emit `samples` snapshots spaced `interval` steps apart.

    Rejected vertex-model proposals count as steps.
    """
    config = config.resolve(initial.m)
    if initial.m < 2:
        raise SamplerPreconditionError(
            f"the chain needs at least two edges, got m = {initial.m}"
        )
    for problem in aperiodicity_warnings(
        [len(e) for e in initial.edges], config.model
    ):
        logger.warning(f"aperiodicity precondition fails: {problem}")
        warnings.warn(problem, DegenerateChainWarning, stacklevel=2)

    state = ChainState.from_hypergraph(initial, rng or ChainRNG(config.seed))
    return _iterate(state, config, verify)


def _iterate(
    state: ChainState, config: ChainConfigSchema, verify: bool
) -> Iterator[Hypergraph]:
    step = STEP_FUNCTIONS[Model(config.model)]
    for _ in range(config.burn_in):
        step(state)
    for _ in range(config.samples):
        for _ in range(config.interval):
            step(state)
        if verify:
            check_state(state)
        yield state.snapshot()
    logger.debug(
        f"{Model(config.model).value} chain finished: {state.t} steps, "
        f"{state.accepted_moves} accepted"
    )


def split_samples(samples: int, chains: int) -> List[int]:
    base, extra = divmod(samples, chains)
    return [base + (1 if c < extra else 0) for c in range(chains)]


def _run_share(
    job: Tuple[Hypergraph, ChainConfigSchema, int, bool]
) -> List[Hypergraph]:
    initial, config, seed, verify = job
    if config.samples == 0:
        return []
    return list(run_chain(initial, config, rng=ChainRNG(seed), verify=verify))


def run_chains(
    initial: Hypergraph,
    config: ChainConfigSchema,
    verify: bool = False,
    max_workers: Optional[int] = None,
) -> List[Hypergraph]:
    """
    Run `config.chains` independent chains and merge by (chain, index).

    With a single chain the seed is used directly; otherwise chain c runs
    on the c-th seed derived from it, and receives its share of samples.
    Chains run in worker processes; the merge order does not depend on
    the number of workers.
    """
    config = config.resolve(initial.m)
    if config.chains == 1:
        return list(run_chain(initial, config, verify=verify))

    seeds = ChainRNG.derive_seeds(config.seed, config.chains)
    jobs = [
        (
            initial,
            config.model_copy(update={"samples": share, "chains": 1}),
            seed,
            verify,
        )
        for share, seed in zip(
            split_samples(config.samples, config.chains), seeds
        )
    ]
    workers = min(max_workers or HYPERNULL_THREADS, config.chains)
    if workers <= 1:
        per_chain = [_run_share(job) for job in jobs]
    else:
        logger.info(f"running {len(jobs)} chains on {workers} processes")
        with ProcessPoolExecutor(max_workers=workers) as executor:
            per_chain = list(executor.map(_run_share, jobs))
    return [sample for chain in per_chain for sample in chain]
