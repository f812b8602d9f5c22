from .rng import ChainRNG
from .stub_matching import stub_matching
from .reshuffle import (
    q_mu,
    vertex_outcome_count,
    pairwise_reshuffle,
    mcmc_step_stub,
    mcmc_step_vertex,
)
from .chain import (
    STEP_FUNCTIONS,
    aperiodicity_warnings,
    check_state,
    run_chain,
    run_chains,
)
from .bipartite_swap import BipartiteSwapState, bipartite_swap_chain
from .sampler_manager import SamplerManager
