from .config_env import (
    EnvConfig,
    HYPERNULL_THREADS,
    LOG_LEVEL,
    DEFAULT_SEED,
    MAX_ATTEMPTS,
    STATE_LIMIT,
    STUB_COUNT_LIMIT,
    BURN_IN_FACTOR,
    INTERVAL_FACTOR,
    DEFAULT_SAMPLES,
    UNIFORM_REPS,
)
