import os
from dotenv import load_dotenv

# Load environment variables only once
load_dotenv()


class EnvConfig:
    @staticmethod
    def get(key: str, default=None):
        """
        Retrieve the value of an environment variable.

        :param key: The environment variable name.
        :param default: Returned when the variable is not set.
        """
        return os.getenv(key, default)

    @staticmethod
    def get_int(key: str, default=None):
        """
        Retrieve an environment variable as an integer.

        Unset and blank values both fall back to `default`.
        """
        value = os.getenv(key)
        if value is None or value.strip() == "":
            return default
        return int(value)

    @staticmethod
    def get_float(key: str, default=None):
        value = os.getenv(key)
        if value is None or value.strip() == "":
            return default
        return float(value)


HYPERNULL_THREADS = EnvConfig.get_int("HYPERNULL_THREADS", os.cpu_count() or 1)
LOG_LEVEL = EnvConfig.get("HYPERNULL_LOG_LEVEL", "INFO")
DEFAULT_SEED = EnvConfig.get_int("HYPERNULL_SEED", 0)

MAX_ATTEMPTS = EnvConfig.get_int("HYPERNULL_MAX_ATTEMPTS", 1000)
STATE_LIMIT = EnvConfig.get_int("HYPERNULL_STATE_LIMIT", 100_000)
STUB_COUNT_LIMIT = EnvConfig.get_int("HYPERNULL_STUB_COUNT_LIMIT", 1_000_000)

BURN_IN_FACTOR = EnvConfig.get_float("HYPERNULL_BURN_IN_FACTOR", 20.0)
INTERVAL_FACTOR = EnvConfig.get_float("HYPERNULL_INTERVAL_FACTOR", 1.0)
DEFAULT_SAMPLES = EnvConfig.get_int("HYPERNULL_SAMPLES", 500)
UNIFORM_REPS = EnvConfig.get_int("HYPERNULL_UNIFORM_REPS", 32)
