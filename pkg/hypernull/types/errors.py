from typing import Optional

from hypernull.types.enum.exit_code import ExitCode


class HypernullError(Exception):
    """Base error; carries the CLI exit code it maps to."""

    exit_code: ExitCode = ExitCode.INVARIANT_VIOLATION

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class FormatError(HypernullError):
    exit_code = ExitCode.INPUT_ERROR

    def __init__(
        self,
        detail: str,
        path: Optional[str] = None,
        line: Optional[int] = None,
    ):
        location = ""
        if path is not None:
            location = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(f"{location}{detail}")
        self.path = path
        self.line = line


class SamplerPreconditionError(HypernullError):
    exit_code = ExitCode.SAMPLER_PRECONDITION


class AttemptsExhausted(SamplerPreconditionError):
    def __init__(self, attempts: int):
        super().__init__(
            f"stub matching produced a degenerate edge in all {attempts} "
            "attempts"
        )
        self.attempts = attempts


class LimitExceeded(HypernullError):
    exit_code = ExitCode.INPUT_ERROR


class DegenerateStatistic(HypernullError):
    exit_code = ExitCode.INPUT_ERROR


class NoPairs(HypernullError):
    exit_code = ExitCode.INPUT_ERROR


class StatisticSpaceMismatch(HypernullError):
    exit_code = ExitCode.STATISTIC_SPACE_MISMATCH


class InvariantViolation(HypernullError):
    exit_code = ExitCode.INVARIANT_VIOLATION


class DegenerateChainWarning(UserWarning):
    """The chain runs, but its aperiodicity precondition does not hold."""
