from enum import Enum


class ExitCode(Enum):
    OK = 0
    INPUT_ERROR = 2
    SAMPLER_PRECONDITION = 3
    STATISTIC_SPACE_MISMATCH = 4
    INVARIANT_VIOLATION = 5
