from enum import Enum


class ProfileKind(str, Enum):
    CONDITIONAL = "conditional"
    MARGINAL = "marginal"


class ProfileSource(str, Enum):
    EMPIRICAL = "empirical"
    NULL_MC = "null_mc"
    ANALYTIC = "analytic"
