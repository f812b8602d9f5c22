from .stub_count import count_stub_labelings, stub_labeling_closed_form
from .enumeration import enumerate_space, exhaustive_stub_matching_count
from .exact import (
    exact_statistic_distribution,
    target_distribution,
    state_frequencies,
    tv_distance,
    parallel_pair_count,
)
