from .clustering import triangle_counts, avg_local_clustering
from .assortativity import (
    choose_pair,
    spearman_assortativity,
    dyadic_spearman,
    projected_spearman,
)
from .intersection import (
    size_pair,
    pair_totals,
    nonzero_intersections,
    conditional_profile,
    marginal_profile,
    mean_intersection_by_size,
    mean_intersection,
)
from .analytic import (
    overlap_rate,
    analytic_profile,
    analytic_conditional_profile,
    analytic_marginal_profile,
)
from .null_grid import null_ratio_grid
