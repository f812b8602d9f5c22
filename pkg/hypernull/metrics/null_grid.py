import logging
from typing import Iterable, Optional

import numpy as np

from hypernull.metrics.intersection import mean_intersection_by_size
from hypernull.sampling.chain import run_chains
from hypernull.schemas import ChainConfigSchema
from hypernull.types import Hypergraph, RatioGrid
from hypernull.types.enum.model import Model

logger = logging.getLogger(__name__)


def null_ratio_grid(
    hypergraph: Hypergraph,
    model: Model,
    config: ChainConfigSchema,
    samples: Optional[Iterable[Hypergraph]] = None,
) -> RatioGrid:
    """
    ⟨J⟩_kℓ of the data divided by its null average ⟨Ĵ⟩_kℓ.

    ⟨Ĵ⟩_kℓ is the mean over null samples of the per-sample ⟨J⟩_kℓ.
    Cells whose null average is zero are reported as None.
    """
    if samples is None:
        config = config.model_copy(update={"model": Model(model)})
        samples = run_chains(hypergraph, config)
    observed = mean_intersection_by_size(hypergraph)
    per_cell = {key: [] for key in observed}
    for sample in samples:
        for key, value in mean_intersection_by_size(sample).items():
            if key in per_cell:
                per_cell[key].append(value)

    sizes = sorted({len(edge) for edge in hypergraph.edges})
    grid = RatioGrid(sizes=sizes, observed=observed)
    for key, values in per_cell.items():
        null_mean = float(np.mean(values)) if values else None
        grid.null[key] = null_mean
        if not null_mean:
            logger.debug(f"no null intersections for sizes {key}")
            grid.ratio[key] = None
        else:
            grid.ratio[key] = observed[key] / null_mean
    return grid
