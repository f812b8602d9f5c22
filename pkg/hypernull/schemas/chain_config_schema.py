from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from hypernull.config import (
    BURN_IN_FACTOR,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    INTERVAL_FACTOR,
)
from hypernull.types.enum.model import Model


class ChainConfigSchema(BaseModel):
    """
    Inputs of one null-model run.

    Unset burn_in / interval / samples are resolved against the edge
    count m by `resolve` (20·m, m and 500 by default).
    """

    model: Model = Model.VERTEX
    burn_in: Optional[int] = Field(default=None, ge=0)
    interval: Optional[int] = Field(default=None, ge=1)
    samples: Optional[int] = Field(default=None, ge=1)
    seed: int = DEFAULT_SEED
    chains: int = Field(default=1, ge=1)

    model_config = ConfigDict(frozen=True)

    def resolve(self, m: int) -> "ChainConfigSchema":
        return self.model_copy(
            update={
                "burn_in": (
                    self.burn_in
                    if self.burn_in is not None
                    else int(BURN_IN_FACTOR * m)
                ),
                "interval": (
                    self.interval
                    if self.interval is not None
                    else max(1, int(INTERVAL_FACTOR * m))
                ),
                "samples": (
                    self.samples
                    if self.samples is not None
                    else DEFAULT_SAMPLES
                ),
            }
        )
