from typing import List, Optional

from pydantic import BaseModel, ConfigDict

from hypernull.types.enum.model import Model, Space


class ProvenanceSchema(BaseModel):
    seed: int
    burn_in: int
    interval: int
    samples: int
    chains: int = 1


class NullTestReportSchema(BaseModel):
    statistic: str
    observed: float
    null_samples: List[float]
    null_mean: float
    null_sd: float
    z: Optional[float] = None
    p_lower: float
    p_upper: float
    constant_statistic: bool = False
    model: Model
    space: Space
    provenance: ProvenanceSchema
    dataset: Optional[str] = None

    model_config = ConfigDict(use_enum_values=True)
