from typing import List

from pydantic import BaseModel, ConfigDict

from hypernull.types.enum.model import Model


class ExactReportSchema(BaseModel):
    """Chain state frequencies against the enumerated target law."""

    d: List[int]
    k: List[int]
    model: Model
    states: List[List[List[int]]]
    target: List[float]
    empirical: List[float]
    tv: float
    steps: int
    seed: int

    model_config = ConfigDict(use_enum_values=True)
