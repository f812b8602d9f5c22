from typing import List, Literal, Optional

from pydantic import BaseModel, Field, model_validator


class SynthSpecSchema(BaseModel):
    kind: Literal["toy_copies", "bounded"] = "toy_copies"
    copies: int = Field(default=1, ge=0)
    n: int = Field(default=100, ge=1)
    degree_low: int = Field(default=1, ge=1)
    degree_high: int = Field(default=1, ge=1)
    edge_size: Optional[int] = Field(default=2, ge=1)
    # Cycled over edges when given; overrides edge_size
    edge_sizes: Optional[List[int]] = None

    @model_validator(mode="after")
    def check_degree_range(self):
        if self.degree_high < self.degree_low:
            raise ValueError("degree_high must be >= degree_low")
        if self.edge_sizes is not None and any(s < 1 for s in self.edge_sizes):
            raise ValueError("edge sizes must be positive")
        return self
