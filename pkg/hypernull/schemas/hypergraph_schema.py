from typing import List

from pydantic import BaseModel, Field, field_validator


class HypergraphSchema(BaseModel):
    n: int = Field(ge=0)
    edges: List[List[int]] = Field(default_factory=list)

    @field_validator("edges")
    @classmethod
    def edges_sorted(cls, edges: List[List[int]]) -> List[List[int]]:
        for edge in edges:
            if edge != sorted(edge):
                raise ValueError(f"edge {edge} is not sorted ascending")
        return edges
