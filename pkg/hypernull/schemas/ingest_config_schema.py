from typing import Optional

from pydantic import BaseModel


class IngestConfigSchema(BaseModel):
    tau: Optional[float] = None
    # Keep edges with time >= tau instead of time > tau
    tau_inclusive: bool = False
    dedupe_within_edge: bool = True
    # Only consulted when dedupe_within_edge is off; False means strict
    drop_degenerate: bool = True
