from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from hypernull import __version__


class RunManifestSchema(BaseModel):
    command: str
    flags: Dict[str, Any] = Field(default_factory=dict)
    seed: Optional[int] = None
    input_digests: Dict[str, str] = Field(default_factory=dict)
    artifacts: List[str] = Field(default_factory=list)
    wall_clock: float = 0.0
    version: str = __version__
    exit_code: int = 0


class SampleManifestSchema(BaseModel):
    """Provenance for a stream of samples written to disk."""

    d: List[int]
    k: List[int]
    model: str
    seed: int
    burn_in: int
    interval: int
    samples: int
    chains: int = 1
    files: List[str] = Field(default_factory=list)
