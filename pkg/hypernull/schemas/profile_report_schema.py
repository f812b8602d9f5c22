from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict

from hypernull.schemas.null_test_report_schema import ProvenanceSchema
from hypernull.types.enum.model import Model


class ProfileNullReportSchema(BaseModel):
    """Observed marginal profile against its null expectation, per j."""

    j: List[int]
    observed: List[float]
    null_mean: List[float]
    null_se: List[float]
    analytic: Optional[List[float]] = None
    model: Model
    provenance: ProvenanceSchema
    dataset: Optional[str] = None

    model_config = ConfigDict(use_enum_values=True)

    def ratios(self) -> Dict[int, Optional[float]]:
        """Observed over null mean; None where the null mean is zero."""
        return {
            j: (obs / null if null > 0 else None)
            for j, obs, null in zip(self.j, self.observed, self.null_mean)
        }
