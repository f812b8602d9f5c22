import json
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

import numpy as np
import pandas as pd
from pydantic import BaseModel

from hypernull.types import IntersectionProfile, RatioGrid


class ReportUtils:
    @staticmethod
    def summarize(observed: float, samples: Sequence[float]) -> Dict[str, Any]:
        """Null mean, sd, z-score and add-one empirical p-values."""
        values = np.asarray(samples, dtype=float)
        s = values.size
        constant = bool(s == 0 or np.all(values == values[0]))
        mean = float(values.mean()) if s else float("nan")
        sd = 0.0 if constant or s < 2 else float(values.std(ddof=1))
        return {
            "null_mean": values[0].item() if constant and s else mean,
            "null_sd": sd,
            "z": (observed - mean) / sd if sd > 0 else None,
            "p_upper": (1 + int(np.sum(values >= observed))) / (s + 1),
            "p_lower": (1 + int(np.sum(values <= observed))) / (s + 1),
            "constant_statistic": constant,
        }

    @staticmethod
    def write_json(
        payload: Union[BaseModel, Dict[str, Any]], path: Union[str, Path]
    ) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        if isinstance(payload, BaseModel):
            text = payload.model_dump_json(indent=2)
        else:
            text = json.dumps(payload, indent=2, sort_keys=True)
        path.write_text(text + "\n", encoding="utf-8")
        return path

    @staticmethod
    def write_csv(
        rows: Iterable[Dict[str, Any]],
        path: Union[str, Path],
        columns: Optional[List[str]] = None,
    ) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        frame = pd.DataFrame(list(rows), columns=columns)
        frame.to_csv(path, index=False, lineterminator="\n")
        return path

    @staticmethod
    def profile_rows(
        profile: IntersectionProfile, label: Optional[str] = None
    ) -> List[Dict[str, Any]]:
        """Long format: k, l, j, value, source."""
        k, ell = profile.sizes if profile.sizes else ("", "")
        return [
            {
                "dataset": label,
                "k": k,
                "l": ell,
                "j": j,
                "value": value,
                "source": profile.source.value,
            }
            for j, value in sorted(profile.support.items())
        ]

    @staticmethod
    def grid_rows(grid: RatioGrid) -> List[Dict[str, Any]]:
        return [
            {
                "k": k,
                "l": ell,
                "observed": grid.observed.get((k, ell)),
                "null": grid.null.get((k, ell)),
                "ratio": grid.ratio.get((k, ell)),
            }
            for (k, ell) in sorted(grid.observed)
        ]
