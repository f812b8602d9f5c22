import json
import logging
import re
from pathlib import Path
from typing import List, Optional, Union

from hypernull.schemas import (
    ChainConfigSchema,
    NullTestReportSchema,
    ProvenanceSchema,
)

logger = logging.getLogger(__name__)


class ReportCache:
    """File-backed store of finished report cells, one JSON per key."""

    def __init__(self, directory: Union[str, Path]):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    @staticmethod
    def cell_key(dataset: str, statistic: str, model: str, space: str) -> str:
        return f"{dataset}:{statistic}:{model}:{space}"

    @staticmethod
    def matches(
        provenance: ProvenanceSchema, config: ChainConfigSchema
    ) -> bool:
        """
        Whether a stored run was made with `config`.

        Unset burn_in / interval resolve against the cell's own edge
        count, so they match whatever the stored run resolved to.
        """
        expected = (config.seed, config.chains, config.resolve(0).samples)
        stored = (provenance.seed, provenance.chains, provenance.samples)
        if expected != stored:
            return False
        return all(
            getattr(config, name) in (None, getattr(provenance, name))
            for name in ("burn_in", "interval")
        )

    def _path(self, key: str) -> Path:
        safe = re.sub(r"[^A-Za-z0-9._-]+", "_", key)
        return self.directory / f"{safe}.json"

    def set(self, key: str, report: NullTestReportSchema) -> Path:
        """Store a report under its cell key."""
        path = self._path(key)
        path.write_text(report.model_dump_json(indent=2) + "\n", "utf-8")
        return path

    def get(
        self, key: str, config: Optional[ChainConfigSchema] = None
    ) -> Optional[NullTestReportSchema]:
        """
        Get a stored report, or None if absent, unreadable, or (given a
        config) made with a different seed or chain settings.
        """
        path = self._path(key)
        if not path.is_file():
            return None
        try:
            report = NullTestReportSchema.model_validate_json(
                path.read_text()
            )
        except (ValueError, json.JSONDecodeError) as e:
            logger.warning(f"ignoring unreadable cached report {path}: {e}")
            return None
        if config is not None and not self.matches(report.provenance, config):
            logger.info(f"cached report {path} is stale for this config")
            return None
        return report

    def delete(self, key: str) -> None:
        self._path(key).unlink(missing_ok=True)

    def keys(self) -> List[str]:
        return sorted(path.stem for path in self.directory.glob("*.json"))
