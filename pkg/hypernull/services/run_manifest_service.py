import logging
import time
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Union

from hypernull.schemas import RunManifestSchema
from hypernull.utils import DigestUtils, ReportUtils

logger = logging.getLogger(__name__)


def _plain(value: Any) -> Any:
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


class RunManifestService:
    """Collects what is needed to rerun a command and writes it out."""

    def __init__(
        self,
        command: str,
        flags: Dict[str, Any],
        inputs: Iterable[Union[str, Path]] = (),
    ):
        self.command = command
        self.flags = {
            key: _plain(value)
            for key, value in sorted(flags.items())
            if not callable(value)
        }
        self.inputs = list(inputs)
        self.started = time.perf_counter()

    def manifest_path(self) -> Optional[Path]:
        if self.flags.get("manifest"):
            return Path(self.flags["manifest"])
        if self.flags.get("out_dir"):
            return Path(self.flags["out_dir"]) / "manifest.json"
        if self.flags.get("output"):
            output = Path(self.flags["output"])
            return output.with_name(output.name + ".manifest.json")
        return None

    def build(
        self, artifacts: Iterable[Union[str, Path]], exit_code: int
    ) -> RunManifestSchema:
        return RunManifestSchema(
            command=self.command,
            flags=self.flags,
            seed=self.flags.get("seed"),
            input_digests=DigestUtils.digests(self.inputs),
            artifacts=[str(path) for path in artifacts],
            wall_clock=time.perf_counter() - self.started,
            exit_code=int(exit_code),
        )

    def write(
        self, artifacts: Iterable[Union[str, Path]], exit_code: int
    ) -> Optional[Path]:
        path = self.manifest_path()
        if path is None:
            return None
        try:
            ReportUtils.write_json(self.build(artifacts, exit_code), path)
        except OSError as e:
            logger.warning(f"could not write run manifest {path}: {e}")
            return None
        return path
