import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

from hypernull.ingest.base_loader import BaseLoader
from hypernull.schemas import IngestConfigSchema
from hypernull.types import Hypergraph, LabelMap
from hypernull.types.errors import FormatError

logger = logging.getLogger(__name__)


class BensonLoader(BaseLoader):
    """
    Reads the `<name>-nverts.txt`, `<name>-simplices.txt` and
    `<name>-times.txt` triple.

    The prefix is either the common path stem (`data/email-Enron`) or a
    directory named after the dataset holding the three files.
    """

    def paths(self, prefix: Union[str, Path]) -> Tuple[Path, Path, Path]:
        prefix = Path(prefix)
        if prefix.is_dir():
            prefix = prefix / prefix.name
        return tuple(
            prefix.with_name(f"{prefix.name}-{part}.txt")
            for part in ("nverts", "simplices", "times")
        )

    def _keep(self, time: float) -> bool:
        tau = self.config.tau
        if tau is None:
            return True
        return time >= tau if self.config.tau_inclusive else time > tau

    def load(self, prefix: Union[str, Path]) -> Tuple[Hypergraph, LabelMap]:
        nverts_path, simplices_path, times_path = self.paths(prefix)
        nverts = self._read_column(nverts_path)
        simplices = self._read_column(simplices_path)
        times = self._read_column(times_path, number=True)

        if sum(nverts) != len(simplices):
            raise FormatError(
                f"nverts sum to {sum(nverts)} but there are "
                f"{len(simplices)} simplex ids",
                str(simplices_path),
            )
        if len(times) != len(nverts):
            raise FormatError(
                f"{len(times)} timestamps for {len(nverts)} edges",
                str(times_path),
            )

        raw_edges: List[list] = []
        offset = 0
        for line, (size, time) in enumerate(zip(nverts, times), start=1):
            if size < 1:
                raise FormatError(
                    f"edge size must be positive, found {size}",
                    str(nverts_path),
                    line,
                )
            members = simplices[offset : offset + size]
            offset += size
            if not self._keep(time):
                continue
            members = self._resolve_duplicates(members, nverts_path, line)
            if members is not None:
                raw_edges.append(members)

        # Nodes without a kept edge are dropped; ids follow raw id order
        labels = LabelMap.from_labels(
            sorted({v for edge in raw_edges for v in edge})
        )
        hypergraph = Hypergraph.from_edges(
            len(labels),
            ([labels.id_of(v) for v in edge] for edge in raw_edges),
        )
        logger.info(
            f"loaded {Path(prefix).name}: n={hypergraph.n}, m={hypergraph.m}"
            f" ({len(nverts) - hypergraph.m} edges filtered or dropped)"
        )
        return hypergraph, labels


def load_benson(
    prefix: Union[str, Path], config: Optional[IngestConfigSchema] = None
) -> Tuple[Hypergraph, LabelMap]:
    return BensonLoader(config).load(prefix)
