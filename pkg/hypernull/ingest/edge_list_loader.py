import logging
from pathlib import Path
from typing import Optional, Tuple, Union

from hypernull.ingest.base_loader import BaseLoader
from hypernull.schemas import IngestConfigSchema
from hypernull.types import Hypergraph, LabelMap

logger = logging.getLogger(__name__)


class EdgeListLoader(BaseLoader):
    """One edge per line, whitespace-separated labels; `#` starts a comment."""

    def load(self, path: Union[str, Path]) -> Tuple[Hypergraph, LabelMap]:
        labels = LabelMap()
        edges = []
        for line, text in self._lines(path):
            if not text or text.startswith("#"):
                continue
            members = self._resolve_duplicates(text.split(), path, line)
            if members is None:
                continue
            edges.append([labels.intern(label) for label in members])
        hypergraph = Hypergraph.from_edges(len(labels), edges)
        logger.info(
            f"loaded {Path(path).name}: n={hypergraph.n}, m={hypergraph.m}"
        )
        return hypergraph, labels


def load_edge_list(
    path: Union[str, Path], config: Optional[IngestConfigSchema] = None
) -> Tuple[Hypergraph, LabelMap]:
    return EdgeListLoader(config).load(path)
