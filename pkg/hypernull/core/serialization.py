from pathlib import Path
from typing import Iterable, Iterator, Optional, Union

from hypernull.core.validation import validate
from hypernull.schemas import HypergraphSchema
from hypernull.types import Hypergraph
from hypernull.types.errors import FormatError


def dumps_hypergraph(hypergraph: Hypergraph) -> str:
    """Canonical JSON: {"n": int, "edges": [[int, ...], ...]}."""
    schema = HypergraphSchema(
        n=hypergraph.n, edges=[list(edge) for edge in hypergraph.edges]
    )
    return schema.model_dump_json()


def loads_hypergraph(
    payload: Union[str, bytes], source: Optional[str] = None
) -> Hypergraph:
    """Parse canonical JSON; anything outside the model space is rejected."""
    schema = HypergraphSchema.model_validate_json(payload)
    hypergraph = Hypergraph.from_edges(schema.n, schema.edges)
    violations = validate(hypergraph)
    if violations:
        raise FormatError("; ".join(v.message for v in violations), source)
    return hypergraph


def read_hypergraph(path: Union[str, Path]) -> Hypergraph:
    return loads_hypergraph(
        Path(path).read_text(encoding="utf-8"), source=str(path)
    )


def write_hypergraph(hypergraph: Hypergraph, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps_hypergraph(hypergraph) + "\n", "utf-8")


def write_ndjson(
    hypergraphs: Iterable[Hypergraph], path: Union[str, Path]
) -> int:
    """Stream samples as newline-delimited canonical JSON."""
    count = 0
    with open(path, "w", encoding="utf-8") as handle:
        for hypergraph in hypergraphs:
            handle.write(dumps_hypergraph(hypergraph) + "\n")
            count += 1
    return count


def read_ndjson(path: Union[str, Path]) -> Iterator[Hypergraph]:
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            if line.strip():
                yield loads_hypergraph(line)
