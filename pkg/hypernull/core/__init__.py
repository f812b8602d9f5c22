from .sequences import degree_sequence, dimension_sequence, multiplicity
from .validation import validate, is_valid, configurability_violations
from .projection import project
from .bipartite import to_bipartite, from_bipartite
from .serialization import (
    dumps_hypergraph,
    loads_hypergraph,
    read_hypergraph,
    write_hypergraph,
    write_ndjson,
    read_ndjson,
)
