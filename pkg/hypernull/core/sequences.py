from hypernull.types import (
    DegreeSequence,
    DimensionSequence,
    Edge,
    Hypergraph,
    canonical_edge,
)


def degree_sequence(hypergraph: Hypergraph) -> DegreeSequence:
    degrees = [0] * hypergraph.n
    for edge in hypergraph.edges:
        for v in edge:
            degrees[v] += 1
    return DegreeSequence(tuple(degrees))


def dimension_sequence(hypergraph: Hypergraph) -> DimensionSequence:
    return DimensionSequence(tuple(len(edge) for edge in hypergraph.edges))


def multiplicity(hypergraph: Hypergraph, edge: Edge) -> int:
    """Number of edges equal to `edge` as node sets, itself included."""
    return hypergraph.multiplicity_index.get(canonical_edge(edge), 0)
