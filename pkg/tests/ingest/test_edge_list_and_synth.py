import pytest

from hypernull.core import (
    degree_sequence,
    dimension_sequence,
    read_hypergraph,
    validate,
    write_hypergraph,
)
from hypernull.ingest import load_edge_list, reconcile_sizes, synth
from hypernull.schemas import IngestConfigSchema, SynthSpecSchema
from hypernull.types.errors import FormatError


def test_edge_list(tmp_path):
    path = tmp_path / "edges.txt"
    path.write_text("a b c\nd e\n")
    hypergraph, labels = load_edge_list(path)
    assert hypergraph.n == 5
    assert dimension_sequence(hypergraph).k == (3, 2)
    assert labels.labels == ["a", "b", "c", "d", "e"]


def test_empty_edge_list(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("")
    hypergraph, _ = load_edge_list(path)
    assert hypergraph.n == 0 and hypergraph.m == 0


def test_toy_edge_list_matches_hand_built_toy(tmp_path, toy):
    path = tmp_path / "toy.txt"
    path.write_text("# the toy network\nA B C D E F\n\nG H\nH I\n")
    hypergraph, _ = load_edge_list(path)
    assert hypergraph == toy


def test_edge_list_strict_mode(tmp_path):
    path = tmp_path / "dup.txt"
    path.write_text("a b\nc c d\n")
    config = IngestConfigSchema(
        dedupe_within_edge=False, drop_degenerate=False
    )
    with pytest.raises(FormatError) as info:
        load_edge_list(path, config)
    assert info.value.line == 2


def test_load_serialize_load_is_identity(tmp_path):
    path = tmp_path / "edges.txt"
    path.write_text("x y z\ny z\nw x\n")
    hypergraph, _ = load_edge_list(path)
    write_hypergraph(hypergraph, tmp_path / "h.json")
    again = read_hypergraph(tmp_path / "h.json")
    assert again.n == hypergraph.n
    assert again.edge_multiset() == hypergraph.edge_multiset()


def test_toy_copies():
    hypergraph = synth(SynthSpecSchema(kind="toy_copies", copies=5))
    assert hypergraph.n == 45
    assert hypergraph.m == 15
    assert validate(hypergraph) == []


def test_bounded_perfect_matching():
    spec = SynthSpecSchema(
        kind="bounded", n=100, degree_low=1, degree_high=1, edge_size=2
    )
    hypergraph = synth(spec, seed=3)
    assert hypergraph.m == 50
    assert degree_sequence(hypergraph).d == (1,) * 100


def test_bounded_generator_is_reproducible():
    spec = SynthSpecSchema(
        kind="bounded", n=200, degree_low=1, degree_high=5, edge_size=3
    )
    first = synth(spec, seed=8)
    assert first == synth(spec, seed=8)
    assert validate(first) == []
    assert max(degree_sequence(first).d) <= 5


def test_reconcile_sizes_trims_the_last_edge():
    assert reconcile_sizes(10, [3]) == [3, 3, 3, 1]
    assert reconcile_sizes(9, [2, 3]) == [2, 3, 2, 2]
    assert reconcile_sizes(0, [3]) == []


def test_degree_range_is_validated():
    with pytest.raises(ValueError):
        SynthSpecSchema(kind="bounded", degree_low=3, degree_high=1)
