import re

import pytest
from pydantic import ValidationError

from hypernull.core import (
    configurability_violations,
    degree_sequence,
    dimension_sequence,
    dumps_hypergraph,
    from_bipartite,
    is_valid,
    loads_hypergraph,
    multiplicity,
    read_hypergraph,
    read_ndjson,
    to_bipartite,
    validate,
    write_ndjson,
)
from hypernull.types import Hypergraph
from hypernull.types.enum.exit_code import ExitCode
from hypernull.types.enum.violation import ViolationKind
from hypernull.types.errors import FormatError


def test_from_edges_canonicalizes_and_indexes():
    hypergraph = Hypergraph.from_edges(4, [(3, 1), (1, 3), (0, 2, 1)])
    assert hypergraph.edges == ((1, 3), (1, 3), (0, 1, 2))
    assert hypergraph.multiplicity_index == {(1, 3): 2, (0, 1, 2): 1}
    assert multiplicity(hypergraph, (3, 1)) == 2
    assert multiplicity(hypergraph, (0, 3)) == 0


def test_equality_ignores_nothing_but_the_index():
    a = Hypergraph.from_edges(3, [(0, 1), (1, 2)])
    b = Hypergraph(3, ((0, 1), (1, 2)), {})
    assert a == b
    assert a.same_multiset(Hypergraph.from_edges(3, [(1, 2), (0, 1)]))


def test_toy_sequences(toy):
    assert degree_sequence(toy).d == (1, 1, 1, 1, 1, 1, 1, 2, 1)
    assert dimension_sequence(toy).k == (6, 2, 2)
    assert degree_sequence(toy).total == dimension_sequence(toy).total
    assert is_valid(toy)


def test_validate_reports_degenerate_edge():
    broken = Hypergraph(3, ((0, 0), (1, 2)), {(0, 0): 1, (1, 2): 1})
    kinds = [v.kind for v in validate(broken)]
    assert ViolationKind.DEGENERATE_EDGE in kinds


def test_validate_reports_out_of_range_and_empty():
    broken = Hypergraph(2, ((0, 5), ()), {(0, 5): 1, (): 1})
    violations = validate(broken)
    kinds = {v.kind for v in violations}
    assert ViolationKind.NODE_OUT_OF_RANGE in kinds
    assert ViolationKind.EMPTY_EDGE in kinds
    assert violations[0].edge_index == 0


def test_validate_reports_stale_multiplicity_index():
    broken = Hypergraph(3, ((0, 1), (0, 1)), {(0, 1): 1})
    kinds = [v.kind for v in validate(broken)]
    assert kinds == [ViolationKind.MULTIPLICITY_MISMATCH]


def test_validate_reports_unsorted_edge():
    broken = Hypergraph(3, ((2, 1),), {(2, 1): 1})
    kinds = [v.kind for v in validate(broken)]
    assert kinds == [ViolationKind.UNSORTED_EDGE]


def test_configurability_violations():
    assert configurability_violations((1, 1, 1, 1), (2, 2)) == []
    problems = configurability_violations((1, 1, 1), (2, 2))
    assert any("sum(d)" in p for p in problems)
    assert configurability_violations((2, 2), (4,)) != []


def test_bipartite_round_trip(toy):
    bipartite = to_bipartite(toy)
    assert bipartite.n_left == 9
    assert bipartite.n_right == 3
    assert bipartite.left_degrees() == list(degree_sequence(toy).d)
    assert bipartite.right_degrees() == [6, 2, 2]
    assert from_bipartite(bipartite) == toy


def test_canonical_json(toy):
    text = dumps_hypergraph(toy)
    assert text == '{"n":9,"edges":[[0,1,2,3,4,5],[6,7],[7,8]]}'
    assert loads_hypergraph(text) == toy


def test_json_rejects_unsorted_edges():
    with pytest.raises(ValidationError):
        loads_hypergraph('{"n": 3, "edges": [[2, 1]]}')


@pytest.mark.parametrize(
    "payload, message",
    [
        ('{"n":4,"edges":[[3,3],[0,1],[1,2]]}', "repeats a node"),
        ('{"n":4,"edges":[[0,5],[1,2]]}', "outside [0, 4)"),
        ('{"n":2,"edges":[[],[0,1]]}', "is empty"),
    ],
)
def test_json_outside_the_model_space(payload, message):
    with pytest.raises(FormatError, match=re.escape(message)):
        loads_hypergraph(payload)


def test_json_file_errors_name_the_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"n":3,"edges":[[1,1],[0,2]]}')
    with pytest.raises(FormatError) as error:
        read_hypergraph(path)
    assert error.value.path == str(path)
    assert error.value.exit_code == ExitCode.INPUT_ERROR


def test_ndjson_stream(tmp_path, toy, matching4):
    path = tmp_path / "samples.ndjson"
    assert write_ndjson([toy, matching4], path) == 2
    assert list(read_ndjson(path)) == [toy, matching4]
