import pytest

from hypernull.core import degree_sequence, project
from hypernull.schemas import ChainConfigSchema
from hypernull.services import (
    NullTestService,
    ReportCache,
    null_test,
    resolve_statistic,
)
from hypernull.types.enum.graph import ProjectionMode
from hypernull.types.enum.metrics import ChoiceKind
from hypernull.types.enum.model import Model, Space
from hypernull.types.errors import FormatError, StatisticSpaceMismatch


@pytest.fixture
def service(small_config):
    return NullTestService(small_config)


def test_edge_count_is_constant(service, toy5):
    report = service.null_test(
        toy5, "edge_count", Model.STUB, Space.HYPERGRAPH
    )
    assert report.constant_statistic
    assert report.null_sd == 0.0
    assert report.z is None
    assert report.null_mean == 15.0
    assert len(report.null_samples) == 20


def test_profiles_have_no_projected_null(service, toy5):
    with pytest.raises(StatisticSpaceMismatch):
        service.null_test(
            toy5, "mean_intersection", Model.VERTEX, Space.PROJECTED
        )
    with pytest.raises(StatisticSpaceMismatch):
        service.null_test(toy5, "profile", Model.STUB, Space.PROJECTED)


def test_unknown_statistics():
    with pytest.raises(FormatError):
        resolve_statistic("modularity")
    with pytest.raises(FormatError):
        resolve_statistic("assortativity:middle")


def test_report_is_reproducible(small_config, toy5):
    first = null_test(
        toy5, "clustering", Model.VERTEX, Space.HYPERGRAPH, small_config
    )
    second = null_test(
        toy5, "clustering", Model.VERTEX, Space.HYPERGRAPH, small_config
    )
    assert first.model_dump_json() == second.model_dump_json()
    assert first.observed == pytest.approx(6 / 9)
    assert first.provenance.burn_in == 50
    assert first.provenance.samples == 20


def test_projected_null_keeps_projected_degrees(service, toy5):
    expected = project(toy5, ProjectionMode.MULTI).degrees()
    samples = service.null_samples(toy5, Model.STUB, Space.PROJECTED)
    assert len(samples) == 20
    for sample in samples:
        assert all(len(edge) == 2 for edge in sample.edges)
        assert list(degree_sequence(sample).d) == expected


def test_hypergraph_null_keeps_sequences(service, toy5):
    samples = service.null_samples(toy5, Model.VERTEX, Space.HYPERGRAPH)
    for sample in samples:
        assert degree_sequence(sample) == degree_sequence(toy5)


def test_toy_copies_direction(toy5):
    """Hypergraph nulls sit above the data, the projected null below it."""
    service = NullTestService(ChainConfigSchema(samples=200, seed=0))
    for kind in ChoiceKind:
        report = service.null_test(
            toy5,
            f"assortativity:{kind.value}",
            Model.VERTEX,
            Space.HYPERGRAPH,
        )
        assert report.observed < report.null_mean
    projected = service.null_test(
        toy5, "assortativity:top2", Model.VERTEX, Space.PROJECTED
    )
    assert projected.observed > projected.null_mean


def test_report_cache(tmp_path, service, toy5):
    cache = ReportCache(tmp_path)
    report = service.null_test(
        toy5, "edge_count", Model.STUB, Space.HYPERGRAPH
    )
    key = ReportCache.cell_key("toy5", "edge_count", "stub", "hypergraph")
    assert cache.get(key) is None
    cache.set(key, report)
    assert cache.get(key) == report
    assert cache.keys() == ["toy5_edge_count_stub_hypergraph"]
    cache.delete(key)
    assert cache.get(key) is None


def test_unreadable_cache_entry_is_ignored(tmp_path):
    cache = ReportCache(tmp_path)
    (tmp_path / "a_b_c_d.json").write_text("{not json")
    assert cache.get("a:b:c:d") is None


@pytest.mark.parametrize(
    "update, fresh",
    [
        ({}, True),
        ({"burn_in": None, "interval": None}, True),
        ({"seed": 4}, False),
        ({"samples": 21}, False),
        ({"samples": None}, False),
        ({"burn_in": 60}, False),
        ({"chains": 2}, False),
    ],
)
def test_report_cache_checks_provenance(
    tmp_path, service, small_config, toy5, update, fresh
):
    cache = ReportCache(tmp_path)
    report = service.null_test(
        toy5, "edge_count", Model.STUB, Space.HYPERGRAPH
    )
    cache.set("cell", report)
    config = small_config.model_copy(update=update)
    assert (cache.get("cell", config) == report) is fresh
