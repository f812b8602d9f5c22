import math

import pytest

from hypernull.ingest import BensonLoader, load_benson
from hypernull.schemas import IngestConfigSchema
from hypernull.types.errors import FormatError


def _write(directory, name, nverts, simplices, times):
    for part, values in (
        ("nverts", nverts),
        ("simplices", simplices),
        ("times", times),
    ):
        path = directory / f"{name}-{part}.txt"
        path.write_text("".join(f"{v}\n" for v in values))
    return directory / name


@pytest.fixture
def dataset(tmp_path):
    return _write(
        tmp_path,
        "tiny",
        nverts=[3, 2, 2, 1],
        simplices=[10, 11, 12, 12, 13, 13, 14, 15],
        times=[1, 2, 3, 4],
    )


def test_load_full_dataset(dataset):
    hypergraph, labels = load_benson(dataset)
    assert hypergraph.n == 6
    assert hypergraph.edges == ((0, 1, 2), (2, 3), (3, 4), (5,))
    assert labels.labels == [10, 11, 12, 13, 14, 15]
    assert all(labels.id_of(labels.label_of(v)) == v for v in range(6))


def test_strictly_after_tau(dataset):
    hypergraph, labels = load_benson(dataset, IngestConfigSchema(tau=2))
    assert hypergraph.m == 2
    assert hypergraph.n == 3
    assert labels.labels == [13, 14, 15]


def test_tau_inclusive(dataset):
    config = IngestConfigSchema(tau=2, tau_inclusive=True)
    hypergraph, _ = load_benson(dataset, config)
    assert hypergraph.m == 3


def test_infinite_thresholds(dataset):
    everything, _ = load_benson(dataset, IngestConfigSchema(tau=-math.inf))
    assert everything == load_benson(dataset)[0]
    nothing, labels = load_benson(dataset, IngestConfigSchema(tau=math.inf))
    assert nothing.m == 0 and nothing.n == 0
    assert len(labels) == 0


def test_directory_prefix(tmp_path):
    folder = tmp_path / "tiny"
    folder.mkdir()
    _write(folder, "tiny", [2, 2], [1, 2, 2, 3], [0, 0])
    hypergraph, _ = load_benson(folder)
    assert hypergraph.edges == ((0, 1), (1, 2))


def test_misaligned_lengths(tmp_path):
    prefix = _write(tmp_path, "bad", [3, 2], [1, 2, 3, 4], [0, 0])
    with pytest.raises(FormatError) as info:
        load_benson(prefix)
    assert "simplices" in str(info.value)


def test_timestamp_count_mismatch(tmp_path):
    prefix = _write(tmp_path, "bad", [2], [1, 2], [0, 1])
    with pytest.raises(FormatError):
        load_benson(prefix)


def test_non_integer_token_reports_its_line(tmp_path):
    prefix = _write(tmp_path, "bad", [2, 2], [1, 2, "x", 4], [0, 0])
    with pytest.raises(FormatError) as info:
        load_benson(prefix)
    assert info.value.line == 3
    assert "bad-simplices.txt:3" in str(info.value)


class TestRepeatedIds:
    @pytest.fixture
    def prefix(self, tmp_path):
        return _write(tmp_path, "dup", [3, 2], [1, 1, 2, 2, 3], [0, 0])

    def test_dedupe_by_default(self, prefix):
        hypergraph, _ = load_benson(prefix)
        assert hypergraph.edges == ((0, 1), (1, 2))

    def test_drop_with_warning(self, prefix):
        config = IngestConfigSchema(
            dedupe_within_edge=False, drop_degenerate=True
        )
        loader = BensonLoader(config)
        with pytest.warns(UserWarning):
            hypergraph, labels = loader.load(prefix)
        assert loader.dropped == 1
        assert hypergraph.edges == ((0, 1),)
        assert labels.labels == [2, 3]

    def test_strict_mode_rejects(self, prefix):
        config = IngestConfigSchema(
            dedupe_within_edge=False, drop_degenerate=False
        )
        with pytest.raises(FormatError) as info:
            load_benson(prefix, config)
        assert info.value.line == 1


def test_missing_files(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_benson(tmp_path / "absent")
