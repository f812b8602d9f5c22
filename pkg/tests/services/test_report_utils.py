import pytest

from hypernull.utils import DigestUtils, ReportUtils


def test_summary_counts_ties_on_both_sides():
    summary = ReportUtils.summarize(3.0, [1.0, 2.0, 3.0, 4.0])
    assert summary["p_upper"] == pytest.approx(3 / 5)
    assert summary["p_lower"] == pytest.approx(4 / 5)
    assert summary["p_upper"] + summary["p_lower"] >= 1 + 1 / 5
    assert summary["null_mean"] == pytest.approx(2.5)
    assert summary["z"] == pytest.approx(0.5 / summary["null_sd"])
    assert not summary["constant_statistic"]


def test_constant_null():
    summary = ReportUtils.summarize(5.0, [5.0, 5.0, 5.0])
    assert summary["null_sd"] == 0.0
    assert summary["z"] is None
    assert summary["constant_statistic"]
    assert summary["p_upper"] == 1.0


def test_csv_and_json_writers(tmp_path):
    path = ReportUtils.write_csv(
        [{"a": 1, "b": 0.5}], tmp_path / "out" / "t.csv", ["a", "b"]
    )
    assert path.read_text() == "a,b\n1,0.5\n"
    empty = ReportUtils.write_csv([], tmp_path / "e.csv", ["a", "b"])
    assert empty.read_text() == "a,b\n"
    json_path = ReportUtils.write_json({"b": 1, "a": 2}, tmp_path / "x.json")
    assert json_path.read_text() == '{\n  "a": 2,\n  "b": 1\n}\n'


def test_digests(tmp_path):
    path = tmp_path / "f.txt"
    path.write_text("abc")
    digests = DigestUtils.digests([path, tmp_path / "missing"])
    assert digests == {
        str(path): (
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        )
    }
