import pytest

from hypernull.services import ProfileService
from hypernull.types.enum.model import Model


def test_identical_samples_give_unit_ratios(small_config, toy):
    report = ProfileService(small_config).profile_null(
        toy, Model.STUB, analytic=True, samples=[toy] * 3, dataset="toy"
    )
    assert report.j == list(range(7))
    assert report.observed[:2] == pytest.approx([2 / 3, 1 / 3])
    assert report.null_mean == pytest.approx(report.observed)
    assert report.null_se == [0.0] * 7
    ratios = report.ratios()
    assert ratios[0] == pytest.approx(1.0)
    assert ratios[1] == pytest.approx(1.0)
    assert ratios[2] is None
    assert len(report.analytic) == 7
    assert report.provenance.samples == 3


def test_chain_driven_profile(small_config, toy5):
    report = ProfileService(small_config).profile_null(toy5, Model.VERTEX)
    assert report.provenance.samples == 20
    assert sum(report.null_mean) == pytest.approx(1.0)
    assert all(se >= 0 for se in report.null_se)
    assert report.analytic is None

    rows = ProfileService.profile_rows(report)
    assert [row["j"] for row in rows] == report.j
    assert rows[0]["model"] == "vertex"
