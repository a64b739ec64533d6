import pytest

from ncsym import checks


@pytest.mark.parametrize("suite", sorted(checks.SUITES))
def test_suite_passes_at_small_degree(suite):
    kwargs = {"max_n": 3}
    for result in checks.SUITES[suite](**kwargs):
        assert result.passed, f"{suite}: {result.name}: {result.detail}"


def test_run_suite_all():
    results = checks.run_suite("all", max_n=2)
    assert results and all(r.passed for r in results)
    with pytest.raises(ValueError):
        checks.run_suite("nonsense")


def test_conjecture_report_shape():
    rows = checks.conjecture_report(3)
    assert [row["n"] for row in rows] == [1, 2, 3]
    assert all(row["internal_agreement"] for row in rows)
    assert rows[0]["predicted_sign"] == "+"
    assert rows[1]["predicted_sign"] == "-"
    assert rows[1]["min_coeff"] == "-1"
    assert rows[2]["nonzero_terms"] == 4 and rows[2]["zero_terms"] == 1
