import pytest

from prism_silt import verify as V
from prism_silt.errors import BoundExceeded, ParseError


def test_config_validation():
    with pytest.raises(ValueError):
        V.Config(n=0)
    with pytest.raises(ValueError):
        V.Config(prime=32002)
    with pytest.raises(ValueError):
        V.Config(retries=0)
    assert V.Config(seed=3).rng().integers(100) == V.Config(seed=3).rng().integers(100)


def test_bounds():
    with pytest.raises(BoundExceeded):
        V.run_suite("mizuno", V.Config(n=V.BOUNDS["mizuno"] + 1))
    with pytest.raises(BoundExceeded):
        V.run_all(V.Config(n=6))
    with pytest.raises(ParseError):
        V.run_suite("nonsense", V.Config(n=1))


@pytest.mark.parametrize("suite", V.SUITES)
def test_suites_small(suite):
    report = V.run_suite(suite, V.Config(n=2))
    assert report.passed, report.to_json()
    out = report.to_json()
    assert out["schema"] == V.SCHEMA and out["checks"]


def test_rank2_rows():
    rows = V.rank2_rows(V.Config(n=2))
    assert len(rows) == 6 and all(r["mizuno"] for r in rows)
    for golden, row in zip(V.RANK2_TABLE, rows):
        assert {k: row[k] for k in golden} == golden


def test_run_all_rank_one():
    reports = V.run_all(V.Config(n=1))
    assert {r.suite for r in reports} == set(V.SUITES) - {"rank2"}
    assert all(r.passed for r in reports)


def test_algebra_cache():
    assert V.algebra("Pi", 2) is V.algebra("Pi", 2)
    with pytest.raises(ValueError):
        V.algebra("Lambda", 2)
