import pytest

from ibisgroups.config import RunConfig
from ibisgroups.suite import (
    ORACLE_FIXTURES,
    SuiteResult,
    ClaimResult,
    claim_ids,
    claims,
    oracle_row,
    run_suite,
)


@pytest.fixture(scope="module")
def small():
    return run_suite("small")


def test_claim_ids_are_unique():
    ids = [c.id for c in claims()]
    assert len(ids) == len(set(ids))
    assert set(claim_ids("small")) <= set(claim_ids("full"))
    assert len(claim_ids("full")) > len(claim_ids("small"))


def test_every_claim_names_a_criterion_and_location():
    for c in claims():
        assert 1 <= c.criterion <= 12
        assert c.location and c.expected
        assert (c.run is None) == bool(c.skip_reason)


def test_small_suite_passes(small):
    assert small.exit_code == 0
    assert not [c for c in small.claims if c.status == "fail"]
    for c in small.claims:
        if c.status == "skip":
            assert c.reason.startswith("out of scope")


def test_table_lists_every_claim(small):
    t = small.table()
    for c in small.claims:
        assert c.id in t
    assert t.splitlines()[-1].endswith("skipped")


def test_to_dict_round_trip(small):
    d = small.to_dict()
    assert d["suite"] == "small" and d["exit_code"] == 0
    assert [c["id"] for c in d["claims"]] == [c.id for c in small.claims]


def test_tiny_caps_give_exit_2():
    res = run_suite("small", RunConfig(node_cap=10), only="c6:prod:sym")
    assert res.exit_code == 2
    capped = [c for c in res.claims if c.status == "skip"]
    assert capped and all(c.reason.startswith("capped") for c in capped)


def test_exit_code_precedence():
    fail = ClaimResult("x", 1, "-", "-", "-", "fail")
    capped = ClaimResult("y", 1, "-", "-", "-", "skip", "capped: nodes")
    scope = ClaimResult("z", 12, "-", "-", "-", "skip", "out of scope: too big")
    assert SuiteResult("t", [fail, capped]).exit_code == 1
    assert SuiteResult("t", [capped, scope]).exit_code == 2
    assert SuiteResult("t", [scope]).exit_code == 0


def test_workers_do_not_change_results():
    one = run_suite("small", RunConfig(workers=1), only="c2:")
    two = run_suite("small", RunConfig(workers=2), only="c2:")
    strip = lambda r: [(c.id, c.status, c.observed) for c in r.claims]
    assert strip(one) == strip(two)


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("medium")


def test_only_prefix_filters():
    res = run_suite("small", only="c11:")
    assert {c.id for c in res.claims} == {"c11:heisenberg:q=2", "c11:heisenberg:q=3", "c11:psu:3"}


@pytest.mark.parametrize("name,text", ORACLE_FIXTURES[:5], ids=[n for n, _ in ORACLE_FIXTURES[:5]])
def test_oracle_rows_agree(name, text):
    row = oracle_row(name, text)
    assert row["naive"] == row["pruned"], row
    assert row["b"] == row["naive"][0]
