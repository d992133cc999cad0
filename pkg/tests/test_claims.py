"""Claim registry behavior: suites, report shape, mutation sensitivity."""

import pytest

from domexc import claims
from domexc.claims import ClaimReport, claim_ids, run_claim, run_suite
from domexc.domination import ParamResult


def test_suite_composition():
    quick = claim_ids("quick")
    paper = claim_ids("paper")
    long_ids = claim_ids("long")
    assert set(quick) <= set(paper)
    assert paper == long_ids
    assert len(paper) == len(set(paper))
    assert "five-regular-twelve-search" in paper
    assert "five-regular-twelve-search" not in quick
    with pytest.raises(ValueError):
        claim_ids("fast")


def test_unknown_claim_rejected():
    with pytest.raises(KeyError):
        run_claim("no-such-claim")


def test_report_shape():
    rep = run_claim("glued-cycles")
    assert isinstance(rep, ClaimReport)
    assert rep.status == "pass"
    assert rep.runtime is None
    data = rep.to_json()
    assert list(data) == [
        "claim_id",
        "anchor",
        "status",
        "expected",
        "computed",
        "runtime",
    ]
    assert data["expected"] == data["computed"]


def test_timings_flag():
    rep = run_claim("glued-cycles", timings=True)
    assert isinstance(rep.runtime, float) and rep.runtime >= 0


def test_long_claim_skipped_by_default():
    rep = run_claim("five-regular-twelve-search")
    assert rep.status == "skipped-long-running"
    assert rep.computed is None


def test_quick_suite_all_pass():
    reports = run_suite("quick")
    assert [r.claim_id for r in reports] == list(claim_ids("quick"))
    assert all(r.status == "pass" for r in reports)


def test_suite_parallel_matches_serial():
    serial = [r.to_json() for r in run_suite("quick", jobs=1)]
    parallel = [r.to_json() for r in run_suite("quick", jobs=4)]
    assert serial == parallel


def test_mutated_solver_is_caught(monkeypatch):
    # a solver that inflates every value must break the quick suite
    import domexc.domination as dom

    real = dom._solve

    def inflated(g, param, first_only):
        res = real(g, param, first_only)
        return ParamResult(res.param, res.value + 1, res.sets)

    monkeypatch.setattr(dom, "_solve", inflated)
    reports = run_suite("quick")
    assert any(r.status == "fail" for r in reports)
