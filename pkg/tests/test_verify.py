"""Verification suite plumbing: reports, bounds, determinism."""

import json

import pytest

from pfaffkit.verify import (
    BoundExceededError,
    CheckResult,
    VerificationReport,
    central_suite,
    forms_suite,
    msf_suite,
    ncmsf_suite,
    run_suite,
)


def test_report_status_and_sorting():
    rep = VerificationReport("demo")
    rep.checks.append(CheckResult("b:second", True, "", 1.0))
    rep.checks.append(CheckResult("a:first", True, "", 2.0))
    assert rep.passed
    assert [c.check_id for c in rep.sorted_checks()] == ["a:first", "b:second"]
    d = rep.to_dict()
    assert d["schema"] == 1 and d["status"] == "pass"
    assert [c["id"] for c in d["checks"]] == ["a:first", "b:second"]


def test_report_failure_propagates():
    rep = VerificationReport("demo")
    rep.checks.append(CheckResult("a", False, "boom", 0.1))
    assert not rep.passed
    assert rep.to_dict()["status"] == "fail"
    assert "FAIL a" in rep.to_text()
    assert "boom" in rep.to_text()


def test_report_json_serializable():
    rep = run_suite("central", n=1)
    blob = json.dumps(rep.to_dict())
    back = json.loads(blob)
    assert back["schema"] == 1
    assert all(c["status"] == "pass" for c in back["checks"])


def test_single_coloring_run():
    rep = msf_suite(pq=(2, 2))
    assert rep.passed
    assert [c.check_id for c in rep.checks] == ["msf:identity:p2q2"]


def test_msf_bounds():
    with pytest.raises(BoundExceededError):
        msf_suite(pq=(5, 5))
    with pytest.raises(ValueError):
        msf_suite(pq=(2, 3))
    rep = msf_suite(pq=(5, 5), force=True)
    assert rep.passed


def test_uea_bounds():
    with pytest.raises(BoundExceededError):
        ncmsf_suite(n=4)
    with pytest.raises(BoundExceededError):
        central_suite(n=4)
    with pytest.raises(BoundExceededError):
        forms_suite(n=5)


def test_bound_error_mentions_force():
    with pytest.raises(BoundExceededError) as err:
        ncmsf_suite(n=4)
    assert "--force" in str(err.value)


def test_single_n_runs():
    rep = ncmsf_suite(n=1)
    assert rep.passed
    assert all(":n1" in c.check_id for c in rep.checks)
    rep = central_suite(n=2)
    assert rep.passed
    assert any(c.check_id == "central:eigenvalue:spot-n2" for c in rep.checks)


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("bogus")


def test_crashing_check_is_reported_not_raised():
    rep = VerificationReport("demo")
    from pfaffkit.verify import _run_check

    _run_check(rep, "x", lambda: 1 / 0)
    assert not rep.passed
    assert "ZeroDivisionError" in rep.checks[0].residual


def test_forms_suite_single_n():
    rep = forms_suite(n=2)
    assert rep.passed
    # both coefficient modes are exercised for the requested rank
    ids = {c.check_id for c in rep.checks}
    assert "forms:trinomial:uea-n2" in ids
    assert "forms:trinomial:comm-n2" in ids
