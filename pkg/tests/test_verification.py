"""Verification harness behaviour: reporting, overrides, crash capture."""

import math

import pytest

from ermakov import models, verification


def test_suite_names_are_stable():
    assert verification.suite_names() == (
        "free-particle", "pinney", "energy", "overdamped",
        "thermal-equilibrium", "thermal-limits", "radiative", "madelung")


def test_argument_validation():
    with pytest.raises(ValueError, match="unknown suite"):
        verification.run_suites("pinneyy")
    with pytest.raises(ValueError, match="unknown suite"):
        verification.run_suites(["free-particle", "nope"])
    with pytest.raises(ValueError, match="jobs"):
        verification.run_suites("free-particle", jobs=0)
    with pytest.raises(ValueError, match="rel_tol"):
        verification.run_suites("free-particle", rel_tol=1.5)
    with pytest.raises(ValueError, match="rel_tol"):
        verification.run_suites("free-particle", rel_tol=0.0)


def test_fast_suites_pass_and_report_shape():
    report = verification.run_suites(["free-particle", "energy"])
    assert report.passed
    assert report.failed_names == ()
    assert [r.name for r in report.results[:2]] == [
        "free-spreading-match", "free-spreading-rate-match"]
    payload = report.to_dict()
    assert payload["passed"] is True
    assert len(payload["checks"]) == len(report.results)
    first = payload["checks"][0]
    assert set(first) == {"name", "passed", "measured", "tolerance",
                          "detail"}
    assert first["measured"] <= first["tolerance"]


def test_loose_integration_override_fails_tight_bounds():
    report = verification.run_suites("pinney", rel_tol=1e-2)
    assert not report.passed
    assert "pinney-oracle-sweep" in report.failed_names


def test_crashing_check_is_captured_not_raised(monkeypatch):
    def boom(t, sigma0, params):
        raise RuntimeError("synthetic fault")

    monkeypatch.setattr("ermakov.analytic.free_spreading", boom)
    report = verification.run_suites("free-particle")
    assert not report.passed
    assert len(report.results) == 2
    for res in report.results:
        assert not res.passed
        assert math.isnan(res.measured)
        assert res.detail.startswith("raised")


def test_detects_wrong_model_acceleration(monkeypatch):
    def skewed(sigma, params):
        return 1.02 * (-params.omega0 ** 2 * sigma
                       + params.hbar ** 2
                       / (4.0 * params.m ** 2 * sigma ** 3))

    monkeypatch.setattr(models, "conservative_acceleration", skewed)
    report = verification.run_suites("free-particle")
    assert not report.passed


def test_parallel_runs_match_serial():
    names = ("free-particle", "energy", "overdamped", "madelung")
    serial = verification.run_suites(names, jobs=1)
    parallel = verification.run_suites(names, jobs=3)
    assert serial.to_dict() == parallel.to_dict()


def test_electron_scale_check_uses_physical_constants():
    report = verification.run_suites("radiative")
    names = [r.name for r in report.results]
    assert "electron-memory-time" in names
    res = report.results[names.index("electron-memory-time")]
    assert res.passed
    assert 6.2e-24 < res.measured < 6.3e-24
