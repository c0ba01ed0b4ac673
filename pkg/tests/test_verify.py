"""Verification harness: suite dispatch, corrupt-control hook, crash capture."""

import math

import pytest

from bateman.errors import DomainError
from bateman.verify import (
    SUITE_NAMES,
    SUITES,
    VerifyConfig,
    all_passed,
    run_suite,
)


@pytest.fixture()
def cfg(params):
    return VerifyConfig(params=params)


def test_suite_names_cover_registry():
    assert set(SUITE_NAMES) == set(SUITES)
    assert sum(len(v) for v in SUITES.values()) == 44


def test_algebra_suite_passes(cfg):
    results = run_suite("algebra", cfg)
    assert len(results) == len(SUITES["algebra"])
    assert all_passed(results)
    ids = [r.check_id for r in results]
    assert len(ids) == len(set(ids))


def test_dynamics_suite_passes(cfg):
    assert all_passed(run_suite("dynamics", cfg))


def test_unknown_suite_rejected(cfg):
    with pytest.raises(DomainError):
        run_suite("spectral", cfg)


def test_corrupt_hook_flips_exactly_one(params):
    cfg = VerifyConfig(params=params, corrupt_check="algebra.boundary-defect")
    results = run_suite("algebra", cfg)
    failed = [r for r in results if not r.passed]
    assert [r.check_id for r in failed] == ["algebra.boundary-defect"]
    assert failed[0].detail.get("corrupted") is True
    assert not all_passed(results)


def test_crashing_check_is_reported(params):
    # a coarse truncation once raised through run_suite; now any check that
    # still escapes must come back as an inf-deviation failure, not a raise
    def boom(cfg):
        raise DomainError("synthetic failure")

    boom.__name__ = "check_synthetic_case"
    SUITES["algebra"].append(boom)
    try:
        results = run_suite("algebra", VerifyConfig(params=params, n_max=6))
        crashed = [r for r in results if r.deviation == math.inf]
        assert [r.check_id for r in crashed] == ["synthetic-case"]
        assert not crashed[0].passed
        assert "DomainError" in crashed[0].detail["error"]
    finally:
        SUITES["algebra"].remove(boom)


def test_tol_scale_loosens(params):
    # negative control stays failed even with a large scale: the hook adds
    # an absolute offset, so scaling must not rescue it
    cfg = VerifyConfig(params=params, tol_scale=10.0,
                       corrupt_check="dynamics.factor")
    results = run_suite("dynamics", cfg)
    assert not all_passed(results)
