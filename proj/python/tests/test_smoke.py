import math
import os

import pytest

import deltabound as db

TRIVIAL = {
    "schema_version": 1,
    "scenario": {"kind": "trivial", "base": {"genus": 2, "systole": 1.0, "lambda1": 0.05}},
}


def test_kernel_dominance():
    v, err = db.k1(1.0, 1.0)
    assert v > 0 and err >= 0
    assert v <= sum(db.k1_upper(1.0, 1.0))
    assert db.k0(1.0, 1.0)[0] <= v


def test_supnorm_chain():
    v, err = db.s_x_quadrature_bound(1.0)
    assert v + err <= db.s_x_closed(1.0)
    assert db.s_x_closed(1.0) <= db.s_x_closed(1.0, rounded=True)


def test_modes():
    paper = db.huber_log_bound(2, 1.0, 0.05)
    tight = db.huber_log_bound(2, 1.0, 0.05, "tight")
    assert tight <= paper
    assert db.single_surface_log_bound(3, 1.0, 0.1, "tight") <= db.single_surface_log_bound(3, 1.0, 0.1)


def test_evaluate_matches_golden():
    report = db.evaluate(TRIVIAL)
    assert report["operation"] == "cor_6_3"
    assert report["final"]["decimal"] == "2.91287e+43"
    golden = os.environ.get("GOLDEN_DIR")
    if golden:
        with open(os.path.join(golden, "unramified.json")) as f:
            assert db.evaluate(f.read())["operation"] == "thm_6_1"


def test_errors():
    with pytest.raises(db.DomainError):
        db.single_surface_log_bound(1, 1.0, 0.1)
    with pytest.raises(db.UsageError):
        db.evaluate("{")
    with pytest.raises(ValueError):
        db.k0(-1.0, 1.0)


def test_ledger_and_suites():
    assert all(item["holds"] for item in db.constant_ledger())
    assert "c22" in db.suite_names()
    assert db.run_suite("remark_floor")["failures"] == 0
    assert db.run_suite("c22")["failures"] > 0
    assert math.isclose(db.c22_margin(10.0), -3.3425, abs_tol=1e-4)
