"""Pipeline reports and the command-line surface."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from maasslift import records
from maasslift.lfun import DirichletChar
from maasslift.pipeline import (
    check_hypotheses,
    compare_traces,
    congruence_scan,
    irreducibility_argument,
    residual_trace_check,
    verify_paper_example,
)


def test_residual_trace_check():
    ok, wit = residual_trace_check(516223, 32486, 483789, 258573)
    assert ok and wit["trace"] == 258573
    ok, _ = residual_trace_check(516223, 0, 0, 2)
    assert ok
    ok, _ = residual_trace_check(516223, 32486, 483789, 258574)
    assert not ok


def test_compare_traces_inconclusive_control():
    out = compare_traces([78993, 12345], [85284, 287487])
    assert out["conclusive"]
    forced = compare_traces([85284], [85284, 287487])
    assert not forced["conclusive"] and forced["matches"] == [85284]


def test_irreducibility_argument_regular_prime():
    out = irreducibility_argument(13, 12)
    assert out["irregular_indices"] == []
    assert "no reducible shape possible" in out["conclusion"]


def test_congruence_scan():
    assert congruence_scan(54, 516223)["pass"]
    # 71 divides the discriminant of the weight-54 charpoly: fail path
    assert not congruence_scan(54, 71)["pass"]
    vac = congruence_scan(12, 691)
    assert vac["pass"] and vac["vacuous"]


def test_check_hypotheses_probe_and_controls():
    probe = check_hypotheses(12, 691, DirichletChar.trivial(1), -3)
    assert probe.witnesses.get("note") == "character required"
    assert not probe.hypotheses_satisfied
    bad = check_hypotheses(54, 516223, DirichletChar.quadratic(-3), 5)
    failed = {c["name"] for c in bad.checks if not c["pass"]}
    assert "side: chi_D(-1) = -1" in failed
    assert not bad.hypotheses_satisfied


def test_verify_paper_example_report():
    rep = verify_paper_example()
    assert rep.all_pass()
    assert rep.hypotheses_satisfied
    assert rep.m == 1 and rep.n == 0
    # deterministic: two runs serialize byte-identically
    rep2 = verify_paper_example()
    r1 = records.FormRecord("report", 54, 0, rep.to_payload()).to_json()
    r2 = records.FormRecord("report", 54, 0, rep2.to_payload()).to_json()
    assert r1 == r2


def _run_cli(*args, env_extra=None):
    import os

    env = dict(os.environ)
    env.setdefault("MAASSLIFT_CACHE_DIR", str(Path(__file__).parent / ".cache"))
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run(
        [sys.executable, "-m", "maasslift.cli", *args],
        capture_output=True,
        text=True,
        env=env,
        timeout=300,
    )
    return proc


def test_cli_hecke_and_charpoly():
    proc = _run_cli("hecke", "--weight", "12", "--ell", "2")
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["payload"]["charpoly"] == ["24", "1"]  # x + 24
    assert doc["payload"]["rows"] == [["-24"]]


def test_cli_bernoulli_scan():
    proc = _run_cli("bernoulli", "--mod-p", "37", "--scan")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["payload"]["irregular_indices"] == [32]


def test_cli_error_codes():
    proc = _run_cli("bernoulli", "--mod-p", "37")
    assert proc.returncode == 2
    err = json.loads(proc.stderr)
    assert err["error"] == "domain-error"
    proc = _run_cli("bernoulli", "--mod-p", "37", "--index", "3")
    assert proc.returncode == 2
    proc = _run_cli("basis", "--weight", "54", "--prec", "2")
    assert proc.returncode == 3
    assert json.loads(proc.stderr)["error"] == "precision-error"


def test_cli_round_trip_and_cache_identity(tmp_path):
    env = {"MAASSLIFT_CACHE_DIR": str(tmp_path)}
    cold = _run_cli("hecke", "--weight", "16", "--ell", "2", env_extra=env)
    warm = _run_cli("hecke", "--weight", "16", "--ell", "2", env_extra=env)
    assert cold.returncode == warm.returncode == 0
    assert cold.stdout == warm.stdout
    rec = records.FormRecord.from_json(cold.stdout)
    assert rec.kind == "matrix"


def test_cli_siegel_hecke_identity():
    proc = _run_cli("siegel-hecke", "--ell", "2", "--weight", "10", "--bound", "2")
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["payload"]["matches_identity"] is True
    assert doc["payload"]["eigenvalue"] == "240"


def test_cli_verify_paper_example_end_to_end():
    proc = _run_cli("verify-paper-example")
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(proc.stdout)
    assert doc["payload"]["hypotheses_satisfied"] is True
    assert all(c["pass"] for c in doc["payload"]["checks"])
    assert doc["payload"]["m"] == 1 and doc["payload"]["n"] == 0


def test_cli_jacobi_odd_weight_note():
    proc = _run_cli("jacobi", "--weight", "11", "--dmax", "40")
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["payload"]["forms"] == []
    assert "vanish" in doc["payload"]["note"]
