import csv
import json
import os
import subprocess

import pytest

CLI = os.environ.get("MUSKAT_CLI")
CONFIGS = os.environ.get("MUSKAT_CONFIG_DIR")

pytestmark = pytest.mark.skipif(
    CLI is None or CONFIGS is None, reason="needs MUSKAT_CLI and MUSKAT_CONFIG_DIR"
)


def run(*args, cwd):
    return subprocess.run([CLI, *args], cwd=cwd, capture_output=True, text=True)


def test_dn_check_flat_case_and_byte_determinism(tmp_path):
    out = tmp_path / "out"
    args = ("dn-check", "--config", f"{CONFIGS}/verify.json", "--out", str(out), "--quiet")
    assert run(*args, cwd=tmp_path).returncode == 0
    first = (out / "run-summary.json").read_bytes()

    doc = json.loads(first)
    flat = doc["cases"][0]
    assert flat["rel_sup_error"] <= 1e-10
    assert doc["all_passed"] is True
    assert all(case["rel_sup_error"] <= case["gate"] for case in doc["cases"])

    assert run(*args, cwd=tmp_path).returncode == 0
    assert (out / "run-summary.json").read_bytes() == first


def test_dump_strip_writes_the_potential_samples(tmp_path):
    out = tmp_path / "out"
    r = run("dn-check", "--config", f"{CONFIGS}/verify.json", "--out", str(out),
            "--dump-strip", "--quiet", cwd=tmp_path)
    assert r.returncode == 0
    rows = list(csv.DictReader(open(out / "strip-potential.csv")))
    assert rows[0].keys() == {"x", "z", "v"}
    assert len(rows) == 128 * 160  # N columns on every strip layer


def test_evolve_example_norm_history_is_nonincreasing(tmp_path):
    out = tmp_path / "out"
    r = run("evolve", "--config", f"{CONFIGS}/evolve-example.json", "--out", str(out),
            "--quiet", cwd=tmp_path)
    assert r.returncode == 0

    rows = list(csv.DictReader(open(out / "norms.csv")))
    b1 = [float(row["besov1"]) for row in rows]
    assert len(b1) == 33  # K + 1 samples
    assert all(b <= a + 1e-9 for a, b in zip(b1, b1[1:]))

    doc = json.loads((out / "run-summary.json").read_text())
    for key in ("problem", "d", "N", "L", "M", "Z", "T", "K", "dt", "params", "eta0",
                "tolerances", "seed", "output_dir"):
        assert key in doc["config"], key
    for key in ("problem", "N", "K", "T", "kappa", "delta", "iterations",
                "contraction_ratio", "x1_kappa_final", "accepted"):
        assert key in doc["run"], key
    assert doc["run"]["accepted"] is True


def test_two_phase_closure_diagnostics(tmp_path):
    out = tmp_path / "out"
    r = run("two-phase", "--config", f"{CONFIGS}/two-phase-example.json", "--out", str(out),
            "--quiet", cwd=tmp_path)
    assert r.returncode == 0
    doc = json.loads((out / "run-summary.json").read_text())
    assert doc["closure"]["jump_defect"] <= 1e-12
    assert doc["run"]["accepted"] is True


def test_verify_reports_every_criterion_and_the_known_red(tmp_path):
    out = tmp_path / "out"
    r = run("verify", "--config", f"{CONFIGS}/verify.json", "--out", str(out), "--quiet",
            cwd=tmp_path)
    assert r.returncode == 4  # one criterion is red by construction

    text = (out / "verify-report.json").read_text()
    doc = json.loads(text)
    by_id = {c["id"]: c for c in doc["criteria"]}
    assert sorted(by_id) == list(range(1, 12))
    assert by_id[2]["passed"] is False
    assert "first-order response vanishes" in by_id[2]["detail"]
    assert all(by_id[i]["passed"] for i in range(1, 12) if i != 2)
    assert doc["all_passed"] is False
    assert "runtime" not in text  # timing never enters the report


def test_exit_codes(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"problem": "one_phase", "N": 63}')
    r = run("evolve", "--config", str(bad), "--out", str(tmp_path / "o1"), cwd=tmp_path)
    assert r.returncode == 2

    big = tmp_path / "big.json"
    big.write_text(json.dumps({
        "problem": "one_phase", "N": 64, "L": 6.283185307179586, "T": 0.5, "K": 16,
        "params": {"mu_minus": 1.0, "rho_minus": 1.0},
        "eta0": {"modes": [[1, 0.2, 0.0]]}, "seed": 1,
    }))
    r = run("evolve", "--config", str(big), "--out", str(tmp_path / "o2"), cwd=tmp_path)
    assert r.returncode == 3

    r = run("evolve", "--frobnicate", cwd=tmp_path)
    assert r.returncode == 2
