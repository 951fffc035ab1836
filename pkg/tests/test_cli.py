"""End-to-end checks of the curvop command line (subprocess level)."""

import json
import os
import subprocess
import sys

import numpy as np
import pytest

import curvop

CLI = [sys.executable, "-c", "import curvop.cli, sys; sys.exit(curvop.cli.main())"]


def run_cli(*args, env_extra=None, expect=0):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run(
        CLI + list(args), capture_output=True, text=True, env=env, timeout=300
    )
    assert proc.returncode == expect, (
        f"exit {proc.returncode} != {expect}\nstdout: {proc.stdout}\nstderr: {proc.stderr}"
    )
    return proc


def check_envelope(path):
    """Output files carry the full envelope; stdout carries bare results."""
    env = json.loads(path.read_text())
    assert set(env) == {"tool", "version", "seed", "config", "results"}
    assert env["tool"] == "curvop"
    assert env["version"] == curvop.__version__
    return env


def test_version_flag():
    proc = run_cli("--version")
    assert curvop.__version__ in proc.stdout


def test_model_writes_loadable_tensor_file(tmp_path):
    out = tmp_path / "cp2.json"
    proc = run_cli("model", "--model", "cp2", "--output", str(out), "--format", "json")
    doc = json.loads(proc.stdout)
    assert doc["dim"] == 4
    assert doc["convention"] == "R1212-positive-sphere"
    t = curvop.load_tensor(str(out))
    assert np.array_equal(t.array, curvop.cp2_explicit().array)


def test_model_then_analyze_pipeline(tmp_path):
    tensor_file = tmp_path / "sphere.json"
    report_file = tmp_path / "analysis.json"
    run_cli("model", "--model", "sphere:n=4,k=1", "--output", str(tensor_file))
    proc = run_cli(
        "analyze", str(tensor_file), "--trials", "5", "--seed", "4",
        "--output", str(report_file), "--format", "json",
    )
    results = json.loads(proc.stdout)
    assert results["dim"] == 4
    eigs = np.array(results["eigenvalues"])
    assert np.abs(eigs - 1.0).max() < 1e-12
    assert results["isotropicMin"] == pytest.approx(4.0, abs=1e-9)
    envelope = check_envelope(report_file)
    assert envelope["seed"] == 4
    assert envelope["results"] == results


def test_analyze_model_spec_text_output():
    proc = run_cli("analyze", "--model", "cp2", "--trials", "5")
    assert "alphaStar" in proc.stdout
    assert "ricci min" in proc.stdout
    # text mode is not JSON
    with pytest.raises(json.JSONDecodeError):
        json.loads(proc.stdout)


def test_analyze_seed_flag_and_env_agree():
    a = run_cli("analyze", "--model", "random:n=5,seed=2", "--trials", "4",
                "--seed", "9", "--format", "json")
    b = run_cli("analyze", "--model", "random:n=5,seed=2", "--trials", "4",
                "--format", "json", env_extra={"CURV_SEED": "9"})
    assert json.loads(a.stdout) == json.loads(b.stdout)
    # the explicit flag wins over the environment
    c = run_cli("analyze", "--model", "random:n=5,seed=2", "--trials", "4",
                "--seed", "9", "--format", "json", env_extra={"CURV_SEED": "3"})
    assert json.loads(c.stdout) == json.loads(a.stdout)


def test_verify_reports_residuals():
    proc = run_cli("verify", "--dim", "4", "--trials", "10", "--format", "json")
    results = json.loads(proc.stdout)
    assert results["pass"] is True
    assert results["casesChecked"] == 10
    assert results["suites"]["pic"] < 1e-10
    assert results["suites"]["ric"] < 1e-10
    assert results["maxResidual"] == max(results["suites"].values())


def test_verify_accepts_extra_model_case():
    proc = run_cli("verify", "--model", "cp2", "--dim", "4", "--trials", "3",
                   "--format", "json")
    results = json.loads(proc.stdout)
    assert results["casesChecked"] == 4  # the cp2 case plus three random ones
    assert results["pass"] is True


def test_search_consistent_exits_zero(tmp_path):
    out = tmp_path / "report.json"
    proc = run_cli(
        "search", "--dim", "4", "--hyp", "k4a0.5strict", "--concl", "ric",
        "--trials", "5", "--seed", "3", "--output", str(out), "--format", "json",
    )
    results = json.loads(proc.stdout)
    assert results["verdict"] == "consistent"
    assert results["trialsPassing"] == 5
    envelope = check_envelope(out)
    assert envelope["seed"] == 3
    assert envelope["results"]["verdict"] == "consistent"


def test_search_counterexample_exits_one(tmp_path):
    out = tmp_path / "report.json"
    proc = run_cli(
        "search", "--dim", "4", "--hyp", "k9a0strict", "--concl", "ric",
        "--trials", "3", "--seed", "123", "--output", str(out), "--format", "json",
        expect=1,
    )
    results = json.loads(proc.stdout)
    assert results["verdict"] == "counterexample"
    envelope = check_envelope(out)
    entry = envelope["results"]["counterexamples"][0]
    assert entry["tensorFile"] == "report.counterexample0.json"
    saved = curvop.load_tensor(str(tmp_path / entry["tensorFile"]))
    assert curvop.ricci_min(saved) == pytest.approx(entry["conclusionValue"], abs=1e-9)


def test_probe_boundary_ok_exit_zero(tmp_path):
    out = tmp_path / "probe.json"
    proc = run_cli(
        "probe", "--base", "cp2", "--direction", "flat:n=4",
        "--steps", "2", "--iso-trials", "4", "--output", str(out), "--format", "json",
    )
    results = json.loads(proc.stdout)
    assert results["boundaryOk"] is True
    assert len(results["rows"]) == 2
    envelope = check_envelope(out)
    assert envelope["results"] == results


def test_probe_text_renders_table():
    proc = run_cli("probe", "--base", "cp2", "--direction", "flat:n=4",
                   "--steps", "2", "--iso-trials", "4")
    assert "alphaStar" in proc.stdout
    assert "boundary" in proc.stdout
    assert "[ok]" in proc.stdout


@pytest.mark.parametrize(
    "args",
    [
        ("model", "--model", "torus:n=4"),
        ("model", "--model", "sphere:n=0"),
        ("analyze", "/nonexistent/tensor.json"),
        ("search", "--dim", "4", "--hyp", "nonsense", "--concl", "ric"),
        ("probe", "--base", "cp2", "--direction", "flat:n=5", "--steps", "2"),
    ],
)
def test_invalid_input_exits_two(args):
    proc = run_cli(*args, expect=2)
    assert proc.stderr.strip()  # a diagnostic goes to stderr


def test_analyze_rejects_malformed_tensor_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    run_cli("analyze", str(bad), expect=2)
    bad.write_text(json.dumps({"dim": 4}))
    run_cli("analyze", str(bad), expect=2)


def test_analyze_rejects_both_file_and_model(tmp_path):
    f = tmp_path / "t.json"
    run_cli("model", "--model", "flat:n=4", "--output", str(f))
    run_cli("analyze", str(f), "--model", "cp2", expect=2)
