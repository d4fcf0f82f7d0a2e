import json
import os
import subprocess

import pytest

CLI = os.environ.get("BQSIM_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="BQSIM_CLI not set")

DIMA1 = "0 1 0^2 1 0^4 1 0^8 1 0^16 11 0^32 11 0^64"


def cli(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def write_config(tmp_path, **cfg):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(cfg))
    return str(path)


def test_oracle_subcommand():
    r = cli("oracle", "--language", "DIMA", "--input", DIMA1)
    assert r.returncode == 0
    assert "true" in r.stdout


def test_run_ok_and_report_roundtrip(tmp_path):
    cfg = write_config(tmp_path, language="DIMA", recognizer="dca2_dima", inputs=[DIMA1, "0 1 0"])
    out = tmp_path / "rep.json"
    r = cli("run", "--config", cfg, "--trials", "1", "--seed", "5", "--out", str(out))
    assert r.returncode == 0, r.stderr
    rep = json.loads(out.read_text())
    assert rep["summary"]["disagreements"] == 0
    r = cli("report", "--in", str(out), "--format", "csv")
    assert r.returncode == 0
    assert len(r.stdout.strip().splitlines()) == 3


def test_config_error_exit_code(tmp_path):
    cfg = write_config(tmp_path, language="DIMA", recognizer="dca2_dima", inputs=["0"], trials=0)
    assert cli("run", "--config", cfg).returncode == 2
    assert cli("run", "--config", str(tmp_path / "missing.json")).returncode == 2


def test_budget_exit_code(tmp_path):
    cfg = write_config(tmp_path, language="DIMA_I", recognizer="pca2_dima_I", prefix="1", inputs=[DIMA1])
    r = cli("run", "--config", cfg, "--trials", "5", "--max-steps", "20")
    assert r.returncode == 3


def test_exact_and_enumerate():
    r = cli("exact", "--kind", "coin", "--k", "1", "--prefix", "1")
    assert r.returncode == 0
    r = cli("enumerate", "--language", "UPOWER64", "--bound", "5000", "--format", "csv")
    assert r.returncode == 0
    assert "0^4096" in r.stdout


def test_mutate():
    r = cli("mutate", "--language", "UPOWER64", "--input", "0^64")
    assert r.returncode == 0
    assert "0^65" in r.stdout
