"""End-to-end CLI behavior: exit codes, cache format, determinism, CSV shape."""

import json
import subprocess
import sys

import pytest

from opcert.cli import main


def run_cli(args, env_dir=None, monkeypatch=None):
    if monkeypatch is not None:
        if env_dir is not None:
            monkeypatch.setenv("OPART_CACHE_DIR", str(env_dir))
        else:
            monkeypatch.delenv("OPART_CACHE_DIR", raising=False)
    return main(args)


def test_table_writes_cache(tmp_path, capsys):
    cache = tmp_path / "pbar.tsv"
    assert main(["table", "--max", "50", "--cache", str(cache)]) == 0
    lines = cache.read_text().splitlines()
    assert lines[3] == "3\t8"
    assert len(lines) == 51


def test_table_without_cache_is_usage_error(monkeypatch):
    monkeypatch.delenv("OPART_CACHE_DIR", raising=False)
    assert main(["table", "--max", "10"]) == 2


def test_env_var_cache_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("OPART_CACHE_DIR", str(tmp_path))
    assert main(["enclose", "--n", "40", "--N", "3"]) == 0
    assert (tmp_path / "pbar.tsv").exists()
    doc = json.loads(capsys.readouterr().out)
    assert doc["summary"]["fails"] == 0


def test_flag_wins_over_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("OPART_CACHE_DIR", str(tmp_path / "ignored"))
    cache = tmp_path / "chosen.tsv"
    assert main(["enclose", "--n", "10", "--N", "3", "--cache", str(cache)]) == 0
    assert cache.exists()
    assert not (tmp_path / "ignored").exists()


def test_usage_error_exit_code():
    assert main(["bogus-subcommand"]) == 2
    assert main(["verify", "lemma21", "--from", "1", "--to", "2"]) == 2


def test_verify_holds_exit_zero(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("OPART_CACHE_DIR", str(tmp_path))
    code = main(["verify", "lemma31", "--from", "1", "--to", "20"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["summary"] == {"holds": 20, "fails": 0, "undetermined": 0}


def test_scan_turan_first_holds_at_four(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("OPART_CACHE_DIR", str(tmp_path))
    code = main(["scan", "turan", "--from", "2", "--to", "8",
                 "--csv", str(tmp_path / "t.csv")])
    doc = json.loads(capsys.readouterr().out)
    assert code == 1  # the hypothesis fails at n = 2, 3
    first_holds = next(r["n"] for r in doc["rows"] if r["verdict"] == "Holds")
    assert first_holds == 4
    header = (tmp_path / "t.csv").read_text().splitlines()[0]
    assert header == "n,value_lo,value_hi,bound_lo,bound_hi"


def test_json_determinism(tmp_path, monkeypatch):
    monkeypatch.setenv("OPART_CACHE_DIR", str(tmp_path))
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for out in (a, b):
        assert main(["verify", "turan", "--from", "4", "--to", "6",
                     "--out", str(out)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_diff_reports_interval(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("OPART_CACHE_DIR", str(tmp_path))
    assert main(["diff", "--n", "50", "--r", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    iv = doc["value"]
    assert set(iv) == {"lo", "hi", "bits"}
    assert float(iv["lo"]) <= float(iv["hi"])


def test_constants_subcommand(capsys):
    assert main(["constants", "--r", "2", "--alpha", "0"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["r"] == 2


def test_entry_point_installed():
    proc = subprocess.run([sys.executable, "-m", "opcert.cli", "--help"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "verify" in proc.stdout
