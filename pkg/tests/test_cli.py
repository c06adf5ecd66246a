"""Command-line surface: output schemas and exit codes."""

import json

import pytest

from lattice_harmonics.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_dim_simple(capsys):
    code, out = run_cli(capsys, "dim", "--mu", "3")
    assert code == 0
    assert "formula: 1" in out


def test_dim_with_hole_json(capsys):
    code, out = run_cli(
        capsys, "dim", "--mu", "2,1", "--hole", "0,0", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["formula"] == data["cardinality"] == data["rank"] == 3
    assert data["oracle_dim"] == 3
    assert data["by_degree"] == [1, 2]
    assert data["ok"] is True


def test_dim_oracle_skipped_above_budget(capsys):
    code, out = run_cli(
        capsys, "dim", "--mu", "4,2,1", "--hole", "0,1",
        "--format", "json", "--oracle-budget", "4",
    )
    assert code == 0
    data = json.loads(out)
    assert data["formula"] == data["cardinality"] == 90
    assert "skipped" in data["oracle_dim"]


def test_hilbert(capsys):
    code, out = run_cli(capsys, "hilbert", "--mu", "1,1,1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["hilbert"] == [1, 2, 2, 1] and data["dim"] == 6


def test_frobenius_json(capsys):
    code, out = run_cli(capsys, "frobenius", "--mu", "1,1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["basis"] == "schur"
    terms = {tuple(t["lambda"]): t["t_coeffs"] for t in data["terms"]}
    assert terms == {(2,): [1], (1, 1): [0, 1]}


def test_verify_suite_passes(capsys):
    code, out = run_cli(capsys, "verify", "recurrence", "--max-n", "3")
    assert code == 0
    assert "FAIL" not in out


def test_verify_json_shape(capsys):
    code, out = run_cli(
        capsys, "verify", "lemmas", "--max-n", "2", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["failures"] == 0
    assert data["cases"] == len(data["reports"]) > 0


def test_usage_error_exit_code_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["dim", "--mu", "2,1", "--hole", "5,5"])
    assert exc.value.code == 2


def test_bad_partition_exit_code_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["dim", "--mu", "1,2"])
    assert exc.value.code == 2


def test_cache_file_written(tmp_path, capsys):
    path = tmp_path / "cache.jsonl"
    code, _out = run_cli(
        capsys, "hilbert", "--mu", "2,1", "--cache", str(path)
    )
    assert code == 0
    records = [json.loads(line) for line in path.read_text().splitlines()]
    assert records == [{"diagram": "0,0;0,1;1,0", "hilbert": [1, 2], "dim": 3}]
