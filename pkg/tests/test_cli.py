import io
import json
import sys

import pytest

from circleact.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_invariants_text_golden(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--weights", "1,2")
    assert code == 0
    assert out.splitlines() == [
        "|z1|^2",
        "|z2|^2",
        "Re(z1^2 zbar2)",
        "Im(z1^2 zbar2)",
    ]


def test_invariants_json_schema(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--weights", "1,2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data == [
        {"k": [1, 0], "kbar": [1, 0], "part": "abs2"},
        {"k": [0, 1], "kbar": [0, 1], "part": "abs2"},
        {"k": [2, 0], "kbar": [0, 1], "part": "re"},
        {"k": [2, 0], "kbar": [0, 1], "part": "im"},
    ]


def test_invariants_output_is_deterministic(capsys):
    _, first, _ = run_cli(capsys, "invariants", "--weights", "2,2,3,4,6")
    _, second, _ = run_cli(capsys, "invariants", "--weights", "2,2,3,4,6")
    assert first == second


def test_stratify_json_and_recover_roundtrip(capsys, tmp_path):
    code, out, _ = run_cli(
        capsys, "stratify", "--weights", "2,2,3,4,6", "--format", "json"
    )
    assert code == 0
    path = tmp_path / "diagram.json"
    path.write_text(out)

    code, out, _ = run_cli(capsys, "recover", "--diagram", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "weights": [2, 2, 3, 4, 6],
        "trivial_dim": 0,
        "m": 5,
        "n": 10,
    }


def test_recover_reads_stdin(capsys, monkeypatch):
    _, out, _ = run_cli(capsys, "stratify", "--weights", "1,2,3", "--format", "json")
    monkeypatch.setattr(sys, "stdin", io.StringIO(out))
    code, out, _ = run_cli(capsys, "recover", "--diagram", "-", "--format", "json")
    assert code == 0
    assert json.loads(out)["weights"] == [1, 2, 3]


def test_stratify_text_lists_faces_strata_edges(capsys):
    code, out, _ = run_cli(capsys, "stratify", "--weights", "1,2,3")
    assert code == 0
    assert "ambient dimension: 6" in out
    assert "S_123  order 1  codim 0" in out
    assert "order:2  order 2  dim 1" in out
    assert "distinguished  order inf  dim 0" in out
    assert "order:2 < order:1" in out


def test_stratify_writes_dot(capsys, tmp_path):
    dot_path = tmp_path / "diagram.dot"
    code, _, _ = run_cli(
        capsys, "stratify", "--weights", "1,2,3", "--dot", str(dot_path)
    )
    assert code == 0
    dot = dot_path.read_text()
    assert dot.startswith("digraph")
    assert '"order:3" -> "order:1";' in dot


def test_stratify_respects_trivial_dim(capsys):
    code, out, _ = run_cli(
        capsys, "stratify", "--weights", "1", "--trivial-dim", "2", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["ambient_dim"] == 4
    assert {s["id"]: s["dim"] for s in data["strata"]} == {
        "order:1": 3,
        "distinguished": 2,
    }


def test_roundtrip_single_spec(capsys):
    code, out, _ = run_cli(capsys, "roundtrip", "--weights", "1,2,3")
    assert code == 0
    assert "pass" in out


def test_roundtrip_campaign(capsys):
    code, out, _ = run_cli(
        capsys, "roundtrip", "--trials", "50", "--seed", "7", "--max-m", "4",
        "--max-weight", "12",
    )
    assert code == 0
    report = json.loads(out)
    assert report == {"check": "roundtrip", "seed": 7, "trials": 50, "failures": 0}


def test_verify_emits_json_lines(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--weights", "1,2", "--trials", "60", "--seed", "3"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "ok"
    reports = [json.loads(line) for line in lines[:-1]]
    assert [r["check"] for r in reports] == [
        "invariance",
        "homogeneity",
        "separation",
        "membership_m2",
    ]
    assert all(r["failures"] == 0 for r in reports)


def test_bad_weights_exit_code(capsys):
    code, _, err = run_cli(capsys, "invariants", "--weights", "2,4")
    assert code == 2
    assert "NotEffective" in err


def test_unparseable_weights_exit_code(capsys):
    code, _, err = run_cli(capsys, "invariants", "--weights", "1,banana")
    assert code == 2


def test_missing_diagram_file_exit_code(capsys):
    code, _, err = run_cli(capsys, "recover", "--diagram", "/nonexistent.json")
    assert code == 2
    assert "error:" in err


def test_malformed_diagram_json_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"ambient_dim": 2}')
    code, _, err = run_cli(capsys, "recover", "--diagram", str(path))
    assert code == 2


def test_usage_error_exit_code(capsys):
    assert run_cli(capsys)[0] == 2
    assert run_cli(capsys, "stratify")[0] == 2  # --weights is required
