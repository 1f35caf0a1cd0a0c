"""CLI surface: subcommands, exit codes, determinism."""

import xml.etree.ElementTree as ET

import pytest

from barypoly.cli import cli_dispatch
from barypoly.derived import solve_alpha
from barypoly.traceio import read_trace_csv, read_trace_json


def run(capsys, argv):
    code = cli_dispatch(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_alpha_p3(capsys):
    code, out, err = run(capsys, ["alpha", "--p", "3"])
    assert code == 0 and err == ""
    assert out.strip() == "0.6180339887498949"
    assert float(out) == pytest.approx(solve_alpha(3), abs=1e-12)


def test_alpha_p2(capsys):
    code, out, _ = run(capsys, ["alpha", "--p", "2"])
    assert code == 0
    assert float(out) == 0.5


def test_alpha_bad_p(capsys):
    code, _, err = run(capsys, ["alpha", "--p", "1"])
    assert code == 1
    assert "error" in err


def test_classify_stationary(capsys):
    code, out, _ = run(capsys, ["classify", "--t", "0.3,0.7"])
    assert code == 0
    assert out.splitlines()[0] == "Stationary"


def test_classify_periodic(capsys):
    code, out, _ = run(capsys, ["classify", "--t", "0.3,0.5"])
    assert code == 0
    assert out.splitlines()[0] == "Periodic2"


def test_classify_alternating_with_lockin(capsys):
    code, out, _ = run(capsys, ["classify", "--t", "0.2,0.3,0.4"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "AlternatingDivergent"
    assert "lockin_index=1" in lines
    assert "parity=odd" in lines


def test_classify_broadcast_t(capsys):
    code, out, _ = run(capsys, ["classify", "--t", "0.2", "--p", "4"])
    assert code == 0
    assert out.splitlines()[0] == "AlternatingDivergent"


def test_unknown_subcommand(capsys):
    code, _, err = run(capsys, ["frobnicate"])
    assert code == 2
    assert "usage error" in err


def test_missing_required_argument(capsys):
    code, _, _ = run(capsys, ["alpha"])
    assert code == 2


def test_no_subcommand(capsys):
    assert run(capsys, [])[0] == 2


def test_invalid_parameter_lists_failures(capsys):
    code, _, err = run(capsys, ["classify", "--t", "1.5,0.2,-3"])
    assert code == 1
    assert err.count("error:") == 2


def test_simulate_writes_csv(capsys, tmp_path):
    out_path = tmp_path / "trace.csv"
    code, out, _ = run(capsys, [
        "simulate", "--points", "0,0;1,0;0,1", "--t", "1/2,1/3,1/4",
        "--n", "5", "--out", str(out_path), "--format", "csv",
    ])
    assert code == 0
    header, rows = read_trace_csv(out_path.read_text())
    assert header[0] == "step"
    assert len(rows) == 6


def test_simulate_summary(capsys):
    code, out, _ = run(capsys, [
        "simulate", "--points", "0,0;1,0;0,1", "--t", "1/2,1/3,1/4", "--n", "5",
    ])
    assert code == 0
    assert "final_diameter=" in out
    limit_line = next(line for line in out.splitlines() if line.startswith("limit="))
    x, y = (float(v) for v in limit_line.split("=")[1].split(","))
    assert x == pytest.approx(9 / 29, abs=1e-12)
    assert y == pytest.approx(8 / 29, abs=1e-12)


def test_derive_stdout_csv(capsys):
    code, out, _ = run(capsys, ["derive", "--t", "0.2,0.3,0.4", "--n", "3"])
    assert code == 0
    header, rows = read_trace_csv(out)
    assert header == ["step", "t1", "t2", "t3"]
    assert rows[1][1:] == pytest.approx([0.42, 0.48, 0.56], abs=1e-15)


def test_derive_json_file(capsys, tmp_path):
    out_path = tmp_path / "trace.json"
    code, _, _ = run(capsys, [
        "derive", "--t", "0.2,0.3,0.4", "--n", "40",
        "--out", str(out_path), "--format", "json",
    ])
    assert code == 0
    doc = read_trace_json(out_path.read_text())
    assert doc["kind"] == "derived"
    assert doc["saturated_at"] is not None


def test_dual_report(capsys):
    code, out, _ = run(capsys, ["dual", "--ngon", "3", "--t", "0.2,0.3,0.4", "--n", "40"])
    assert code == 0
    assert "first_below=" in out
    assert "final_distance=" in out


def test_figure_single(capsys, tmp_path):
    out_path = tmp_path / "fig.svg"
    code, _, _ = run(capsys, [
        "figure", "--ngon", "5", "--t", "0.2", "--n", "10",
        "--orders", "0", "--out", str(out_path),
    ])
    assert code == 0
    root = ET.fromstring(out_path.read_text())
    assert root.get("version") == "1.1"


def test_figure_order_range(capsys, tmp_path):
    code, _, _ = run(capsys, [
        "figure", "--ngon", "4", "--t", "0.2", "--n", "12",
        "--orders", "0-5", "--out-dir", str(tmp_path),
    ])
    assert code == 0
    files = sorted(tmp_path.glob("derived_*.svg"))
    assert len(files) == 6


def test_figure_deterministic(capsys, tmp_path):
    argv = ["figure", "--ngon", "4", "--t", "0.2", "--n", "6", "--orders", "1"]
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert run(capsys, argv + ["--out", str(a)])[0] == 0
    assert run(capsys, argv + ["--out", str(b)])[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_figure_dual_path(capsys, tmp_path):
    out_path = tmp_path / "dual.svg"
    code, _, _ = run(capsys, [
        "figure", "--ngon", "3", "--t", "0.2,0.3,0.4", "--n", "30",
        "--dual", "--out", str(out_path),
    ])
    assert code == 0
    text = out_path.read_text()
    root = ET.fromstring(text)
    assert root.get("version") == "1.1"
    assert "<polyline" in text


def test_figure_unreachable_order(capsys):
    code, _, err = run(capsys, [
        "figure", "--ngon", "3", "--t", "0.2,0.3,0.4", "--orders", "0-50",
        "--out-dir", "/tmp/should-not-matter",
    ])
    assert code == 1
    assert "saturate" in err


def test_config_file_drives_simulate(capsys, tmp_path):
    config = tmp_path / "run.json"
    config.write_text(
        '{"family": {"kind": "regular", "p": 4}, "t": 0.2, "iterations": 3}'
    )
    code, out, _ = run(capsys, ["simulate", "--config", str(config)])
    assert code == 0
    assert "p=4" in out


def test_config_output_block_drives_destination(capsys, tmp_path):
    import json

    out_path = tmp_path / "from_config.json"
    config = tmp_path / "run.json"
    config.write_text(json.dumps({
        "points": [[0, 0], [1, 0], [0, 1]],
        "t": [0.2, 0.3, 0.4],
        "iterations": 4,
        "output": {"format": "json", "path": str(out_path)},
    }))
    code, _, _ = run(capsys, ["simulate", "--config", str(config)])
    assert code == 0
    doc = read_trace_json(out_path.read_text())
    assert doc["kind"] == "polygon"
    assert len(doc["steps"]) == 5


def test_config_file_errors_all_reported(capsys, tmp_path):
    config = tmp_path / "bad.json"
    config.write_text('{"points": [[0,0],[0,0]], "t": [1.5, 0.5], "iterations": -1}')
    code, _, err = run(capsys, ["simulate", "--config", str(config)])
    assert code == 1
    assert err.count("error:") >= 3


def test_random_family_env_seed(capsys, monkeypatch):
    monkeypatch.setenv("BARYPOLY_SEED", "99")
    code, out_a, _ = run(capsys, ["simulate", "--random", "4", "2", "--t", "0.5", "--n", "0"])
    assert code == 0
    code, out_b, _ = run(capsys, ["simulate", "--random", "4", "2", "--t", "0.5", "--n", "0"])
    assert out_a == out_b
    monkeypatch.setenv("BARYPOLY_SEED", "100")
    code, out_c, _ = run(capsys, ["simulate", "--random", "4", "2", "--t", "0.5", "--n", "0"])
    assert out_a != out_c
