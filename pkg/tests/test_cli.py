"""Command-line surface: exit codes, JSON stream, determinism."""

from __future__ import annotations

import io
import json

import pytest

from immergraph.cli import main
from immergraph.immersion import doubled_cycle, wheel4
from immergraph.multigraph import Multigraph


def run_cli(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def wheel_file(tmp_path):
    path = tmp_path / "wheel.txt"
    path.write_text(wheel4().to_text())
    return str(path)


@pytest.fixture()
def doubled_cycle_file(tmp_path):
    path = tmp_path / "dc.txt"
    path.write_text(doubled_cycle(4, roots=(0,)).to_text())
    return str(path)


def test_immerse_positive(capsys, wheel_file):
    code, out, _ = run_cli(capsys, "immerse", "--pattern", "w4", wheel_file)
    assert code == 0
    payload = json.loads(out)
    assert payload["immerses"] is True
    assert payload["witness"]["tag"] == "Witness"
    assert len(payload["witness"]["routes"]) == 8


def test_immerse_negative_is_exit_zero(capsys, doubled_cycle_file):
    code, out, _ = run_cli(capsys, "immerse", "--pattern", "w4", doubled_cycle_file, "--roots", "")
    assert code == 0
    payload = json.loads(out)
    assert payload["immerses"] is False
    assert payload["witness"] is None


def test_classify_k4_immerses(capsys, wheel_file):
    code, out, _ = run_cli(capsys, "classify", "k4", wheel_file)
    assert code == 0
    assert json.loads(out)["result"]["tag"] == "Immerses"


def test_classify_k4_doubled_cycle(capsys, tmp_path):
    path = tmp_path / "dc.txt"
    path.write_text(doubled_cycle(5).to_text())
    code, out, _ = run_cli(capsys, "classify", "k4", str(path))
    assert code == 0
    assert json.loads(out)["result"]["tag"] == "DoubledCycle"


def test_classify_hypothesis_violation_exit_one(capsys, tmp_path):
    path = tmp_path / "k2.txt"
    path.write_text(Multigraph.from_edges(2, [(0, 1, 1)]).to_text())
    code, out, _ = run_cli(capsys, "classify", "k4", str(path))
    assert code == 1
    payload = json.loads(out)
    assert payload["error"] == "hypothesis-violation"
    assert "certificate" in payload


def test_classify_wrong_roots_is_usage_error(capsys, wheel_file):
    code, out, err = run_cli(capsys, "classify", "dm:2", wheel_file)
    assert code == 2
    assert out == ""
    assert "error" in err


def test_missing_file_is_usage_error(capsys):
    code, out, _ = run_cli(capsys, "immerse", "--pattern", "k4", "/nonexistent/graph.txt")
    assert code == 2
    assert out == ""


def test_unknown_subcommand_is_usage_error(capsys):
    assert run_cli(capsys, "frobnicate")[0] == 2


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(wheel4().to_text()))
    code, out, _ = run_cli(capsys, "immerse", "--pattern", "k4", "-")
    assert code == 0
    assert json.loads(out)["immerses"] is True


def test_roots_flag_overrides(capsys, tmp_path):
    path = tmp_path / "c4.txt"
    path.write_text(doubled_cycle(4).to_text())
    code, out, _ = run_cli(capsys, "classify", "dm:2", str(path), "--roots", "0,1")
    assert code == 0
    assert json.loads(out)["result"]["tag"] in ("Immerses", "TypeA", "TypeB")


def test_treewidth_payload(capsys, wheel_file):
    code, out, _ = run_cli(capsys, "treewidth", wheel_file)
    assert code == 0
    payload = json.loads(out)
    assert payload["treewidth"] == 3
    assert all(isinstance(bag, list) for bag in payload["bags"])


def test_sausage_reduce_roundtrip(capsys, tmp_path):
    long_chain = doubled_cycle(6)
    path = tmp_path / "c6.txt"
    path.write_text(long_chain.to_text())
    code, out, _ = run_cli(capsys, "sausage-reduce", str(path))
    assert code == 0
    reduced = Multigraph.from_text(json.loads(out)["graph"])
    assert reduced.n <= long_chain.n


def test_reduce_payload(capsys, wheel_file):
    code, out, _ = run_cli(capsys, "reduce", wheel_file)
    assert code == 0
    payload = json.loads(out)
    assert payload["steps"] == []
    assert len(payload["components"]) == 1


def test_verify_deterministic_and_zeroed_timing(capsys):
    code, first, err = run_cli(capsys, "verify", "--theorem", "dm:2", "--n", "4")
    assert code == 0
    assert "dm:2" in err
    payload = json.loads(first)
    assert payload["elapsed_ms"] == 0
    assert payload["counterexamples"] == []
    code, second, _ = run_cli(capsys, "verify", "--theorem", "dm:2", "--n", "4")
    assert code == 0
    assert second == first


def test_verify_output_file(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "--output", str(out_path), "verify", "--theorem", "k4-two-root", "--n", "4"
    )
    assert code == 0
    assert out == ""
    payload = json.loads(out_path.read_text())
    assert payload["theorem"] == "k4-two-root"
    assert payload["counterexamples"] == []


def test_verify_rejects_unknown_theorem(capsys):
    code, out, _ = run_cli(capsys, "verify", "--theorem", "k9")
    assert code == 2
    assert out == ""


def test_catalog_subcommand_small(capsys):
    code, out, err = run_cli(capsys, "catalog", "--n", "5", "--cap", "6")
    assert code == 0
    records = json.loads(out)
    assert isinstance(records, list)
    assert all({"canonical", "tag", "degrees", "n"} <= set(r) for r in records)
    assert "catalog:" in err
