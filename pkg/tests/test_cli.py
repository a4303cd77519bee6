import json

import pytest

from planewheel.cli import run


def test_generate_model(capsys):
    assert run(["generate", "--bw", "3", "3"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj == {"k": 3, "sizes": [3, 3, 3]}


def test_generate_coords(tmp_path):
    out = tmp_path / "coords.json"
    assert run(["generate", "--bw", "3", "3", "--coords", "-o", str(out)]) == 0
    obj = json.loads(out.read_text())
    assert len(obj["points"]) == 10
    assert obj["interior"] == 0


def test_generate_rejects_bad_model(capsys):
    assert run(["generate", "--gw", "1,1,2"]) == 2
    assert "invalid model" in capsys.readouterr().err


def test_solve_expected_sat(tmp_path):
    out = tmp_path / "result.json"
    code = run(["solve", "--bw", "3", "3", "--mode", "spanning-tree", "--expect", "sat", "-o", str(out)])
    assert code == 0
    assert json.loads(out.read_text())["status"] == "SAT"


def test_solve_expect_mismatch(tmp_path, capsys):
    out = tmp_path / "result.json"
    code = run(["solve", "--bw", "3", "3", "--mode", "spanning-tree", "--expect", "unsat", "-o", str(out)])
    assert code == 1


def test_solve_node_limit_exit_code(tmp_path):
    out = tmp_path / "result.json"
    code = run(["solve", "--bw", "3", "5", "--mode", "spanning-tree", "--node-limit", "5", "-o", str(out)])
    assert code == 3
    assert json.loads(out.read_text())["status"] == "LIMIT"


def test_node_limit_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv("PLANEWHEEL_NODE_LIMIT", "5")
    out = tmp_path / "result.json"
    code = run(["solve", "--bw", "3", "5", "--mode", "spanning-tree", "-o", str(out)])
    assert code == 3


def test_enumerate_count(capsys):
    assert run(["enumerate", "--k", "3", "--emit", "count"]) == 0
    assert capsys.readouterr().out.strip() == "20"


def test_enumerate_case_filter(capsys):
    assert run(["enumerate", "--k", "3", "--case", "1", "--emit", "count"]) == 0
    assert capsys.readouterr().out.strip() == "4"


def test_enumerate_json(tmp_path):
    out = tmp_path / "parts.json"
    assert run(["enumerate", "--k", "3", "--emit", "json", "-o", str(out)]) == 0
    parts = json.loads(out.read_text())
    assert len(parts) == 20


def test_enumerate_svg(tmp_path, capsys):
    assert run(["enumerate", "--k", "3", "--case", "1", "--emit", "svg", "-o", str(tmp_path)]) == 0
    assert len(list(tmp_path.glob("*.svg"))) == 4


def test_verify_roundtrip(tmp_path):
    parts = tmp_path / "parts.json"
    run(["enumerate", "--k", "3", "--emit", "json", "-o", str(parts)])
    one = tmp_path / "one.json"
    one.write_text(json.dumps(json.loads(parts.read_text())[0]))
    report = tmp_path / "report.json"
    assert run(["verify", str(one), "--mode", "spanning-tree", "-o", str(report)]) == 0
    obj = json.loads(report.read_text())
    assert obj["valid"] and not obj["violations"] and not obj["audit_violations"]


def test_verify_rejects_malformed_json(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["verify", str(bad)]) == 2
    assert "malformed JSON" in capsys.readouterr().err


def test_verify_missing_file(capsys):
    assert run(["verify", "/nonexistent/partition.json"]) == 2


def test_verify_invalid_partition_fails(tmp_path):
    parts = tmp_path / "parts.json"
    run(["enumerate", "--k", "3", "--emit", "json", "-o", str(parts)])
    obj = json.loads(parts.read_text())[0]
    obj["colors"][0], obj["colors"][-1] = obj["colors"][-1], obj["colors"][0]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(obj))
    assert run(["verify", str(bad), "--mode", "spanning-tree"]) == 1


def test_criteria_report(tmp_path):
    out = tmp_path / "criteria.json"
    assert run(["criteria", "--bw", "3", "3", "-o", str(out)]) == 0
    obj = json.loads(out.read_text())
    assert obj["verdicts"]["tree"] == "yes"
    assert obj["criterion_small_families"] is True
    assert obj["empty_triple"] is not None


def test_export_lp(tmp_path):
    out = tmp_path / "model.lp"
    assert run(["export-lp", "--bw", "3", "5", "--m", "8", "--enforce-class-size", "-o", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("Minimize")
    assert text.rstrip().endswith("End")


def test_render(tmp_path, capsys):
    parts = tmp_path / "parts.json"
    run(["enumerate", "--k", "3", "--emit", "json", "-o", str(parts)])
    one = tmp_path / "one.json"
    one.write_text(json.dumps(json.loads(parts.read_text())[0]))
    svg = tmp_path / "picture.svg"
    assert run(["render", str(one), "-o", str(svg)]) == 0
    assert svg.exists()
    assert len(list(tmp_path.glob("picture_class*.svg"))) == 5
    assert "<svg" in svg.read_text()
