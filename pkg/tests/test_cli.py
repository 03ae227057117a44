"""
End-to-end tests for main.py (argument handling, exit codes, reproducible output)
"""

import json

import pytest

import main


# ── Helpers ────────────────────────────────────────────────────────────────

ENV_KEYS = ["SEED", "PROBES", "OUTPUT", "LOG_LEVEL", "WORKERS"]


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    monkeypatch.setattr(main, "load_dotenv", lambda: None)
    for key in ENV_KEYS:
        monkeypatch.delenv(f"LAZARD_CAD_{key}", raising=False)


def write(tmp_path, name: str, text: str) -> str:
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def run(argv, capsys):
    code = main.main(argv)
    return code, capsys.readouterr().out


# ── Tests ─────────────────────────────────────────────────────────────────

class TestCommands:
    def test_cad_json(self, tmp_path, capsys):
        path = write(tmp_path, "circle.txt", "vars: x, y\nx^2 + y^2 - 1\n")
        code, out = run([path, "cad", "--output", "json"], capsys)
        data = json.loads(out)
        assert code == 0
        assert data["format"] == 1
        assert data["counts"]["cells"] == 13
        assert data["payload"]["delineability"]["checks"][0]["failures"] == []

    def test_cad_output_is_byte_identical(self, tmp_path, capsys):
        path = write(tmp_path, "sphere.txt", "vars: x, y, z\nx^2 + y^2 + z^2 - 1\n")
        argv = [path, "cad", "--output", "json", "--seed", "3", "--probes", "2"]
        _, first = run(argv, capsys)
        _, second = run(argv, capsys)
        assert first == second
        assert "timing" not in json.loads(first)

    def test_timing_flag(self, tmp_path, capsys):
        path = write(tmp_path, "line.txt", "vars: x\nx^2 - 1\n")
        _, out = run([path, "cad", "--output", "json", "--timing"], capsys)
        assert json.loads(out)["timing"] >= 0

    def test_valuation_with_point_flag(self, tmp_path, capsys):
        path = write(tmp_path, "product.txt", "vars: x1, x2\nx1*x2^2 + x1^2*x2\n")
        code, out = run([path, "valuation", "--point", "0,0", "--output", "json"], capsys)
        assert code == 0
        assert json.loads(out)["payload"]["results"][0]["valuation"] == [1, 2]

    def test_compare_text(self, tmp_path, capsys):
        path = write(tmp_path, "quadratic.txt", "vars: x, y, z, w\ny*w^2 + x*w - y*z^2\n")
        code, out = run([path, "compare-projections"], capsys)
        assert code == 0
        assert "brown_mccallum subset of lazard: True" in out

    def test_max_level(self, tmp_path, capsys):
        path = write(tmp_path, "sphere.txt", "vars: x, y, z\nx^2 + y^2 + z^2 - 1\n")
        _, out = run([path, "cad", "--output", "json", "--max-level", "1", "--probes", "0"], capsys)
        data = json.loads(out)
        assert data["counts"] == {"cells": 0, "projection_level_1": 1, "projection_level_2": 1}
        assert [level["level"] for level in data["payload"]["projections"]] == [1, 2]

    def test_environment_default_output(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("LAZARD_CAD_OUTPUT", "json")
        path = write(tmp_path, "line.txt", "vars: x\nx - 1\n")
        _, out = run([path, "project"], capsys)
        assert json.loads(out)["exit_code"] == 1


class TestFailures:
    def test_missing_file(self, tmp_path, capsys):
        code, out = run([str(tmp_path / "absent.txt"), "cad"], capsys)
        assert code == 1
        assert out.startswith("command: cad\nerror (exit 1):")

    def test_syntax_error_reports_line(self, tmp_path, capsys):
        path = write(tmp_path, "bad.txt", "vars: x\nx + )\n")
        code, out = run([path, "cad", "--output", "json"], capsys)
        data = json.loads(out)
        assert code == 1
        assert data["error"].startswith("line 2, column")

    def test_bad_point(self, tmp_path, capsys):
        path = write(tmp_path, "line.txt", "vars: x\nx\n")
        code, _ = run([path, "valuation", "--point", "zero"], capsys)
        assert code == 1

    def test_bad_environment(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("LAZARD_CAD_WORKERS", "0")
        path = write(tmp_path, "line.txt", "vars: x\nx\n")
        code, out = run([path, "cad"], capsys)
        assert code == 1
        assert out == ""

    def test_unknown_command_is_rejected_by_argparse(self, tmp_path):
        path = write(tmp_path, "line.txt", "vars: x\nx\n")
        with pytest.raises(SystemExit) as info:
            main.main([path, "triangulate"])
        assert info.value.code == 2
