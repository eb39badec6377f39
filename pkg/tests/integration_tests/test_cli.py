"""End-to-end tests of the command-line front end."""

import json

import pytest

from src.hexiso import cli
from src.hexiso.cli import run


def _run_json(capsys, argv):
    status = run(argv)
    return status, json.loads(capsys.readouterr().out)


class TestGrid:
    def test_radius_three(self, capsys):
        """G_3 → 54 vertices, 18 neighbours, 18 edges"""
        status, data = _run_json(capsys, ["grid", "--radius", "3"])
        assert status == 0
        assert (data["v"], data["n"], data["e"]) == (54, 18, 18)

    def test_radius_zero(self, capsys):
        assert run(["grid", "--radius", "0"]) == 2
        assert "error" in capsys.readouterr().err


class TestMeasureAndNormalize:
    def test_measure(self, capsys, vertex_file):
        path = vertex_file({"vertices": [[0, 0], [1, 0]]})
        status, data = _run_json(capsys, ["measure", "--input", path])
        assert status == 0
        assert data["reports"][0]["e"] == 4

    def test_measure_finite_region(self, capsys, vertex_file):
        path = vertex_file({"vertices": [[0, 0]]})
        _, data = _run_json(capsys, ["measure", "--input", path, "--region", "finite:1"])
        assert data["reports"][0]["n"] == 2
        assert data["reports"][0]["n_out"] == 1

    def test_duplicate_vertices(self, capsys, vertex_file):
        path = vertex_file({"vertices": [[0, 0], [0, 0]]})
        assert run(["measure", "--input", path]) == 2

    def test_normalize_with_trace(self, capsys, vertex_file):
        path = vertex_file({"sets": [{"vertices": [[0, 0], [0, 3]]}]})
        status, data = _run_json(capsys, ["normalize", "--input", path, "--trace"])
        assert status == 0
        result = data["results"][0]
        assert result["size"] == 2
        assert result["n_after"] <= result["n_before"] == 6
        assert result["trace"]["potential_history"] == [8, 8]
        assert set(result["parallelogram"]) == {"d1_range", "d2_range", "d3_range", "vertex_count"}


class TestChecks:
    def test_finite_grid_text(self, capsys):
        status = run(
            ["--threads", "1", "check", "--family", "finite-grid", "--radius", "1", "--max-size", "3"]
        )
        out = capsys.readouterr().out
        assert status == 0
        assert "violations: 0" in out
        assert "checked: 41" in out

    def test_connected_json(self, capsys):
        status, data = _run_json(
            capsys,
            ["--threads", "1", "check", "--family", "connected", "--max-size", "6", "--format", "json"],
        )
        assert status == 0
        assert data["total_violations"] == 0

    def test_connected_guard(self, capsys):
        assert run(["--threads", "1", "check", "--family", "connected", "--max-size", "15"]) == 3

    def test_conjecture_radius_guard(self, capsys):
        assert run(["--threads", "1", "conjecture", "--radius", "3"]) == 3

    def test_conjecture_radius_one(self, capsys):
        status, data = _run_json(capsys, ["--threads", "1", "conjecture", "--radius", "1"])
        assert status == 0
        assert data["N"]["min_ratio_sq"] == data["E"]["min_ratio_sq"] == "4/3"

    def test_conjecture_scans_region_once(self, capsys, monkeypatch):
        calls = []
        original = cli.scan_region

        def counting_scan(*args, **kwargs):
            calls.append(args)
            return original(*args, **kwargs)

        monkeypatch.setattr(cli, "scan_region", counting_scan)
        assert run(["--threads", "1", "conjecture", "--radius", "1"]) == 0
        assert len(calls) == 1

    @pytest.mark.parametrize("samples", ["0", "-5"])
    def test_non_positive_samples(self, capsys, samples):
        argv = ["--threads", "1", "check", "--family", "random", "--max-size", "10"]
        assert run(argv + ["--samples", samples]) == 2


class TestProfileAndBounds:
    def test_profile_csv(self, capsys):
        assert run(["profile", "--max-size", "3", "--measure", "E"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "n,measure,min,witness"
        assert len(lines) == 4

    def test_g_at_edge_constant(self, capsys):
        status, data = _run_json(capsys, ["bounds", "--eval", "g", "--c", "0.71743"])
        assert status == 0
        assert data["value"] == pytest.approx(1.0, abs=1e-4)

    def test_f_outside_domain(self, capsys):
        assert run(["bounds", "--eval", "f", "--c", "1"]) == 2

    @pytest.mark.parametrize("value", ["nan", "inf"])
    def test_non_finite_constant(self, capsys, value):
        assert run(["bounds", "--eval", "g", "--c", value]) == 2

    def test_constants_table_included(self, capsys):
        _, data = _run_json(capsys, ["bounds", "--eval", "g", "--c", "0.5"])
        assert set(data["constants"]) == {"infinite", "finite_N", "finite_E", "conjecture"}
        assert data["constants"]["conjecture"]["square"] == "4/3"

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "rc.json"
        assert run(["--output", str(target), "bounds", "--eval", "rc", "--c", "0.6053"]) == 0
        assert capsys.readouterr().out == ""
        assert json.loads(target.read_text(encoding="utf-8"))["value"] == 2


class TestUsage:
    def test_unknown_flag(self, capsys):
        assert run(["grid", "--radius", "1", "--bogus"]) == 2

    def test_missing_subcommand(self, capsys):
        assert run([]) == 2

    def test_help_exits_cleanly(self, capsys):
        assert run(["--help"]) == 0
        assert "hexiso" in capsys.readouterr().out
