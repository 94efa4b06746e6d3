"""Command-line surface: formats, exit codes, round-trips."""

import json
import subprocess
import sys

import pytest

from splinequad.cli import EXIT_INVALID, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED, main


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestGenKnots:
    def test_uniform_pretty(self, capsys):
        code, out, _ = run_cli(
            ["gen-knots", "--family", "uniform", "--n", "4",
             "--domain", "0", "1", "--format", "pretty"], capsys)
        assert code == EXIT_OK
        assert [float(v) for v in out.split()] == [0.0, 0.25, 0.5, 0.75, 1.0]

    def test_chebyshev_json(self, capsys):
        code, out, _ = run_cli(
            ["gen-knots", "--family", "chebyshev", "--N", "5",
             "--domain", "0", "1"], capsys)
        assert code == EXIT_OK
        obj = json.loads(out)
        assert len(obj["knots"]) == 7
        assert obj["knots"][1] == pytest.approx(0.0244717, abs=1e-6)

    def test_geometric_q2(self, capsys):
        code, out, _ = run_cli(
            ["gen-knots", "--family", "geometric", "--N", "5", "--q", "2",
             "--domain", "0", "1"], capsys)
        obj = json.loads(out)
        expect = [k / 14.0 for k in (0, 1, 3, 7, 11, 13, 14)]
        assert obj["knots"] == pytest.approx(expect)

    def test_missing_parameter_is_usage_error(self, capsys):
        code, _, err = run_cli(
            ["gen-knots", "--family", "geometric", "--N", "5"], capsys)
        assert code == EXIT_USAGE
        assert "q" in err

    def test_invalid_knot_file(self, tmp_path, capsys):
        path = tmp_path / "knots.txt"
        path.write_text("0.0 0.4 0.5 0.6 1.0\n")
        code, _, err = run_cli(
            ["gen-knots", "--family", "file", "--knots-file", str(path)], capsys)
        assert code == EXIT_INVALID


class TestRule:
    def test_pretty_matches_reference_row(self, capsys):
        code, out, _ = run_cli(
            ["rule", "--family", "legendre", "--N", "9",
             "--domain", "0", "1", "--format", "pretty"], capsys)
        assert code == EXIT_OK
        first = out.strip().splitlines()[1].split()
        assert first[1] == "0.003980"
        assert first[2] == "0.009434"

    def test_csv_output(self, capsys):
        code, out, _ = run_cli(
            ["rule", "--family", "uniform", "--n", "4",
             "--domain", "0", "1", "--format", "csv"], capsys)
        lines = out.strip().splitlines()
        assert lines[0] == "i,tau,omega"
        assert len(lines) == 6

    def test_two_point_fallback(self, capsys):
        code, out, _ = run_cli(
            ["rule", "--family", "uniform", "--n", "1",
             "--domain", "0", "1"], capsys)
        obj = json.loads(out)
        off = 1.0 / (2.0 * 3.0 ** 0.5)
        assert obj["nodes"] == pytest.approx([0.5 - off, 0.5 + off])

    def test_knot_file_round_trip(self, tmp_path, capsys):
        code, out, _ = run_cli(
            ["gen-knots", "--family", "chebyshev", "--N", "6",
             "--domain", "0", "1"], capsys)
        path = tmp_path / "knots.json"
        path.write_text(out)
        code, from_file, _ = run_cli(
            ["rule", "--family", "file", "--knots-file", str(path)], capsys)
        code, direct, _ = run_cli(
            ["rule", "--family", "chebyshev", "--N", "6",
             "--domain", "0", "1"], capsys)
        assert from_file == direct


class TestVerify:
    def test_chebyshev_passes(self, capsys):
        code, out, _ = run_cli(
            ["verify", "--family", "chebyshev", "--N", "5",
             "--domain", "0", "1", "--trials", "50"], capsys)
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["passed"]
        assert report["checks"]["exactness"]
        assert report["details"]["exactness_worst_residual"] < 1e-12

    def test_perturbed_weight_fails(self, capsys):
        code, out, _ = run_cli(
            ["verify", "--family", "chebyshev", "--N", "5",
             "--domain", "0", "1", "--trials", "20",
             "--perturb", "1e-6"], capsys)
        assert code == EXIT_VERIFY_FAILED
        report = json.loads(out)
        assert "exactness" in report["failures"]

    def test_seed_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("SPLINE_GAUSS_SEED", "777")
        code, out, _ = run_cli(
            ["verify", "--family", "uniform", "--n", "4",
             "--domain", "0", "1", "--trials", "10"], capsys)
        assert code == EXIT_OK


class TestKernel:
    def test_csv_shape(self, capsys):
        code, out, _ = run_cli(
            ["kernel", "--family", "legendre", "--N", "5",
             "--domain", "0", "1", "--grid", "100"], capsys)
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0].startswith("# constant_numeric")
        assert len(lines) == 2 + 101
        # every sampled value respects the sign bound
        vals = [float(line.split(",")[1]) for line in lines[2:]]
        assert min(vals) >= -1e-13

    def test_bad_grid_is_usage_error(self, capsys):
        code, _, _ = run_cli(
            ["kernel", "--family", "uniform", "--n", "4",
             "--domain", "0", "1", "--grid", "1"], capsys)
        assert code == EXIT_USAGE

    def test_q_sweep_writes_files(self, tmp_path, capsys):
        code, out, _ = run_cli(
            ["kernel", "--family", "geometric", "--N", "5",
             "--domain", "0", "1", "--grid", "50",
             "--q-sweep", "1:2:0.5", "--output", str(tmp_path)], capsys)
        assert code == EXIT_OK
        assert (tmp_path / "kernel_q1.csv").exists()
        assert (tmp_path / "kernel_q1.5.csv").exists()
        assert (tmp_path / "kernel_q2.csv").exists()
        summary = out.strip().splitlines()
        assert summary[0] == "q,constant_numeric"
        assert len(summary) == 4


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "splinequad.cli", "gen-knots",
             "--family", "uniform", "--n", "2", "--domain", "0", "1"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["knots"] == [0.0, 0.5, 1.0]
