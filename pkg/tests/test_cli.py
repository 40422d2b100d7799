"""End-to-end CLI behavior, including exit codes and file outputs."""

import subprocess
import sys

import numpy as np
import pytest

from minkrev.cli import main
from minkrev.pipeline import read_curve_csv


def run_cli(*argv):
    return main(list(argv))


class TestSolveAndVerify:
    def test_mean_solve_then_verify_passes(self, tmp_path, capsys):
        out = tmp_path / "c.csv"
        code = run_cli(
            "solve-mean", "--axis", "timelike", "--h-expr", "0", "--eta", "+1",
            "--consts", "2,1,0", "--range", "0:1", "--nodes", "2001",
            "--out", str(out),
        )
        assert code == 0
        assert out.exists()
        code = run_cli("verify", "--in", str(out), "--which", "mean", "--expr", "0")
        assert code == 0
        assert "PASS" in capsys.readouterr().out

    def test_verify_fails_on_wrong_profile(self, tmp_path, capsys):
        out = tmp_path / "c.csv"
        run_cli(
            "solve-mean", "--axis", "timelike", "--h-expr", "0",
            "--consts", "2,1,0", "--range", "0:1", "--out", str(out),
        )
        code = run_cli("verify", "--in", str(out), "--which", "mean", "--expr", "0.3")
        assert code == 4
        assert "FAIL" in capsys.readouterr().out

    def test_verify_detects_tampering(self, tmp_path, capsys):
        # Exit-code contract both ways: a perturbed curve must exit 4.
        out = tmp_path / "c.csv"
        run_cli(
            "solve-mean", "--axis", "timelike", "--h-expr", "0",
            "--consts", "2,1,0", "--range", "0:1", "--out", str(out),
        )
        curve = read_curve_csv(out)
        bumped = curve.points.copy()
        bumped[:, 2] += 1e-3 * np.sin(np.pi * curve.grid.points)
        lines = out.read_text().splitlines()
        body = [
            f"{s:.17g},{p[0]:.17g},{p[1]:.17g},{p[2]:.17g}"
            for s, p in zip(curve.grid.points, bumped)
        ]
        out.write_text("\n".join(lines[:2] + body) + "\n")
        code = run_cli("verify", "--in", str(out), "--which", "mean", "--expr", "0")
        assert code == 4

    def test_skew_solve_then_verify(self, tmp_path):
        out = tmp_path / "s.csv"
        code = run_cli(
            "solve-skew", "--family", "t-xz", "--graph", "1", "--s-expr", "0",
            "--sign", "+", "--a0", "1.0", "--offset", "0", "--range", "0.5:2",
            "--out", str(out),
        )
        assert code == 0
        code = run_cli("verify", "--in", str(out), "--which", "skew", "--expr", "0")
        assert code == 0

    def test_lightlike_solve_and_verify(self, tmp_path):
        out = tmp_path / "l.csv"
        code = run_cli(
            "solve-mean", "--axis", "lightlike", "--h-expr", "0.5",
            "--consts", "2,1,1,0", "--range", "0:1", "--out", str(out),
        )
        assert code == 0
        assert read_curve_csv(out).meta["case"] == "lightlike"
        assert run_cli("verify", "--in", str(out), "--which", "mean", "--expr", "0.5") == 0

    def test_negative_sign_flags_parse(self, tmp_path):
        out = tmp_path / "sx.csv"
        code = run_cli(
            "solve-skew", "--family", "s-xz", "--graph", "2", "--s-expr", "0.5",
            "--sign", "-", "--eta", "-1", "--a0", "1.0", "--offset", "0",
            "--range", "0.5:2", "--out", str(out),
        )
        assert code == 0
        assert read_curve_csv(out).meta["case"] == "skew-s-xz-2"

    def test_mesh_theta_and_plot_outputs(self, tmp_path):
        out = tmp_path / "c.csv"
        mesh = tmp_path / "c.obj"
        plot = tmp_path / "c.png"
        code = run_cli(
            "solve-mean", "--axis", "timelike", "--h-expr", "0",
            "--consts", "2,1,0", "--range", "0:1", "--nodes", "101",
            "--out", str(out), "--mesh", str(mesh), "--theta", "0:6.28:32",
            "--plot", str(plot),
        )
        assert code == 0
        assert mesh.read_text().startswith("v ")
        assert plot.stat().st_size > 0

    def test_verify_plot_output(self, tmp_path):
        out = tmp_path / "c.csv"
        plot = tmp_path / "err.png"
        run_cli(
            "solve-mean", "--axis", "timelike", "--h-expr", "0",
            "--consts", "2,1,0", "--range", "0:1", "--out", str(out),
        )
        code = run_cli(
            "verify", "--in", str(out), "--which", "mean", "--expr", "0",
            "--plot", str(plot),
        )
        assert code == 0
        assert plot.stat().st_size > 0


class TestExitCodes:
    def test_missing_required_argument_exits_two(self):
        proc = subprocess.run(
            [sys.executable, "-m", "minkrev", "solve-mean", "--axis", "timelike",
             "--h-expr", "0", "--range", "0:1", "--out", "/tmp/x.csv"],
            capture_output=True,
        )
        assert proc.returncode == 2

    def test_bad_expression_exits_two(self, tmp_path):
        proc = subprocess.run(
            [sys.executable, "-m", "minkrev", "solve-mean", "--axis", "timelike",
             "--h-expr", "cosh(", "--consts", "2,1,0", "--range", "0:1",
             "--out", str(tmp_path / "x.csv")],
            capture_output=True,
        )
        assert proc.returncode == 2

    def test_domain_violation_exits_three(self, tmp_path):
        code = run_cli(
            "solve-mean", "--axis", "spacelike-sp", "--h-expr", "0",
            "--consts", "0,0,0", "--range", "0:1", "--out", str(tmp_path / "x.csv"),
        )
        assert code == 3

    def test_constant_violation_exits_three(self, tmp_path):
        code = run_cli(
            "solve-mean", "--axis", "lightlike", "--h-expr", "0",
            "--consts", "1,1,1,0", "--range", "0:1", "--out", str(tmp_path / "x.csv"),
        )
        assert code == 3


class TestMoments:
    def test_spacelike_worked_example(self, capsys):
        assert run_cli("moments", "--k1", "2", "--k2", "4", "--surface", "spacelike") == 0
        out = capsys.readouterr().out
        vals = {}
        for line in out.splitlines():
            key, val = line.split()
            vals[key] = float(val)
        assert vals["mu"] == pytest.approx(3.0, abs=1e-12)
        assert vals["sigma"] == pytest.approx(0.7071067811865476, abs=1e-12)
        assert vals["H"] == pytest.approx(-3.0, abs=1e-12)
        assert vals["S"] == pytest.approx(2.0, abs=1e-12)

    def test_timelike_prints_both_means(self, capsys):
        assert run_cli(
            "moments", "--k1", "1", "--k2", "0", "--surface", "timelike", "--a", "0.1"
        ) == 0
        out = capsys.readouterr().out
        vals = {}
        for line in out.splitlines():
            key, val = line.split()
            vals[key] = float(val)
        assert vals["mean_closed_form"] == pytest.approx(1.0101006700133779, abs=1e-12)
        assert vals["mean_quadrature"] == pytest.approx(vals["mean_closed_form"], abs=1e-9)
        assert "var_quadrature" in vals
