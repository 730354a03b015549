"""
Tests for mean-curves, power, power-envelope and sweep.
"""

import json

from cli.exceptions import EXIT_USAGE
from cli.main import cli


class TestMeanCurvesCommand:

    def test_it_writes_mean_and_spread(self, runner, tmp_path):
        out = tmp_path / "mean.csv"

        result = runner.invoke(
            cli,
            [
                "mean-curves",
                "--window",
                "0,0,4,4",
                "--stat",
                "l",
                "--grid",
                "6",
                "--n-sims",
                "8",
                "--seed",
                "2",
                "--out",
                str(out),
            ],
        )

        assert result.exit_code == 0, result.output
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "arg,mean,sd"
        assert len(lines) == 7
        assert all(float(line.split(",")[2]) >= 0 for line in lines[1:])

    def test_it_simulates_a_short_strauss_chain(self, runner, tmp_path):
        out = tmp_path / "mean.csv"

        result = runner.invoke(
            cli,
            [
                "mean-curves",
                "--model",
                "strauss",
                "--beta",
                "2",
                "--gamma",
                "0.2",
                "--radius",
                "0.3",
                "--chain",
                "2000",
                "--burnin",
                "1000",
                "--window",
                "0,0,4,4",
                "--stat",
                "death-curve",
                "--grid",
                "5",
                "--n-sims",
                "3",
                "--seed",
                "8",
                "--out",
                str(out),
            ],
        )

        assert result.exit_code == 0, result.output
        assert len(out.read_text(encoding="utf-8").splitlines()) == 6


class TestPowerCommand:

    def test_it_estimates_the_size_under_the_null(
        self, runner, tmp_path, calibration_json
    ):
        out = tmp_path / "size.json"

        result = runner.invoke(
            cli,
            [
                "power",
                "--calib",
                str(calibration_json),
                "--n-reps",
                "10",
                "--seed",
                "9",
                "--out",
                str(out),
            ],
        )

        assert result.exit_code == 0, result.output
        summary = json.loads(out.read_text(encoding="utf-8"))
        assert summary["model"] == "Poi(2)"
        assert summary["n_reps"] == 10
        assert len(summary["p_values"]) == 10
        assert 0 <= summary["rate"] <= 1
        assert summary["n_rejected"] == sum(p < 0.05 for p in summary["p_values"])

    def test_it_needs_the_calibration_window(self, runner, tmp_path, calibration_json):
        result = runner.invoke(
            cli,
            [
                "power",
                "--calib",
                str(calibration_json),
                "--window",
                "0,0,6,6",
                "--n-reps",
                "2",
                "--seed",
                "9",
                "--out",
                str(tmp_path / "size.json"),
            ],
        )

        assert result.exit_code == EXIT_USAGE


class TestPowerEnvelopeCommand:

    def test_it_ranks_cluster_draws_against_the_poisson_null(self, runner, tmp_path):
        out = tmp_path / "power.json"

        result = runner.invoke(
            cli,
            [
                "power-envelope",
                "--model",
                "matern",
                "--kappa",
                "0.5",
                "--radius",
                "0.3",
                "--mu",
                "4",
                "--window",
                "0,0,4,4",
                "--stat",
                "death-curve",
                "--grid",
                "8",
                "--n-sims",
                "19",
                "--n-reps",
                "4",
                "--seed",
                "6",
                "--out",
                str(out),
            ],
        )

        assert result.exit_code == 0, result.output
        summary = json.loads(out.read_text(encoding="utf-8"))
        assert summary["model"] == "MatC(0.5, 0.3, 4)"
        assert summary["statistic"] == "death-curve"
        assert summary["n_reps"] == 4
        assert all(0 < p <= 1 for p in summary["p_values"])


class TestSweepCommand:

    def test_it_writes_one_row_per_bound(self, runner, tmp_path, poisson_csv):
        out = tmp_path / "sweep.csv"

        result = runner.invoke(
            cli,
            [
                "sweep",
                "--in",
                str(poisson_csv),
                "--window",
                "0,0,5,5",
                "--stat",
                "t-cluster",
                "--r",
                "0.05",
                "--r",
                "0.1",
                "--r",
                "0.2",
                "--n-sims",
                "15",
                "--seed",
                "5",
                "--out",
                str(out),
            ],
        )

        assert result.exit_code == 0, result.output
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "r,value,z,p_value,reject"
        rows = [line.split(",") for line in lines[1:]]
        assert [float(row[0]) for row in rows] == [0.05, 0.1, 0.2]
        assert all(row[4] in ("0", "1") for row in rows)
        assert all(0 <= float(row[3]) <= 1 for row in rows)

    def test_it_refuses_bounds_beyond_r_f(self, runner, tmp_path, poisson_csv):
        result = runner.invoke(
            cli,
            [
                "sweep",
                "--in",
                str(poisson_csv),
                "--window",
                "0,0,5,5",
                "--stat",
                "t-loop",
                "--r",
                "3",
                "--n-sims",
                "4",
                "--seed",
                "5",
                "--out",
                str(tmp_path / "sweep.csv"),
            ],
        )

        assert result.exit_code == EXIT_USAGE
