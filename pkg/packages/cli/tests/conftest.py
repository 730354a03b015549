"""Test configuration and shared fixtures for CLI tests."""

import math

import pytest
import structlog
from click.testing import CliRunner

EQUILATERAL_DEATH = 1 / math.sqrt(3)


@pytest.fixture
def equilateral_death():
    """Death radius of the hole of the unit equilateral triangle."""
    return EQUILATERAL_DEATH


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture(autouse=True)
def reset_logging():
    yield
    structlog.reset_defaults()


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch, tmp_path):
    """Run every invocation away from any tdagof.json or TDAGOF_* variables."""
    monkeypatch.chdir(tmp_path)
    for name in ("TDAGOF_THREADS", "TDAGOF_CHUNK_SIZE", "LOG_LEVEL", "LOG_FORMAT"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def equilateral_csv(tmp_path):
    path = tmp_path / "triangle.csv"
    path.write_text(f"x,y\n0,0\n1,0\n0.5,{math.sqrt(3) / 2!r}\n", encoding="utf-8")
    return path


@pytest.fixture
def poisson_csv(runner, tmp_path):
    """A Poisson(2) pattern on the 5x5 window written by the CLI itself."""
    from cli.main import cli

    path = tmp_path / "poisson.csv"
    result = runner.invoke(
        cli,
        [
            "simulate",
            "--model",
            "poisson",
            "--intensity",
            "2",
            "--window",
            "0,0,5,5",
            "--seed",
            "11",
            "--out",
            str(path),
        ],
    )
    assert result.exit_code == 0, result.output
    return path


@pytest.fixture
def calibration_json(runner, tmp_path):
    from cli.main import cli

    path = tmp_path / "calib.json"
    result = runner.invoke(
        cli,
        [
            "calibrate",
            "--window",
            "0,0,5,5",
            "--stat",
            "t-cluster",
            "--n-sims",
            "30",
            "--seed",
            "5",
            "--out",
            str(path),
        ],
    )
    assert result.exit_code == 0, result.output
    return path
