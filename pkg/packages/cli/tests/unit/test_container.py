"""Tests for the CLI container's settings and worker wiring."""

from cli.dependencies.container import CLIContainer
from core.domain.value_objects.window import Window
from core.settings import AppSettings, StudyDefaults


def test_it_shares_one_runner_between_use_cases():
    container = CLIContainer()

    calibrate = container.get_calibrate_interactor()
    sweep = container.get_sweep_interactor()

    assert calibrate._runner is sweep._runner
    assert container.get_calibrate_interactor() is calibrate


def test_it_rebuilds_the_runner_when_workers_change():
    container = CLIContainer()
    serial = container.get_runner()

    container.set_workers(3)

    assert container.workers == 3
    assert container.get_runner() is not serial
    assert container.get_runner().workers == 3


def test_it_keeps_the_runner_when_workers_are_unchanged():
    container = CLIContainer()
    container.set_workers(2)
    runner = container.get_runner()

    container.set_workers(2)

    assert container.get_runner() is runner


def test_it_keeps_storage_across_worker_changes():
    container = CLIContainer()
    store = container.get_csv_store()

    container.set_workers(4)

    assert container.get_csv_store() is store


def test_it_takes_the_default_window_from_loaded_settings(tmp_path):
    container = CLIContainer()
    window = Window(x0=0, y0=0, x1=2, y1=3)
    settings = AppSettings(config_file=str(tmp_path / "missing.json"))
    settings.defaults = StudyDefaults(window=window)
    runner = container.get_runner()

    container.use_settings(settings)

    assert container.default_window == window
    assert container.get_runner() is not runner


async def test_it_drops_cached_use_cases_on_close():
    container = CLIContainer()
    interactor = container.get_envelope_test_interactor()

    await container.close()

    assert container.get_envelope_test_interactor() is not interactor
