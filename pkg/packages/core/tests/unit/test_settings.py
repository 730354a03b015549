import json
import math

import pytest
from core.domain.entities.exceptions import ConfigurationError, ValidationError
from core.domain.value_objects.window import Window
from core.settings import AppSettings


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    for name in ("TDAGOF_THREADS", "TDAGOF_CHUNK_SIZE", "LOG_LEVEL", "LOG_FORMAT"):
        monkeypatch.delenv(name, raising=False)


def test_it_uses_the_poisson_study_defaults(tmp_path):
    settings = AppSettings(config_file=str(tmp_path / "absent.json"))

    defaults = settings.defaults
    assert defaults.window == Window(x0=0, y0=0, x1=10, y1=10)
    assert defaults.intensity == 2.0
    assert defaults.M == pytest.approx(math.sqrt(2) * 10)
    assert (defaults.r_final, defaults.r_cluster, defaults.r_loop) == (1.5, 0.1, 0.5)
    assert (defaults.curve_points, defaults.surface_points) == (64, 32)
    assert defaults.alpha == 0.05
    assert settings.compute.threads == 1
    assert settings.compute.chunk_size == 25
    assert settings.logging.level == "WARNING"


def test_it_loads_sections_from_the_config_file(tmp_path):
    config_path = tmp_path / "tdagof.json"
    config_path.write_text(
        json.dumps(
            {
                "compute": {"threads": 3},
                "defaults": {"window": "0,0,5,5", "r_final": 2.0},
                "logging": {"level": "debug", "format": "json"},
            }
        )
    )

    settings = AppSettings(config_file=str(config_path))

    assert settings.compute.threads == 3
    assert settings.defaults.window == Window(x0=0, y0=0, x1=5, y1=5)
    assert settings.defaults.r_final == 2.0
    assert settings.defaults.intensity == 2.0
    assert settings.logging.level == "DEBUG"
    assert settings.logging.format == "json"


def test_it_reads_the_worker_count_from_the_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("TDAGOF_THREADS", "4")

    settings = AppSettings(config_file=str(tmp_path / "absent.json"))

    assert settings.compute.threads == 4


@pytest.mark.parametrize(
    "content",
    [
        "{broken",
        json.dumps({"compute": {"threads": 0}}),
        json.dumps({"defaults": {"window": "0,0,0,1"}}),
        json.dumps({"logging": {"level": "LOUD"}}),
    ],
)
def test_it_refuses_an_invalid_config_file(tmp_path, content):
    config_path = tmp_path / "tdagof.json"
    config_path.write_text(content)

    with pytest.raises(ConfigurationError):
        AppSettings(config_file=str(config_path))


def test_it_saves_what_it_loads(tmp_path):
    config_path = tmp_path / "conf" / "tdagof.json"
    settings = AppSettings(config_file=str(config_path))
    settings.compute.threads = 2
    settings.defaults.alpha = 0.1

    settings.save_config()

    saved = json.loads(config_path.read_text())
    assert saved["compute"] == {"threads": 2, "chunk_size": 25}
    assert saved["defaults"]["window"] == [0.0, 0.0, 10.0, 10.0]
    reloaded = AppSettings(config_file=str(config_path))
    assert reloaded.defaults == settings.defaults
    assert reloaded.compute.threads == 2


@pytest.mark.parametrize(
    ("section", "field", "value"),
    [
        ("defaults", "r_cluster", 2.0),
        ("defaults", "r_loop", 1.6),
        ("defaults", "chain", 10),
        ("compute", "threads", 10**6),
    ],
)
def test_it_validates_cross_field_constraints(tmp_path, section, field, value):
    settings = AppSettings(config_file=str(tmp_path / "absent.json"))
    setattr(getattr(settings, section), field, value)

    with pytest.raises(ValidationError) as error:
        settings.validate_settings()

    assert error.value.details["field"] == field


def test_it_accepts_the_defaults(tmp_path):
    AppSettings(config_file=str(tmp_path / "absent.json")).validate_settings()
