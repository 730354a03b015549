import json

import pytest
import structlog
from core.settings import LoggingSettings
from core.utils.logging import configure_logging


@pytest.fixture(autouse=True)
def reset_structlog():
    yield
    structlog.reset_defaults()


class TestConfigureLogging:

    def test_it_writes_json_events_to_stderr(self, capsys):
        configure_logging(LoggingSettings(level="INFO", format="json"))

        structlog.get_logger("tdagof.test").info("calibrated", n_sims=3)

        captured = capsys.readouterr()
        event = json.loads(captured.err.strip().splitlines()[-1])
        assert event["event"] == "calibrated"
        assert event["n_sims"] == 3
        assert event["level"] == "info"
        assert captured.out == ""

    def test_it_filters_below_the_level(self, capsys):
        configure_logging(LoggingSettings(level="WARNING", format="console"))

        structlog.get_logger("tdagof.test").info("quiet")
        structlog.get_logger("tdagof.test").warning("loud")

        err = capsys.readouterr().err
        assert "quiet" not in err
        assert "loud" in err
