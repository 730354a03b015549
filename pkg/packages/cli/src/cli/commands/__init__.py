"""Commands package for Click-based CLI."""

from .gof_commands import calibrate, test_deviation, test_envelope
from .pattern_commands import oracle, pd, ripley, simulate, summary
from .study_commands import mean_curves, power, power_envelope, sweep

__all__ = [
    "calibrate",
    "mean_curves",
    "oracle",
    "pd",
    "power",
    "power_envelope",
    "ripley",
    "simulate",
    "summary",
    "sweep",
    "test_deviation",
    "test_envelope",
]
