"""
Gaussian deviation tests against a Monte-Carlo calibration.
"""

from scipy.stats import norm

from ..entities.calibration import Calibration, TestReport
from ..entities.exceptions import DegenerateCalibrationError, WindowMismatchError
from ..entities.point_pattern import PointPattern
from .statistics import scalar_values


def deviation_test_value(value: float, calib: Calibration, alpha: float) -> TestReport:
    """Two-sided z-test of an already computed statistic value."""
    if calib.degenerate:
        raise DegenerateCalibrationError(calib.statistic.id.value)
    z = (value - calib.mean) / calib.sd
    p_value = min(1.0, float(2 * norm.sf(abs(z))))
    return TestReport(
        statistic=calib.statistic,
        model=calib.model,
        value=value,
        z=z,
        p_value=p_value,
        alpha=alpha,
        reject=p_value < alpha,
        mean=calib.mean,
        variance=calib.variance,
        n_sims=calib.n_sims,
        seed=calib.seed,
    )


def deviation_test(
    pattern: PointPattern, calib: Calibration, alpha: float
) -> TestReport:
    if calib.degenerate:
        raise DegenerateCalibrationError(calib.statistic.id.value)
    if pattern.window != calib.model.window:
        raise WindowMismatchError(
            calib.model.window.to_flag(), pattern.window.to_flag()
        )
    (value,) = scalar_values(pattern, [calib.statistic])
    return deviation_test_value(value, calib, alpha)
