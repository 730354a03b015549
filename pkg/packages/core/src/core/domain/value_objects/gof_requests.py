"""
Requests for single goodness-of-fit tests.
"""

from pydantic import BaseModel, Field, model_validator

from ..entities.calibration import Calibration
from ..entities.point_pattern import PointPattern
from .model_spec import ModelSpec
from .statistic_spec import FunctionalStatisticSpec


class DeviationTestRequest(BaseModel):
    pattern: PointPattern
    calibration: Calibration
    alpha: float = Field(default=0.05, gt=0, lt=1)


class EnvelopeTestRequest(BaseModel):
    """Request for a global envelope test of ``pattern`` against ``model``."""

    pattern: PointPattern
    model: ModelSpec
    statistic: FunctionalStatisticSpec
    n_sims: int = Field(..., ge=1, description="Null curves s")
    alpha: float = Field(default=0.05, gt=0, lt=1)
    seed: int = Field(..., ge=0, lt=2**64)

    @model_validator(mode="after")
    def check_enough_sims(self) -> "EnvelopeTestRequest":
        needed = round(1 / self.alpha) - 1
        if self.n_sims < needed:
            raise ValueError(
                f"at least {needed} null simulations are needed for alpha={self.alpha}"
            )
        return self
