"""
Requests for multi-replication studies (mean curves, power, sweeps).
"""

from pydantic import BaseModel, Field, model_validator

from ..entities.calibration import Calibration
from ..entities.point_pattern import PointPattern
from ..enums.enums import StatisticId
from .model_spec import ModelSpec
from .statistic_spec import FunctionalStatisticSpec


class MeanCurvesRequest(BaseModel):
    model: ModelSpec
    statistic: FunctionalStatisticSpec
    n_sims: int = Field(..., ge=2)
    seed: int = Field(..., ge=0, lt=2**64)


class RejectionRateRequest(BaseModel):
    """Deviation tests of ``n_reps`` draws from ``model`` against a calibration."""

    model: ModelSpec
    calibration: Calibration
    alpha: float = Field(default=0.05, gt=0, lt=1)
    n_reps: int = Field(..., ge=1)
    seed: int = Field(..., ge=0, lt=2**64)

    @model_validator(mode="after")
    def check_window(self) -> "RejectionRateRequest":
        if self.model.window != self.calibration.model.window:
            raise ValueError("model and calibration must share the window")
        return self


class EnvelopeRejectionRequest(BaseModel):
    """Envelope tests of ``n_reps`` draws from ``model`` against ``null_model``."""

    model: ModelSpec
    null_model: ModelSpec
    statistic: FunctionalStatisticSpec
    n_sims: int = Field(..., ge=1, description="Null curves s")
    alpha: float = Field(default=0.05, gt=0, lt=1)
    n_reps: int = Field(..., ge=1)
    seed: int = Field(..., ge=0, lt=2**64)

    @model_validator(mode="after")
    def check_window(self) -> "EnvelopeRejectionRequest":
        if self.model.window != self.null_model.window:
            raise ValueError("model and null model must share the window")
        return self


class SweepRequest(BaseModel):
    """Deviation tests of one pattern for several integration bounds."""

    pattern: PointPattern
    model: ModelSpec
    statistic: StatisticId
    r_values: list[float] = Field(..., min_length=1)
    M: float = Field(..., gt=0)
    r_f: float = Field(..., gt=0)
    n_sims: int = Field(..., ge=2)
    alpha: float = Field(default=0.05, gt=0, lt=1)
    seed: int = Field(..., ge=0, lt=2**64)

    @model_validator(mode="after")
    def check_bounds(self) -> "SweepRequest":
        if any(r < 0 or r > self.r_f for r in self.r_values):
            raise ValueError("every r must lie in [0, r_f]")
        return self
