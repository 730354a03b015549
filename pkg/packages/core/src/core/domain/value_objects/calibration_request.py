"""
CalibrationRequest domain model.
"""

from pydantic import BaseModel, Field

from .model_spec import ModelSpec
from .statistic_spec import StatisticSpec


class CalibrationRequest(BaseModel):
    """Request to estimate the null mean and variance of a scalar statistic."""

    model: ModelSpec
    statistic: StatisticSpec
    n_sims: int = Field(..., ge=2, description="Null replications (streams 0..n-1)")
    seed: int = Field(..., ge=0, lt=2**64, description="Master seed")
