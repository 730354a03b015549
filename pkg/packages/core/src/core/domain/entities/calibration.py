"""
Calibration and test report domain models.
"""

import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator
from scipy import stats

from ..value_objects.model_spec import ModelSpec
from ..value_objects.statistic_spec import FunctionalStatisticSpec, StatisticSpec


class Calibration(BaseModel):
    """Monte-Carlo null moments of a scalar statistic.

    ``values`` keeps the per-replication statistic in stream order so the
    shape of the null distribution can be inspected after the fact.
    """

    model_config = ConfigDict(frozen=True)

    model: ModelSpec
    statistic: StatisticSpec
    n_sims: int = Field(..., ge=2)
    seed: int = Field(..., ge=0, lt=2**64)
    mean: float
    variance: float = Field(..., ge=0)
    degenerate: bool = False
    values: list[float] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_values(self) -> "Calibration":
        if self.values and len(self.values) != self.n_sims:
            raise ValueError(
                f"calibration holds {len(self.values)} values for n_sims={self.n_sims}"
            )
        if self.degenerate != (self.variance == 0):
            raise ValueError("degenerate flag must match a zero variance")
        return self

    @classmethod
    def from_values(
        cls,
        model: ModelSpec,
        statistic: StatisticSpec,
        seed: int,
        values: np.ndarray,
    ) -> "Calibration":
        sample = np.asarray(values, dtype=float)
        variance = float(np.var(sample, ddof=1))
        return cls(
            model=model,
            statistic=statistic,
            n_sims=len(sample),
            seed=seed,
            mean=float(np.mean(sample)),
            variance=variance,
            degenerate=variance == 0,
            values=sample.tolist(),
        )

    @property
    def sd(self) -> float:
        return math.sqrt(self.variance)

    @property
    def skewness(self) -> float:
        if self.degenerate or len(self.values) < 3:
            return 0.0
        return float(stats.skew(self.values, bias=False))

    @property
    def excess_kurtosis(self) -> float:
        if self.degenerate or len(self.values) < 4:
            return 0.0
        return float(stats.kurtosis(self.values, fisher=True, bias=False))


class TestReport(BaseModel):
    """Outcome of a Gaussian deviation test."""

    __test__ = False

    model_config = ConfigDict(frozen=True)

    statistic: StatisticSpec
    model: ModelSpec
    value: float
    z: float
    p_value: float = Field(..., ge=0, le=1)
    alpha: float = Field(..., gt=0, lt=1)
    reject: bool
    mean: float
    variance: float
    n_sims: int
    seed: int

    @model_validator(mode="after")
    def check_decision(self) -> "TestReport":
        if self.reject != (self.p_value < self.alpha):
            raise ValueError("reject must equal p_value < alpha")
        return self


class EnvelopeReport(BaseModel):
    """Outcome of a global extreme-rank-length envelope test.

    Surface statistics are flattened row-major, so ``grid`` then holds the
    position in the flattened vector.
    """

    model_config = ConfigDict(frozen=True)

    statistic: FunctionalStatisticSpec
    model: ModelSpec
    grid: list[float]
    observed: list[float]
    lower: list[float]
    upper: list[float]
    p_value: float = Field(..., gt=0, le=1)
    alpha: float = Field(..., gt=0, lt=1)
    reject: bool
    n_sims: int = Field(..., ge=1)
    seed: int

    @model_validator(mode="after")
    def check_envelope(self) -> "EnvelopeReport":
        lengths = {len(self.grid), len(self.observed), len(self.lower), len(self.upper)}
        if len(lengths) != 1:
            raise ValueError("envelope curves must share the grid length")
        if any(lo > hi for lo, hi in zip(self.lower, self.upper, strict=True)):
            raise ValueError("lower envelope exceeds upper envelope")
        if self.reject != (self.p_value <= self.alpha):
            raise ValueError("reject must equal p_value <= alpha")
        return self

    @property
    def outside(self) -> list[bool]:
        """Grid points where the observed curve leaves the envelope."""
        return [
            not lo <= v <= hi
            for v, lo, hi in zip(self.observed, self.lower, self.upper, strict=True)
        ]


class RejectionSummary(BaseModel):
    """How often a test rejected over independent replications."""

    model_config = ConfigDict(frozen=True)

    model: str = Field(..., description="Label of the model the data came from")
    statistic: str
    alpha: float = Field(..., gt=0, lt=1)
    p_values: list[float]
    n_rejected: int = Field(..., ge=0)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def n_reps(self) -> int:
        return len(self.p_values)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def rate(self) -> float:
        return self.n_rejected / len(self.p_values) if self.p_values else 0.0
