"""Statistic specifications shared by calibrations and tests."""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..enums.enums import FunctionalStatisticId, StatisticId
from .window import Window

DEFAULT_CURVE_POINTS = 64
DEFAULT_SURFACE_POINTS = 32


class StatisticSpec(BaseModel):
    """A scalar persistence statistic: ``id`` evaluated at ``r`` (r_C or r_L).

    Serializes as ``{"id": ..., "r": ..., "M": ..., "r_f": ..., "grid": [...]}``;
    ``grid`` is carried for curve-valued companions and may be empty.
    """

    model_config = ConfigDict(frozen=True)

    id: StatisticId
    r: float = Field(..., ge=0, description="Integration bound r_C or r_L")
    M: float = Field(..., gt=0, description="Feature size bound")
    r_f: float = Field(..., gt=0, description="Final filtration radius")
    grid: list[float] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_bound(self) -> "StatisticSpec":
        if self.r > self.r_f:
            raise ValueError("statistic bound r must not exceed r_f")
        return self


class FunctionalStatisticSpec(BaseModel):
    """A functional statistic for envelope tests, discretized on a fixed grid.

    ``r_max`` is the upper end of the argument range; it defaults to ``r_f``
    for persistence curves and to ``min(r_f, shorter window side / 4)`` for
    Ripley's L.
    """

    model_config = ConfigDict(frozen=True)

    id: FunctionalStatisticId
    M: float = Field(..., gt=0)
    r_f: float = Field(..., gt=0)
    grid_points: int = Field(default=DEFAULT_CURVE_POINTS, ge=2)
    r_max: float | None = Field(default=None, gt=0)

    def argument_grid(self, window: Window) -> np.ndarray:
        if self.id is FunctionalStatisticId.RIPLEY_L:
            upper = self.r_max or min(self.r_f, min(window.width, window.height) / 4)
            step = upper / self.grid_points
            return step * np.arange(1, self.grid_points + 1)
        upper = self.r_max or self.r_f
        return np.linspace(0.0, upper, self.grid_points)

    def surface_grids(self) -> tuple[np.ndarray, np.ndarray]:
        upper = self.r_max or self.r_f
        axis = np.linspace(0.0, upper, self.grid_points)
        return axis, axis.copy()

    @property
    def length(self) -> int:
        if self.id is FunctionalStatisticId.BETTI_SURFACE:
            return self.grid_points * self.grid_points
        return self.grid_points
