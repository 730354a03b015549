"""Discretized functional summaries."""

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from ..enums.enums import CurveKind
from ..value_objects.model_spec import ModelSpec
from ..value_objects.statistic_spec import FunctionalStatisticSpec


def _strictly_increasing(values: tuple[float, ...]) -> bool:
    return all(a < b for a, b in zip(values, values[1:], strict=False))


class SummaryCurve(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: CurveKind
    grid: tuple[float, ...]
    values: tuple[float, ...]

    @model_validator(mode="after")
    def check_shape(self) -> "SummaryCurve":
        if len(self.grid) != len(self.values):
            raise ValueError(
                f"grid has {len(self.grid)} points but values has {len(self.values)}"
            )
        if not _strictly_increasing(self.grid):
            raise ValueError("curve grid must be strictly increasing")
        return self

    @classmethod
    def from_arrays(
        cls, kind: CurveKind, grid: np.ndarray, values: np.ndarray
    ) -> "SummaryCurve":
        return cls(
            kind=kind,
            grid=tuple(float(g) for g in grid),
            values=tuple(float(v) for v in values),
        )

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)


class SummarySurface(BaseModel):
    """Counts of loops born by ``b`` living at least ``l``.

    ``values[i][j]`` belongs to ``(b_grid[i], l_grid[j])``.
    """

    model_config = ConfigDict(frozen=True)

    b_grid: tuple[float, ...]
    l_grid: tuple[float, ...]
    values: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def check_shape(self) -> "SummarySurface":
        if len(self.values) != len(self.b_grid) or any(
            len(row) != len(self.l_grid) for row in self.values
        ):
            raise ValueError("surface values do not match the grid dimensions")
        if not all(map(_strictly_increasing, (self.b_grid, self.l_grid))):
            raise ValueError("surface grids must be strictly increasing")
        return self

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.int64).reshape(
            len(self.b_grid), len(self.l_grid)
        )

    def flatten(self) -> np.ndarray:
        """Row-major vector used when ranking surfaces."""
        return self.as_array().astype(float).ravel()


class MeanCurve(BaseModel):
    """Pointwise mean and standard deviation of a statistic over simulations."""

    model_config = ConfigDict(frozen=True)

    model: ModelSpec
    statistic: FunctionalStatisticSpec
    grid: tuple[float, ...]
    mean: tuple[float, ...]
    sd: tuple[float, ...]
    n_sims: int

    @model_validator(mode="after")
    def check_shape(self) -> "MeanCurve":
        if not len(self.grid) == len(self.mean) == len(self.sd):
            raise ValueError("grid, mean and sd must have equal lengths")
        return self
