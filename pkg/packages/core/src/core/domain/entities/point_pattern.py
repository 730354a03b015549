"""
PointPattern domain model.
"""

from functools import cached_property

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..value_objects.window import Window
from .exceptions import DuplicatePointError


class PointPattern(BaseModel):
    """A finite planar point set observed in a rectangular window."""

    model_config = ConfigDict(frozen=True)

    points: tuple[tuple[float, float], ...] = Field(
        default=(), description="Point coordinates in window units"
    )
    window: Window

    @model_validator(mode="after")
    def check_points(self) -> "PointPattern":
        seen: dict[tuple[float, float], int] = {}
        for index, (x, y) in enumerate(self.points):
            if not self.window.contains(x, y):
                raise ValueError(f"point {index} ({x}, {y}) lies outside the window")
            first = seen.setdefault((x, y), index)
            if first != index:
                raise DuplicatePointError(index, first)
        return self

    @classmethod
    def from_array(cls, coordinates: np.ndarray, window: Window) -> "PointPattern":
        coords = np.asarray(coordinates, dtype=float).reshape(-1, 2)
        return cls(
            points=tuple((float(x), float(y)) for x, y in coords), window=window
        )

    @cached_property
    def coordinates(self) -> np.ndarray:
        """Read-only ``(n, 2)`` array view of the points."""
        coords = np.array(self.points, dtype=float).reshape(-1, 2)
        coords.setflags(write=False)
        return coords

    def __len__(self) -> int:
        return len(self.points)

    @property
    def intensity(self) -> float:
        return len(self.points) / self.window.area
