"""
M-bounded persistence diagram domain models.
"""

from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..value_objects.window import Window


class Feature(BaseModel):
    """One M-bounded cluster (dimension 0) or loop (dimension 1).

    ``killer`` is the point index that kills a cluster, or the vertex triple
    of the triangle whose disks cover a hole last. For loops ``creator`` is
    the edge whose insertion made the hole M-bounded, ``standard_birth`` the
    time the hole first appeared and ``witness`` the point it covers last.
    """

    model_config = ConfigDict(frozen=True)

    dimension: Literal[0, 1]
    birth: float = Field(..., ge=0)
    death: float = Field(..., gt=0)
    killer: tuple[int, ...]
    creator: tuple[int, int] | None = None
    standard_birth: float = Field(default=0.0, ge=0)
    witness: tuple[float, float] | None = None

    @model_validator(mode="after")
    def check_times(self) -> "Feature":
        if not self.birth < self.death:
            raise ValueError(f"birth {self.birth} must precede death {self.death}")
        if self.dimension == 0:
            if self.birth != 0 or len(self.killer) != 1:
                raise ValueError("clusters are born at 0 and killed by one point")
        else:
            if len(self.killer) != 3:
                raise ValueError("loops are killed by a triangle")
            if self.standard_birth > self.birth:
                raise ValueError("standard_birth must not exceed the M-bounded birth")
        return self

    @property
    def lifetime(self) -> float:
        return self.death - self.birth

    @property
    def sort_key(self) -> tuple[int, float, float, tuple[int, ...]]:
        return (self.dimension, self.birth, self.death, self.killer)


class PersistenceDiagram(BaseModel):
    """The features of both dimensions that die before ``r_f``.

    ``n_points`` and ``window`` are unknown for diagrams read back from CSV.
    """

    model_config = ConfigDict(frozen=True)

    features: tuple[Feature, ...] = ()
    M: float = Field(..., gt=0, description="Feature size bound")
    r_f: float = Field(..., gt=0, description="Final filtration radius")
    n_points: int | None = Field(default=None, ge=0)
    window: Window | None = None

    @field_validator("features")
    @classmethod
    def sort_features(cls, v: tuple[Feature, ...]) -> tuple[Feature, ...]:
        return tuple(sorted(v, key=lambda f: f.sort_key))

    @model_validator(mode="after")
    def check_bounds(self) -> "PersistenceDiagram":
        late = [f for f in self.features if f.death > self.r_f]
        if late:
            raise ValueError(f"{len(late)} features die after r_f={self.r_f}")
        if self.n_points is not None:
            clusters = sum(1 for f in self.features if f.dimension == 0)
            if clusters > self.n_points:
                raise ValueError(
                    f"{clusters} cluster deaths for only {self.n_points} points"
                )
        return self

    def of_dimension(self, q: int) -> tuple[Feature, ...]:
        return tuple(f for f in self.features if f.dimension == q)

    def births(self, q: int) -> np.ndarray:
        return np.array([f.birth for f in self.of_dimension(q)], dtype=float)

    def deaths(self, q: int) -> np.ndarray:
        return np.array([f.death for f in self.of_dimension(q)], dtype=float)

    def __len__(self) -> int:
        return len(self.features)
