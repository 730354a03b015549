"""Observation window value object."""

import math
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_serializer, model_validator


class Window(BaseModel):
    """Axis-aligned rectangle ``[x0, x1] x [y0, y1]``.

    Accepts the ``[x0, y0, x1, y1]`` list used in JSON job files and the
    ``"x0,y0,x1,y1"`` string used on the command line, and serializes back to
    the list form.
    """

    model_config = ConfigDict(frozen=True)

    x0: float = Field(..., description="Left edge")
    y0: float = Field(..., description="Bottom edge")
    x1: float = Field(..., description="Right edge")
    y1: float = Field(..., description="Top edge")

    @model_validator(mode="before")
    @classmethod
    def accept_compact_forms(cls, value: Any) -> Any:
        if isinstance(value, str):
            value = [part.strip() for part in value.split(",")]
        if isinstance(value, list | tuple):
            if len(value) != 4:
                raise ValueError("window needs exactly four numbers x0,y0,x1,y1")
            x0, y0, x1, y1 = (float(v) for v in value)
            return {"x0": x0, "y0": y0, "x1": x1, "y1": y1}
        return value

    @model_validator(mode="after")
    def check_extent(self) -> "Window":
        coords = (self.x0, self.y0, self.x1, self.y1)
        if not all(math.isfinite(c) for c in coords):
            raise ValueError("window coordinates must be finite")
        if self.x1 <= self.x0 or self.y1 <= self.y0:
            raise ValueError("window needs x0 < x1 and y0 < y1")
        return self

    @model_serializer
    def as_list(self) -> list[float]:
        return [self.x0, self.y0, self.x1, self.y1]

    @property
    def width(self) -> float:
        return self.x1 - self.x0

    @property
    def height(self) -> float:
        return self.y1 - self.y0

    @property
    def area(self) -> float:
        return self.width * self.height

    @property
    def diagonal(self) -> float:
        return math.hypot(self.width, self.height)

    def contains(self, x: float, y: float) -> bool:
        """Closed containment: boundary points belong to the window."""
        return self.x0 <= x <= self.x1 and self.y0 <= y <= self.y1

    def dilate(self, margin: float) -> "Window":
        return Window(
            x0=self.x0 - margin,
            y0=self.y0 - margin,
            x1=self.x1 + margin,
            y1=self.y1 + margin,
        )

    def to_flag(self) -> str:
        return ",".join(format(c, ".17g") for c in self.as_list())
