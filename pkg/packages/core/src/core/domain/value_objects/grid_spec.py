"""Raster parameters for the union-of-disks oracle."""

from pydantic import BaseModel, ConfigDict, Field


class GridSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    resolution: float = Field(..., gt=0, description="Cell side length h")
    margin: float = Field(..., ge=0, description="Padding added around the window")

    @classmethod
    def for_radius(cls, r: float, resolution: float) -> "GridSpec":
        """The smallest admissible margin for radius ``r``: ``r + 2h``."""
        return cls(resolution=resolution, margin=r + 2 * resolution)
