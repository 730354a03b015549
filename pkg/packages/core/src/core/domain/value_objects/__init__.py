from .grid_spec import GridSpec
from .model_spec import (
    MaternParams,
    ModelSpec,
    PoissonParams,
    StraussParams,
)
from .seed_spec import SeedSpec
from .statistic_spec import FunctionalStatisticSpec, StatisticSpec
from .window import Window

__all__ = [
    "FunctionalStatisticSpec",
    "GridSpec",
    "MaternParams",
    "ModelSpec",
    "PoissonParams",
    "SeedSpec",
    "StatisticSpec",
    "StraussParams",
    "Window",
]
