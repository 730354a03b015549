"""Domain enums."""

from .enums import (
    CurveKind,
    FunctionalStatisticId,
    ModelVariant,
    StatisticId,
)

__all__ = [
    "CurveKind",
    "FunctionalStatisticId",
    "ModelVariant",
    "StatisticId",
]
