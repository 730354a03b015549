"""
Core enumerations for tdagof.
"""

from enum import Enum


class ModelVariant(str, Enum):

    POISSON = "poisson"
    MATERN = "matern"
    STRAUSS = "strauss"


class CurveKind(str, Enum):

    DEATH_COUNT = "death-count"
    PERSISTENT_BETTI_0 = "persistent-betti-0"
    BIRTH_COUNT = "birth-count"
    APF0 = "apf0"
    APF1 = "apf1"
    T_CLUSTER = "t-cluster"
    RIPLEY_L = "ripley-l"


class StatisticId(str, Enum):
    """Scalar statistics a deviation test can be calibrated for."""

    T_CLUSTER = "t-cluster"
    T_LOOP = "t-loop"
    APF0 = "apf0"
    APF1 = "apf1"


class FunctionalStatisticId(str, Enum):
    """Functional statistics a global envelope test ranks."""

    RIPLEY_L = "l"
    DEATH_CURVE = "death-curve"
    BETTI_SURFACE = "betti-surface"
    APF1_CURVE = "apf1-curve"
