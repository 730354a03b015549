"""
Statistic evaluation for single patterns and for seeded replications.

The ``*_replicate`` functions are module-level so worker processes can
unpickle them; each one is a pure function of its arguments.
"""

from collections.abc import Sequence

import numpy as np

from ..entities.persistence import PersistenceDiagram
from ..entities.point_pattern import PointPattern
from ..enums.enums import FunctionalStatisticId, StatisticId
from ..value_objects.model_spec import ModelSpec
from ..value_objects.seed_spec import SeedSpec
from ..value_objects.statistic_spec import FunctionalStatisticSpec, StatisticSpec
from ..value_objects.window import Window
from .persistence import persistence_diagram
from .point_processes import sample
from .summaries import (
    apf0,
    apf1,
    apf_curve,
    betti_life_surface,
    death_count_curve,
    ripley_l,
    t_cluster,
    t_loop,
)

_SCALARS = {
    StatisticId.T_CLUSTER: t_cluster,
    StatisticId.T_LOOP: t_loop,
    StatisticId.APF0: apf0,
    StatisticId.APF1: apf1,
}


def scalar_statistic(diagram: PersistenceDiagram, spec: StatisticSpec) -> float:
    return _SCALARS[spec.id](diagram, spec.r)


def scalar_values(
    pattern: PointPattern, specs: Sequence[StatisticSpec]
) -> list[float]:
    """Evaluate several scalar statistics from one diagram per (M, r_f)."""
    diagrams: dict[tuple[float, float], PersistenceDiagram] = {}
    values = []
    for spec in specs:
        key = (spec.M, spec.r_f)
        if key not in diagrams:
            diagrams[key] = persistence_diagram(pattern, spec.M, spec.r_f)
        values.append(scalar_statistic(diagrams[key], spec))
    return values


def functional_values(
    pattern: PointPattern, spec: FunctionalStatisticSpec
) -> np.ndarray:
    """The statistic as a flat vector on its fixed grid."""
    if spec.id is FunctionalStatisticId.RIPLEY_L:
        return ripley_l(pattern, spec.argument_grid(pattern.window)).as_array()

    diagram = persistence_diagram(pattern, spec.M, spec.r_f)
    if spec.id is FunctionalStatisticId.BETTI_SURFACE:
        b_grid, l_grid = spec.surface_grids()
        return betti_life_surface(diagram, b_grid, l_grid).flatten()

    grid = spec.argument_grid(pattern.window)
    if spec.id is FunctionalStatisticId.APF1_CURVE:
        return apf_curve(diagram, 1, grid).as_array()
    return death_count_curve(diagram, 0, grid).as_array()


def functional_grid(spec: FunctionalStatisticSpec, window: Window) -> np.ndarray:
    """Argument values matching :func:`functional_values`.

    Surfaces are indexed by their position in the row-major flattening.
    """
    if spec.id is FunctionalStatisticId.BETTI_SURFACE:
        return np.arange(spec.length, dtype=float)
    return spec.argument_grid(window)


def scalar_replicate(
    model: ModelSpec, specs: Sequence[StatisticSpec], master: int, stream: int
) -> list[float]:
    pattern = sample(model, SeedSpec(master=master, stream=stream))
    return scalar_values(pattern, specs)


def functional_replicate(
    model: ModelSpec, spec: FunctionalStatisticSpec, master: int, stream: int
) -> np.ndarray:
    pattern = sample(model, SeedSpec(master=master, stream=stream))
    return functional_values(pattern, spec)
