"""
Scalar and functional summaries of persistence diagrams and point patterns.

Step counts are right-continuous: a feature dying at ``d`` is counted at
``d``. Integrals of step functions are evaluated in closed form.
"""

import math
from collections.abc import Callable

import numpy as np
from scipy.spatial import cKDTree

from ..entities.exceptions import ValidationError
from ..entities.persistence import PersistenceDiagram
from ..entities.point_pattern import PointPattern
from ..entities.summary import SummaryCurve, SummarySurface
from ..enums.enums import CurveKind


def _count_at_most(values: np.ndarray, grid: np.ndarray) -> np.ndarray:
    return np.searchsorted(np.sort(values), grid, side="right")


def death_count_curve(
    diagram: PersistenceDiagram, q: int, grid: np.ndarray
) -> SummaryCurve:
    """Number of dimension-``q`` features dead by each grid value."""
    grid = np.asarray(grid, dtype=float)
    counts = _count_at_most(diagram.deaths(q), grid)
    return SummaryCurve.from_arrays(CurveKind.DEATH_COUNT, grid, counts)


def birth_count_curve(
    diagram: PersistenceDiagram, q: int, grid: np.ndarray
) -> SummaryCurve:
    grid = np.asarray(grid, dtype=float)
    counts = _count_at_most(diagram.births(q), grid)
    return SummaryCurve.from_arrays(CurveKind.BIRTH_COUNT, grid, counts)


def persistent_betti(diagram: PersistenceDiagram, q: int, b: float, d: float) -> int:
    """Features of dimension ``q`` born by ``b`` and not dead before ``d``."""
    births, deaths = diagram.births(q), diagram.deaths(q)
    return int(np.count_nonzero((births <= b) & (deaths >= d)))


def persistent_betti_curve(
    diagram: PersistenceDiagram, b: float, grid: np.ndarray
) -> SummaryCurve:
    """Clusters born by ``b`` that are still alive at each grid value."""
    grid = np.asarray(grid, dtype=float)
    counts = [persistent_betti(diagram, 0, b, d) for d in grid]
    return SummaryCurve.from_arrays(
        CurveKind.PERSISTENT_BETTI_0, grid, np.asarray(counts)
    )


def betti_life_surface(
    diagram: PersistenceDiagram, b_grid: np.ndarray, l_grid: np.ndarray
) -> SummarySurface:
    """Loops born by ``b`` with lifetime at least ``l``, for every grid pair."""
    b_grid = np.asarray(b_grid, dtype=float)
    l_grid = np.asarray(l_grid, dtype=float)
    births = diagram.births(1)
    lifetimes = diagram.deaths(1) - births
    born = births[:, None] <= b_grid[None, :]
    lives = lifetimes[:, None] >= l_grid[None, :]
    values = np.einsum("fb,fl->bl", born.astype(np.int64), lives.astype(np.int64))
    return SummarySurface(
        b_grid=tuple(float(b) for b in b_grid),
        l_grid=tuple(float(v) for v in l_grid),
        values=tuple(tuple(int(v) for v in row) for row in values),
    )


def t_cluster(diagram: PersistenceDiagram, r_C: float) -> float:
    """Integral over ``[0, r_C]`` of the cluster death count."""
    deaths = diagram.deaths(0)
    return float(np.maximum(0.0, r_C - deaths).sum())


def t_loop(diagram: PersistenceDiagram, r_L: float) -> float:
    """Accumulated lifetime of the loops born by ``r_L``."""
    births = diagram.births(1)
    lifetimes = diagram.deaths(1) - births
    return float(lifetimes[births <= r_L].sum())


def apf0(diagram: PersistenceDiagram, r: float) -> float:
    deaths = diagram.deaths(0)
    return float(deaths[deaths <= r].sum())


def apf1(diagram: PersistenceDiagram, r: float) -> float:
    return t_loop(diagram, r)


def apf1_via_betti(diagram: PersistenceDiagram, r: float, h: float) -> float:
    """APF of loops evaluated through persistent Betti numbers.

    Midpoint rule with cells of width at most ``h`` for

        int_0^r beta(b, 0) db + int_0^{r_f} beta(r, t) dt - r * beta(r, 0),

    which differs from :func:`apf1` by at most ``2 h`` per loop.
    """
    if h <= 0:
        raise ValidationError("h", h, "quadrature step must be positive")
    births, deaths = diagram.births(1), diagram.deaths(1)
    if len(births) == 0:
        return 0.0

    def integrate(
        upper: float, counts: Callable[[np.ndarray], np.ndarray]
    ) -> float:
        if upper <= 0:
            return 0.0
        cells = max(1, math.ceil(upper / h))
        width = upper / cells
        mids = (np.arange(cells) + 0.5) * width
        return float(counts(mids).sum() * width)

    born_by_r = births <= r
    deaths_of_born = np.sort(deaths[born_by_r])
    first = integrate(r, lambda b: _count_at_most(births, b))
    second = integrate(
        diagram.r_f,
        lambda t: len(deaths_of_born)
        - np.searchsorted(deaths_of_born, t, side="left"),
    )
    return first + second - r * int(np.count_nonzero(born_by_r))


def apf_curve(diagram: PersistenceDiagram, q: int, grid: np.ndarray) -> SummaryCurve:
    grid = np.asarray(grid, dtype=float)
    if q == 0:
        values = [apf0(diagram, r) for r in grid]
        return SummaryCurve.from_arrays(CurveKind.APF0, grid, np.asarray(values))
    values = [apf1(diagram, r) for r in grid]
    return SummaryCurve.from_arrays(CurveKind.APF1, grid, np.asarray(values))


def cluster_statistic_curve(
    diagram: PersistenceDiagram, grid: np.ndarray
) -> SummaryCurve:
    """The cluster statistic as a function of its integration bound."""
    grid = np.asarray(grid, dtype=float)
    values = [t_cluster(diagram, r) for r in grid]
    return SummaryCurve.from_arrays(CurveKind.T_CLUSTER, grid, np.asarray(values))


def ripley_l(pattern: PointPattern, r_grid: np.ndarray) -> SummaryCurve:
    """Translation-corrected estimate of Ripley's L on ``r_grid``.

    Each ordered pair within ``r`` is weighted by the inverse area of the
    window intersected with its translate by the pair's offset. Patterns
    with fewer than two points give the zero curve.
    """
    r_grid = np.asarray(r_grid, dtype=float)
    n = len(pattern)
    if n < 2 or len(r_grid) == 0:
        return SummaryCurve.from_arrays(
            CurveKind.RIPLEY_L, r_grid, np.zeros(len(r_grid))
        )

    window = pattern.window
    coords = pattern.coordinates
    pairs = cKDTree(coords).query_pairs(float(r_grid.max()), output_type="ndarray")
    if len(pairs) == 0:
        return SummaryCurve.from_arrays(
            CurveKind.RIPLEY_L, r_grid, np.zeros(len(r_grid))
        )

    offsets = coords[pairs[:, 1]] - coords[pairs[:, 0]]
    distances = np.hypot(offsets[:, 0], offsets[:, 1])
    overlap = (window.width - np.abs(offsets[:, 0])) * (
        window.height - np.abs(offsets[:, 1])
    )
    order = np.argsort(distances, kind="stable")
    cumulative = np.concatenate([[0.0], np.cumsum(2.0 / overlap[order])])
    within = np.searchsorted(distances[order], r_grid, side="right")

    lam = n / window.area
    k_values = cumulative[within] / (lam * lam)
    return SummaryCurve.from_arrays(
        CurveKind.RIPLEY_L, r_grid, np.sqrt(k_values / math.pi)
    )
