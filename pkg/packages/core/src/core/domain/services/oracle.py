"""
Brute-force topology of the union of disks, independent of the triangulation.

The raster counts use 4-connectivity for the occupied cells and
8-connectivity for the vacant ones. Counts are only trustworthy for radii
well away (about ten cells) from any topological transition.
"""

import math

import networkx as nx
import numpy as np
from scipy import ndimage
from scipy.spatial import cKDTree

from ..entities.exceptions import ValidationError
from ..entities.point_pattern import PointPattern
from ..value_objects.grid_spec import GridSpec

_four_connect = ndimage.generate_binary_structure(2, 1)
_eight_connect = ndimage.generate_binary_structure(2, 2)


def occupancy_raster(pattern: PointPattern, r: float, grid: GridSpec) -> np.ndarray:
    """Cells whose centre lies within ``r`` of some point."""
    h = grid.resolution
    window = pattern.window.dilate(grid.margin)
    nx_cells = math.ceil(window.width / h)
    ny_cells = math.ceil(window.height / h)
    occupied = np.zeros((nx_cells, ny_cells), dtype=bool)
    r_sq = r * r

    for px, py in pattern.coordinates:
        i0 = max(0, math.floor((px - r - window.x0) / h))
        i1 = min(nx_cells, math.ceil((px + r - window.x0) / h) + 1)
        j0 = max(0, math.floor((py - r - window.y0) / h))
        j1 = min(ny_cells, math.ceil((py + r - window.y0) / h) + 1)
        cx = window.x0 + (np.arange(i0, i1) + 0.5) * h - px
        cy = window.y0 + (np.arange(j0, j1) + 0.5) * h - py
        occupied[i0:i1, j0:j1] |= cx[:, None] ** 2 + cy[None, :] ** 2 <= r_sq
    return occupied


def grid_betti(pattern: PointPattern, r: float, grid: GridSpec) -> tuple[int, int]:
    """Betti numbers of the union of closed ``r``-disks, by rasterization."""
    if len(pattern) == 0:
        return 0, 0
    if grid.margin < r + grid.resolution:
        raise ValidationError(
            "margin",
            grid.margin,
            f"margin must be at least r + h = {r + grid.resolution}",
        )

    occupied = occupancy_raster(pattern, r, grid)
    _, beta0 = ndimage.label(occupied, _four_connect)

    vacant_labels, n_vacant = ndimage.label(~occupied, _eight_connect)
    border = np.concatenate(
        [
            vacant_labels[0, :],
            vacant_labels[-1, :],
            vacant_labels[:, 0],
            vacant_labels[:, -1],
        ]
    )
    touching = np.unique(border[border > 0])
    beta1 = n_vacant - len(touching)
    return int(beta0), int(beta1)


def gilbert_components(pattern: PointPattern, r: float) -> int:
    """Connected components of the graph joining points at distance <= 2r."""
    graph = nx.Graph()
    graph.add_nodes_from(range(len(pattern)))
    if len(pattern) > 1:
        pairs = cKDTree(pattern.coordinates).query_pairs(2 * r, output_type="ndarray")
        graph.add_edges_from(map(tuple, pairs.tolist()))
    return nx.number_connected_components(graph)
