"""The Delaunay triangulation of a point pattern."""

from dataclasses import dataclass

import numpy as np

# Marker used in ``neighbors`` and ``edge_faces`` for the unbounded face.
OUTER_FACE = -1


@dataclass(frozen=True)
class Triangulation:
    """Vertices, edges and triangles of a planar Delaunay triangulation.

    ``edges`` rows are ``(i, j)`` with ``i < j`` in lexicographic order and
    ``triangles`` rows are sorted vertex triples. ``neighbors[t, k]`` is the
    triangle across the edge opposite ``triangles[t, k]`` (``OUTER_FACE`` on
    the hull); ``edge_faces[e]`` holds the one or two triangles bordering
    edge ``e``, padded with ``OUTER_FACE``.
    """

    n_vertices: int
    edges: np.ndarray
    triangles: np.ndarray
    neighbors: np.ndarray
    edge_faces: np.ndarray

    @property
    def n_edges(self) -> int:
        return int(self.edges.shape[0])

    @property
    def n_triangles(self) -> int:
        return int(self.triangles.shape[0])

    @property
    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_triangles
