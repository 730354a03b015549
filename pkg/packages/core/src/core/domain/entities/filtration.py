"""The alpha filtration over a Delaunay triangulation."""

from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from .triangulation import Triangulation


@dataclass(frozen=True)
class Simplex:
    dimension: int
    vertices: tuple[int, ...]
    value: float


@dataclass(frozen=True)
class AlphaFiltration:
    """Per-simplex filtration values, in filtration order.

    Vertices enter at 0, every Delaunay edge at half its length and every
    triangle at its cover radius. ``order`` lists ``(dimension, local index)``
    pairs sorted by ``(value, dimension, vertex tuple)``; the local index
    addresses ``triangulation.edges`` / ``triangulation.triangles`` or the
    vertex number.
    """

    triangulation: Triangulation
    edge_values: np.ndarray
    triangle_values: np.ndarray
    order: tuple[tuple[int, int], ...]

    @property
    def n_vertices(self) -> int:
        return self.triangulation.n_vertices

    def value_of(self, dimension: int, index: int) -> float:
        if dimension == 0:
            return 0.0
        if dimension == 1:
            return float(self.edge_values[index])
        return float(self.triangle_values[index])

    def vertices_of(self, dimension: int, index: int) -> tuple[int, ...]:
        if dimension == 0:
            return (index,)
        if dimension == 1:
            return tuple(int(v) for v in self.triangulation.edges[index])
        return tuple(int(v) for v in self.triangulation.triangles[index])

    def simplices(self) -> Iterator[Simplex]:
        """All simplices in filtration order."""
        for dimension, index in self.order:
            yield Simplex(
                dimension=dimension,
                vertices=self.vertices_of(dimension, index),
                value=self.value_of(dimension, index),
            )

    def counts_up_to(self, r: float) -> tuple[int, int, int]:
        """Numbers of vertices, edges and triangles with value <= r."""
        return (
            self.n_vertices,
            int(np.count_nonzero(self.edge_values <= r)),
            int(np.count_nonzero(self.triangle_values <= r)),
        )
