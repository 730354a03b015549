"""
M-bounded persistence of the alpha filtration.

Clusters are followed forward with a union-find over the points. Holes are
followed backwards: removing simplices from the full complex in decreasing
filtration order, every triangle starts a region of the complement and every
edge removal joins two regions. Read forward, that join is the moment one
region (the younger) appears by splitting off the other, so the same sweep
yields both the standard hole pairs and the history of hole sizes.
"""

from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np
import structlog
from scipy.spatial.distance import cdist

from ...utils.union_find import UnionFind
from ..entities.exceptions import ValidationError
from ..entities.filtration import AlphaFiltration
from ..entities.persistence import Feature, PersistenceDiagram
from ..entities.point_pattern import PointPattern
from ..entities.triangulation import OUTER_FACE
from .geometry import (
    build_alpha_filtration,
    build_delaunay,
    point_set_diameter,
    triangle_cover_point,
)

logger = structlog.get_logger(__name__)

WeightFunction = Callable[[float, float], float]


@dataclass
class _Cluster:
    members: list[int]
    diameter: float = 0.0
    alive: bool = True


@dataclass
class _Region:
    """A component of the complement during the backward sweep."""

    witness: int
    vertices: set[int] | None
    diameter: float | None = None
    history: list[tuple[float, float, tuple[int, int]]] = field(default_factory=list)

    @property
    def is_outer(self) -> bool:
        return self.vertices is None


def h0_features(
    filtration: AlphaFiltration, pattern: PointPattern, M: float, r_f: float
) -> list[Feature]:
    coords = pattern.coordinates
    tri = filtration.triangulation
    uf = UnionFind(filtration.n_vertices)
    clusters = {v: _Cluster(members=[v]) for v in range(filtration.n_vertices)}
    features: list[Feature] = []

    def die(value: float, killer: int) -> None:
        features.append(Feature(dimension=0, birth=0.0, death=value, killer=(killer,)))

    for dim, index in filtration.order:
        if dim != 1:
            continue
        value = float(filtration.edge_values[index])
        if value > r_f:
            break
        i, j = (int(v) for v in tri.edges[index])
        a, b = uf.find(i), uf.find(j)
        if a == b:
            continue
        ca, cb = clusters.pop(a), clusters.pop(b)

        merged_alive = False
        diameter = 0.0
        if ca.alive and cb.alive:
            cross = float(cdist(coords[ca.members], coords[cb.members]).max())
            diameter = max(ca.diameter, cb.diameter, cross)
            if diameter > M:
                die(value, j)
                die(value, i)
            else:
                merged_alive = True
                if tuple(coords[i]) > tuple(coords[j]):
                    die(value, j)
                else:
                    die(value, i)
        elif ca.alive:
            die(value, j)
        elif cb.alive:
            die(value, i)

        root = uf.union(a, b)
        larger, smaller = (ca, cb) if len(ca.members) >= len(cb.members) else (cb, ca)
        larger.members.extend(smaller.members)
        clusters[root] = _Cluster(
            members=larger.members, diameter=diameter, alive=merged_alive
        )

    return features


def h1_features(
    filtration: AlphaFiltration, pattern: PointPattern, M: float, r_f: float
) -> list[Feature]:
    tri = filtration.triangulation
    n_triangles = tri.n_triangles
    if n_triangles == 0:
        return []

    coords = pattern.coordinates
    outer = n_triangles
    position = np.full(n_triangles + 1, np.iinfo(np.int64).max, dtype=np.int64)
    for k, (dim, index) in enumerate(filtration.order):
        if dim == 2:
            position[index] = k

    uf = UnionFind(n_triangles + 1)
    regions: dict[int, _Region] = {outer: _Region(witness=outer, vertices=None)}
    finished: list[_Region] = []

    def size_of(region: _Region) -> float:
        if region.diameter is None:
            assert region.vertices is not None
            region.diameter = point_set_diameter(coords[sorted(region.vertices)])
        return region.diameter

    for dim, index in reversed(filtration.order):
        if dim == 2:
            regions[index] = _Region(
                witness=index, vertices={int(v) for v in tri.triangles[index]}
            )
            continue
        if dim != 1:
            continue

        f0, f1 = (outer if f == OUTER_FACE else int(f) for f in tri.edge_faces[index])
        a, b = uf.find(f0), uf.find(f1)
        if a == b:
            continue
        ra, rb = regions.pop(a), regions.pop(b)
        younger, elder = (
            (ra, rb) if position[ra.witness] < position[rb.witness] else (rb, ra)
        )

        s = float(filtration.edge_values[index])
        edge = (int(tri.edges[index, 0]), int(tri.edges[index, 1]))
        younger.history.append((s, size_of(younger), edge))
        finished.append(younger)
        if not elder.is_outer:
            elder.history.append((s, size_of(elder), edge))
            assert elder.vertices is not None and younger.vertices is not None
            elder.vertices |= younger.vertices
            elder.diameter = None
        regions[uf.union(a, b)] = elder

    features = []
    for region in finished:
        death = float(filtration.triangle_values[region.witness])
        if death > r_f:
            continue
        forward = region.history[::-1]
        bounded = next((entry for entry in forward if entry[1] < M), None)
        if bounded is None:
            continue
        birth, _, creator = bounded
        if not birth < death:
            continue
        corners = coords[tri.triangles[region.witness]]
        witness = triangle_cover_point(*corners)
        features.append(
            Feature(
                dimension=1,
                birth=birth,
                death=death,
                killer=tuple(int(v) for v in tri.triangles[region.witness]),
                creator=creator,
                standard_birth=forward[0][0],
                witness=(float(witness[0]), float(witness[1])),
            )
        )
    return features


def persistence_diagram(
    pattern: PointPattern, M: float, r_f: float
) -> PersistenceDiagram:
    if M <= 0:
        raise ValidationError("M", M, "M must be positive")
    if r_f <= 0:
        raise ValidationError("r_f", r_f, "r_f must be positive")
    tri = build_delaunay(pattern)
    filtration = build_alpha_filtration(tri, pattern)
    features = h0_features(filtration, pattern, M, r_f) + h1_features(
        filtration, pattern, M, r_f
    )
    logger.debug(
        "persistence_diagram",
        n_points=len(pattern),
        n_triangles=tri.n_triangles,
        n_features=len(features),
    )
    return PersistenceDiagram(
        features=tuple(features),
        M=M,
        r_f=r_f,
        n_points=len(pattern),
        window=pattern.window,
    )


def attribute_h0(
    diagram: PersistenceDiagram, pattern: PointPattern, f: WeightFunction
) -> np.ndarray:
    """Per-point totals of ``f(0, death)`` over the clusters each point kills."""
    totals = np.zeros(len(pattern))
    for feature in diagram.of_dimension(0):
        totals[feature.killer[0]] += f(0.0, feature.death)
    return totals


def attribute_h1(
    diagram: PersistenceDiagram, pattern: PointPattern, f: WeightFunction
) -> np.ndarray:
    """Per-point totals of ``f(birth, death)`` over the loops each point creates.

    A loop is credited to the lexicographically smaller endpoint of its
    creator edge. When one edge creates two loops at once, the loop with the
    smaller witness gets the smaller endpoint and the other loop the larger.
    """
    coords = pattern.coordinates
    totals = np.zeros(len(pattern))
    groups: dict[tuple[tuple[int, int], float], list[Feature]] = {}
    for feature in diagram.of_dimension(1):
        if feature.creator is None or feature.witness is None:
            raise ValidationError(
                "creator",
                None,
                "diagram carries no creator edges; recompute it from the pattern",
            )
        groups.setdefault((feature.creator, feature.birth), []).append(feature)

    for (creator, _), features in groups.items():
        endpoints = sorted(creator, key=lambda v: tuple(coords[v]))
        features.sort(key=lambda feat: feat.witness or (0.0, 0.0))
        for k, feature in enumerate(features):
            giver = endpoints[min(k, 1)]
            totals[giver] += f(feature.birth, feature.death)
    return totals


def betti_numbers_at(filtration: AlphaFiltration, r: float) -> tuple[int, int]:
    """Unbounded Betti numbers of the alpha complex at radius ``r``."""
    tri = filtration.triangulation
    uf = UnionFind(filtration.n_vertices)
    for e in np.flatnonzero(filtration.edge_values <= r):
        uf.union(int(tri.edges[e, 0]), int(tri.edges[e, 1]))
    vertices, edges, triangles = filtration.counts_up_to(r)
    beta0 = uf.components
    beta1 = beta0 - (vertices - edges + triangles)
    return beta0, beta1
