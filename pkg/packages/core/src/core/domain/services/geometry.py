"""
Planar Delaunay triangulation and the alpha filtration built on it.

The filtration follows the union-of-disks picture: every Delaunay edge enters
when the disks at its endpoints touch (half its length), and a triangle enters
once the three disks cover it (its cover radius). Non-Gabriel edges therefore
enter at half their length too, which keeps edge entry times equal to
Gilbert-graph connection times.

Predicates use a relative tolerance of ``PREDICATE_TOLERANCE`` against the
magnitude of the terms of each determinant. Qhull builds the triangulation;
cocircular ties are then resolved towards the lexicographically smaller
diagonal so the output does not depend on Qhull's internal choice.
"""

import numpy as np
from scipy.spatial import ConvexHull, Delaunay, QhullError
from scipy.spatial.distance import pdist

from ..entities.exceptions import GeometryError
from ..entities.filtration import AlphaFiltration
from ..entities.point_pattern import PointPattern
from ..entities.triangulation import OUTER_FACE, Triangulation

PREDICATE_TOLERANCE = 1e-12

# Above this many points the diameter goes through the convex hull.
_HULL_DIAMETER_THRESHOLD = 256


def orientation(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> int:
    """Sign of the turn a -> b -> c: 1 counter-clockwise, -1 clockwise, 0 collinear."""
    abx, aby = b[0] - a[0], b[1] - a[1]
    acx, acy = c[0] - a[0], c[1] - a[1]
    left = abx * acy
    right = aby * acx
    det = left - right
    if abs(det) <= PREDICATE_TOLERANCE * (abs(left) + abs(right)):
        return 0
    return 1 if det > 0 else -1


def incircle(a: np.ndarray, b: np.ndarray, c: np.ndarray, d: np.ndarray) -> int:
    """Position of ``d`` against the circle through counter-clockwise a, b, c.

    1 inside, -1 outside, 0 on the circle (within tolerance).
    """
    adx, ady = a[0] - d[0], a[1] - d[1]
    bdx, bdy = b[0] - d[0], b[1] - d[1]
    cdx, cdy = c[0] - d[0], c[1] - d[1]
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    terms = (
        alift * (bdx * cdy - cdx * bdy),
        blift * (cdx * ady - adx * cdy),
        clift * (adx * bdy - bdx * ady),
    )
    det = sum(terms)
    scale = (
        alift * (abs(bdx * cdy) + abs(cdx * bdy))
        + blift * (abs(cdx * ady) + abs(adx * cdy))
        + clift * (abs(adx * bdy) + abs(bdx * ady))
    )
    if abs(det) <= PREDICATE_TOLERANCE * scale:
        return 0
    return 1 if det > 0 else -1


def build_delaunay(pattern: PointPattern) -> Triangulation:
    """Delaunay triangulation of every point of ``pattern``.

    Collinear patterns (and patterns with fewer than three points) yield the
    path joining consecutive points along the line and no triangles.
    """
    coords = pattern.coordinates
    n = len(coords)
    if n < 3 or _is_collinear(coords):
        return _path_triangulation(coords)

    try:
        qhull = Delaunay(coords)
    except QhullError as e:
        raise GeometryError("build_delaunay", f"Qhull failed: {e}") from e
    if len(qhull.coplanar):
        dropped = int(qhull.coplanar[0][0])
        raise GeometryError(
            "build_delaunay",
            f"point {dropped} was not triangulated (numerically coincident?)",
        )

    triangles = _sorted_rows(np.sort(qhull.simplices, axis=1))
    triangles = _prefer_lexicographic_diagonals(triangles, coords)
    return _assemble(n, triangles)


def triangle_cover_radius(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> float:
    """Smallest r such that the r-disks at a, b and c cover the triangle.

    The circumradius when no angle is obtuse, half the longest side otherwise;
    exactly collinear input falls in the second case.
    """
    corners = np.array([[a, b, c]], dtype=float)
    _check_distinct(corners[0])
    return float(_cover_radii(corners)[0])


def triangle_cover_point(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    """The point the growing disks cover last.

    The circumcenter for triangles without an obtuse angle, the midpoint of
    the longest side otherwise.
    """
    p = np.array([a, b, c], dtype=float)
    _check_distinct(p)
    sides = np.array([p[2] - p[1], p[0] - p[2], p[1] - p[0]])
    sq = np.einsum("ij,ij->i", sides, sides)
    longest = int(np.argmax(sq))
    if _is_obtuse_or_right(sq):
        i, j = [k for k in range(3) if k != longest]
        return (p[i] + p[j]) / 2

    ax, ay = p[0]
    bx, by = p[1]
    cx, cy = p[2]
    d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    ux = (
        (ax * ax + ay * ay) * (by - cy)
        + (bx * bx + by * by) * (cy - ay)
        + (cx * cx + cy * cy) * (ay - by)
    ) / d
    uy = (
        (ax * ax + ay * ay) * (cx - bx)
        + (bx * bx + by * by) * (ax - cx)
        + (cx * cx + cy * cy) * (bx - ax)
    ) / d
    return np.array([ux, uy])


def build_alpha_filtration(
    tri: Triangulation, pattern: PointPattern
) -> AlphaFiltration:
    coords = pattern.coordinates
    if tri.n_vertices != len(coords):
        raise GeometryError(
            "build_alpha_filtration",
            f"triangulation has {tri.n_vertices} vertices, pattern {len(coords)}",
        )

    if tri.n_edges:
        diff = coords[tri.edges[:, 1]] - coords[tri.edges[:, 0]]
        edge_values = 0.5 * np.hypot(diff[:, 0], diff[:, 1])
    else:
        edge_values = np.zeros(0)
    if tri.n_triangles:
        triangle_values = _cover_radii(coords[tri.triangles])
    else:
        triangle_values = np.zeros(0)

    keys: list[tuple[float, int, tuple[int, ...], int]] = [
        (0.0, 0, (v,), v) for v in range(tri.n_vertices)
    ]
    keys.extend(
        (float(edge_values[e]), 1, (int(i), int(j)), e)
        for e, (i, j) in enumerate(tri.edges)
    )
    keys.extend(
        (float(triangle_values[t]), 2, tuple(int(v) for v in tri.triangles[t]), t)
        for t in range(tri.n_triangles)
    )
    keys.sort()

    edge_values.setflags(write=False)
    triangle_values.setflags(write=False)
    return AlphaFiltration(
        triangulation=tri,
        edge_values=edge_values,
        triangle_values=triangle_values,
        order=tuple((dim, index) for _, dim, _, index in keys),
    )


def point_set_diameter(coords: np.ndarray) -> float:
    """Largest pairwise distance in ``coords`` (0 for fewer than two points)."""
    pts = np.asarray(coords, dtype=float).reshape(-1, 2)
    if len(pts) < 2:
        return 0.0
    if len(pts) > _HULL_DIAMETER_THRESHOLD:
        try:
            pts = pts[ConvexHull(pts).vertices]
        except QhullError:
            pass
    return float(pdist(pts).max())


def _cover_radii(corners: np.ndarray) -> np.ndarray:
    """Vectorized cover radius for an ``(m, 3, 2)`` array of triangles."""
    p0, p1, p2 = corners[:, 0], corners[:, 1], corners[:, 2]
    sides = np.stack([p2 - p1, p0 - p2, p1 - p0], axis=1)
    sq = np.einsum("mij,mij->mi", sides, sides)
    longest = np.argmax(sq, axis=1)
    rows = np.arange(len(corners))
    longest_sq = sq[rows, longest]
    others_sq = sq.sum(axis=1) - longest_sq
    not_acute = longest_sq >= others_sq - PREDICATE_TOLERANCE * longest_sq

    longest_side = sides[rows, longest]
    half_longest = 0.5 * np.hypot(longest_side[:, 0], longest_side[:, 1])

    cross = np.abs(sides[:, 2, 0] * sides[:, 1, 1] - sides[:, 2, 1] * sides[:, 1, 0])
    with np.errstate(divide="ignore", invalid="ignore"):
        circumradius = np.sqrt(sq.prod(axis=1)) / (2 * cross)
    return np.where(not_acute, half_longest, circumradius)


def _is_obtuse_or_right(sq: np.ndarray) -> bool:
    longest_sq = float(sq.max())
    return longest_sq >= float(sq.sum()) - longest_sq - PREDICATE_TOLERANCE * longest_sq


def _check_distinct(corners: np.ndarray) -> None:
    for i in range(3):
        for j in range(i + 1, 3):
            if np.array_equal(corners[i], corners[j]):
                raise GeometryError(
                    "triangle_cover_radius",
                    f"triangle corners {i} and {j} coincide",
                )


def _is_collinear(coords: np.ndarray) -> bool:
    order = np.lexsort((coords[:, 1], coords[:, 0]))
    first, last = coords[order[0]], coords[order[-1]]
    return all(orientation(first, last, p) == 0 for p in coords)


def _path_triangulation(coords: np.ndarray) -> Triangulation:
    n = len(coords)
    if n < 2:
        edges = np.zeros((0, 2), dtype=np.int64)
    else:
        along = np.lexsort((coords[:, 1], coords[:, 0]))
        edges = _sorted_rows(np.sort(np.column_stack([along[:-1], along[1:]]), axis=1))
    return Triangulation(
        n_vertices=n,
        edges=edges,
        triangles=np.zeros((0, 3), dtype=np.int64),
        neighbors=np.zeros((0, 3), dtype=np.int64),
        edge_faces=np.full((len(edges), 2), OUTER_FACE, dtype=np.int64),
    )


def _sorted_rows(rows: np.ndarray) -> np.ndarray:
    rows = np.asarray(rows, dtype=np.int64)
    if len(rows) == 0:
        return rows
    order = np.lexsort(rows.T[::-1])
    return rows[order]


def _edge_faces(triangles: np.ndarray) -> dict[tuple[int, int], list[int]]:
    faces: dict[tuple[int, int], list[int]] = {}
    for t, (a, b, c) in enumerate(triangles.tolist()):
        for edge in ((a, b), (a, c), (b, c)):
            faces.setdefault(edge, []).append(t)
    return faces


def _prefer_lexicographic_diagonals(
    triangles: np.ndarray, coords: np.ndarray
) -> np.ndarray:
    """Flip cocircular quadrilaterals to their lexicographically smaller diagonal.

    Each flip replaces an edge by a smaller one, so the loop terminates.
    """
    tris = [tuple(t) for t in triangles.tolist()]
    while True:
        flipped = False
        for (a, b), faces in sorted(_edge_faces(np.array(tris)).items()):
            if len(faces) != 2:
                continue
            t1, t2 = tris[faces[0]], tris[faces[1]]
            c = next(v for v in t1 if v not in (a, b))
            d = next(v for v in t2 if v not in (a, b))
            if (min(c, d), max(c, d)) >= (a, b):
                continue
            pa, pb, pc, pd = coords[a], coords[b], coords[c], coords[d]
            if orientation(pa, pb, pc) < 0:
                pa, pb = pb, pa
            if incircle(pa, pb, pc, pd) != 0:
                continue
            tris[faces[0]] = tuple(sorted((a, c, d)))
            tris[faces[1]] = tuple(sorted((b, c, d)))
            flipped = True
            break
        if not flipped:
            return _sorted_rows(np.array(tris, dtype=np.int64))


def _assemble(n: int, triangles: np.ndarray) -> Triangulation:
    faces = _edge_faces(triangles)
    edges = _sorted_rows(np.array(sorted(faces), dtype=np.int64).reshape(-1, 2))
    edge_faces = np.full((len(edges), 2), OUTER_FACE, dtype=np.int64)
    for e, (i, j) in enumerate(edges.tolist()):
        owners = faces[(i, j)]
        edge_faces[e, : len(owners)] = owners

    neighbors = np.full((len(triangles), 3), OUTER_FACE, dtype=np.int64)
    for t, tri in enumerate(triangles.tolist()):
        for k in range(3):
            edge = tuple(v for m, v in enumerate(tri) if m != k)
            others = [f for f in faces[edge] if f != t]
            if others:
                neighbors[t, k] = others[0]

    for array in (edges, triangles, neighbors, edge_faces):
        array.setflags(write=False)
    return Triangulation(
        n_vertices=n,
        edges=edges,
        triangles=triangles,
        neighbors=neighbors,
        edge_faces=edge_faces,
    )
