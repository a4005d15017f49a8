"""Exact triangulations of lattice point configurations in dimension <= 2.

Used for the height-one slice of a Gorenstein cone.  Points are given as
rational barycentric coordinates with respect to the cone's rays, so the
slice is a segment or a triangle whose corners are the first points.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Point2 = tuple[Fraction, Fraction]


def orient(a: Point2, b: Point2, c: Point2) -> Fraction:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def in_circle(a: Point2, b: Point2, c: Point2, d: Point2) -> Fraction:
    """Positive iff ``d`` is strictly inside the circumcircle of the ccw triangle ``abc``."""
    rows = []
    for p in (a, b, c):
        dx, dy = p[0] - d[0], p[1] - d[1]
        rows.append((dx, dy, dx * dx + dy * dy))
    (a1, a2, a3), (b1, b2, b3), (c1, c2, c3) = rows
    return a1 * (b2 * c3 - b3 * c2) - a2 * (b1 * c3 - b3 * c1) + a3 * (b1 * c2 - b2 * c1)


def triangulate_segment(coords: Sequence[Fraction]) -> list[tuple[int, int]]:
    """Consecutive pairs after sorting points on a line by coordinate."""
    order = sorted(range(len(coords)), key=lambda i: coords[i])
    return [(order[i], order[i + 1]) for i in range(len(order) - 1)]


def _ccw(tri: tuple[int, int, int], pts: Sequence[Point2]) -> tuple[int, int, int]:
    a, b, c = tri
    return tri if orient(pts[a], pts[b], pts[c]) > 0 else (a, c, b)


def triangulate_triangle(
    pts: Sequence[Point2],
    insertion_order: Sequence[int],
    delaunay: bool = True,
) -> list[tuple[int, int, int]]:
    """Triangulate ``pts`` using every point.

    ``pts[0:3]`` must be the corners of a nondegenerate triangle that
    contains all other points.  The remaining points are placed one by one in
    ``insertion_order``; each insertion splits the triangle (or the two
    triangles around the edge) containing it.  With ``delaunay`` set, Lawson
    flips with an exact in-circle test follow.
    """
    if orient(pts[0], pts[1], pts[2]) == 0:
        raise ValueError("corner points are collinear")
    tris: list[tuple[int, int, int]] = [_ccw((0, 1, 2), pts)]
    for p in insertion_order:
        if p < 3:
            continue
        tris = _insert(tris, pts, p)
    if delaunay:
        tris = _lawson(tris, pts)
    return sorted(tuple(sorted(t)) for t in tris)


def _insert(tris, pts, p):
    P = pts[p]
    for idx, (a, b, c) in enumerate(tris):
        o = (orient(pts[a], pts[b], P), orient(pts[b], pts[c], P), orient(pts[c], pts[a], P))
        if min(o) < 0:
            continue
        rest = tris[:idx] + tris[idx + 1:]
        zeros = [i for i, x in enumerate(o) if x == 0]
        if not zeros:
            return rest + [(a, b, p), (b, c, p), (c, a, p)]
        if len(zeros) > 1:
            raise ValueError(f"point {p} coincides with a vertex")
        edges = [(a, b, c), (b, c, a), (c, a, b)]
        u, v, w = edges[zeros[0]]
        new = [(u, p, w), (p, v, w)]
        # the triangle on the other side of edge (u, v), if any
        for j, t in enumerate(rest):
            for x, y, z in ((t[0], t[1], t[2]), (t[1], t[2], t[0]), (t[2], t[0], t[1])):
                if (x, y) == (v, u):
                    rest = rest[:j] + rest[j + 1:]
                    return rest + new + [(v, p, z), (p, u, z)]
        return rest + new
    raise ValueError(f"point {p} lies outside the triangulated region")


def _lawson(tris, pts):
    tris = list(tris)
    changed = True
    while changed:
        changed = False
        edge_owner = {}
        for i, (a, b, c) in enumerate(tris):
            for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                edge_owner[(x, y)] = (i, z)
        for (x, y), (i, z) in sorted(edge_owner.items()):
            other = edge_owner.get((y, x))
            if other is None:
                continue
            j, w = other
            if in_circle(pts[x], pts[y], pts[z], pts[w]) > 0:
                tris[i] = (x, w, z)
                tris[j] = (w, y, z)
                changed = True
                break
    return tris
