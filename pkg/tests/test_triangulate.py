from fractions import Fraction
from itertools import product

import pytest

from stringy_mckay.triangulate import (
    in_circle,
    orient,
    triangulate_segment,
    triangulate_triangle,
)

F = Fraction


def test_predicates():
    a, b, c = (F(0), F(0)), (F(1), F(0)), (F(0), F(1))
    assert orient(a, b, c) > 0
    assert in_circle(a, b, c, (F(1, 2), F(1, 2))) > 0
    assert in_circle(a, b, c, (F(1), F(1))) == 0
    assert in_circle(a, b, c, (F(2), F(2))) < 0


def test_segment():
    assert triangulate_segment([F(0), F(1), F(1, 2)]) == [(0, 2), (2, 1)]


def lattice_triangle(n):
    """Corners (0,0), (n,0), (0,n) first, then every other lattice point."""
    corners = [(0, 0), (n, 0), (0, n)]
    rest = [(i, j) for i, j in product(range(n + 1), repeat=2) if i + j <= n and (i, j) not in corners]
    return [(F(i), F(j)) for i, j in corners + rest]


@pytest.mark.parametrize("n", [1, 2, 3, 5])
@pytest.mark.parametrize("delaunay", [True, False])
@pytest.mark.parametrize("reverse", [True, False])
def test_full_triangulation_is_unimodular(n, delaunay, reverse):
    pts = lattice_triangle(n)
    order = sorted(range(len(pts)), key=lambda i: pts[i], reverse=reverse)
    tris = triangulate_triangle(pts, order, delaunay=delaunay)
    assert len(tris) == n * n
    for a, b, c in tris:
        assert abs(orient(pts[a], pts[b], pts[c])) == 1
    used = {i for t in tris for i in t}
    assert used == set(range(len(pts)))


def test_delaunay_has_no_illegal_edges():
    pts = lattice_triangle(4)
    tris = triangulate_triangle(pts, range(len(pts)))
    ccw = [t if orient(*(pts[i] for i in t)) > 0 else (t[0], t[2], t[1]) for t in tris]
    for t in ccw:
        for p in range(len(pts)):
            if p not in t:
                assert in_circle(*(pts[i] for i in t), pts[p]) <= 0


def test_collinear_corners_rejected():
    pts = [(F(0), F(0)), (F(1), F(1)), (F(2), F(2))]
    with pytest.raises(ValueError):
        triangulate_triangle(pts, [])
