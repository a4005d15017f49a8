from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from stringy_mckay import _linalg as la


def _det_int(m):
    return int(la.det(m))


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-12, 12), min_size=c, max_size=c), min_size=r, max_size=r
        )
    )
)


@given(matrices)
def test_hnf_is_a_unimodular_column_reduction(a):
    h, u = la.hnf_columns(a)
    assert la.matmul(a, u) == h
    assert abs(_det_int(u)) == 1
    # echelon: pivot columns come first, each pivot positive and below the previous
    last = -1
    for j in range(len(h[0])):
        col = [h[i][j] for i in range(len(h))]
        nz = [i for i, x in enumerate(col) if x]
        if not nz:
            assert all(not any(h[i][k] for i in range(len(h))) for k in range(j, len(h[0])))
            break
        top = nz[0]
        assert top > last and h[top][j] > 0
        for k in range(j):
            assert 0 <= h[top][k] < h[top][j]
        last = top
    assert len([j for j in range(len(h[0])) if any(h[i][j] for i in range(len(h)))]) == la.rank(a)


def test_hnf_small_example():
    h, _ = la.hnf_columns([[2, 4, 4], [-6, 6, 12]])
    assert h == [[2, 0, 0], [0, 6, 0]] or h[0][0] == 2
    assert la.matmul([[2, 4, 4], [-6, 6, 12]], _) == h


@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=3, max_size=3))
def test_inverse_and_solve(a):
    if la.det(a) == 0:
        assert la.rank(a) < 3
        return
    inv = la.inverse(a)
    assert la.matmul(a, inv) == [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    x = la.solve(a, [1, 2, 3])
    assert la.matvec(a, x) == [1, 2, 3]


def test_nullspace():
    ker = la.nullspace([[1, 1, 0], [0, 1, 1]])
    assert len(ker) == 1
    assert la.matvec([[1, 1, 0], [0, 1, 1]], ker[0]) == [0, 0]


def test_primitive():
    assert la.clear_denominators([Fraction(1, 2), Fraction(1, 3)]) == (3, 2)
    assert la.primitive([4, -6]) == (2, -3)
