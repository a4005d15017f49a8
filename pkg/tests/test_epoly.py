from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stringy_mckay.epoly import (
    ONE,
    ZERO,
    MotivicClass,
    NonIntegralClassError,
    add,
    euler_characteristic,
    hodge_numbers,
    make_term,
    mul,
    tate_power,
)

F = Fraction
uv = make_term(1, 1, 1)


def test_make_term():
    assert make_term(1, 1, 1) == tate_power(1)
    assert make_term(0, 2, 3) == ZERO
    assert make_term(3, F(1, 2), F(1, 2)).terms == (((F(1, 2), F(1, 2)), 3),)


@pytest.mark.parametrize("p, q", [(-1, 0), (0, F(-1, 2))])
def test_make_term_rejects_negative_exponent(p, q):
    with pytest.raises(ValueError):
        make_term(1, p, q)


def test_add():
    assert add(uv, uv) == make_term(2, 1, 1)
    assert add(uv, ZERO) == uv
    assert add(make_term(1, 2, 2), make_term(-1, 2, 2)) == ZERO


def test_mul():
    assert mul(uv, uv) == make_term(1, 2, 2)
    assert mul(tate_power(F(1, 2)), tate_power(F(1, 2))) == uv
    assert mul(ONE + uv, ONE + uv) == ONE + make_term(2, 1, 1) + make_term(1, 2, 2)


def test_tate_power():
    assert tate_power(0) == ONE
    assert tate_power(1) == uv
    assert tate_power(F(2, 3)).render() == "1*(uv)^2/3"
    with pytest.raises(ValueError):
        tate_power(-1)


def test_euler_characteristic():
    assert euler_characteristic(ONE + make_term(2, 1, 1) + make_term(1, 2, 2)) == 4
    assert euler_characteristic(ZERO) == 0
    n = 5
    assert euler_characteristic(make_term(1, 2, 2) + make_term(n - 1, 1, 1)) == 5


def test_hodge_numbers():
    cls = ONE + make_term(2, 1, 1) + make_term(1, 2, 2)
    assert hodge_numbers(cls) == {(0, 0): 1, (1, 1): 2, (2, 2): 1}
    with pytest.raises(NonIntegralClassError) as exc:
        hodge_numbers(tate_power(F(1, 2)))
    assert exc.value.exponent == (F(1, 2), F(1, 2))


def test_rendering_golden():
    assert ZERO.render() == "0"
    assert (ONE + make_term(2, 1, 1) + make_term(1, 2, 2)).render() == "1 + 2*(uv)^1 + 1*(uv)^2"
    assert make_term(-3, 1, 2).render() == "-3*(u^1)*(v^2)"
    assert (make_term(1, F(1, 2), 0) + make_term(1, 0, 1)).render() == "1*(u^0)*(v^1) + 1*(u^1/2)*(v^0)"


def test_canonical_form_has_no_zero_coefficients():
    cls = MotivicClass.from_mapping({(1, 1): 2, (2, 2): 0, ("1", "1"): -2})
    assert cls == ZERO and cls.terms == ()


# ---------------------------------------------------------------- properties

exponents = st.fractions(min_value=0, max_value=5, max_denominator=4)
classes = st.dictionaries(
    st.tuples(exponents, exponents), st.integers(-20, 20), max_size=8
).map(MotivicClass.from_mapping)


@given(classes, classes, classes)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * tate_power(0) == a
    assert a + ZERO == a


@given(exponents, exponents)
def test_tate_powers_multiply(a, b):
    assert tate_power(a) * tate_power(b) == tate_power(a + b)


@given(classes, classes)
def test_euler_characteristic_is_a_ring_map(a, b):
    assert euler_characteristic(a + b) == euler_characteristic(a) + euler_characteristic(b)
    assert euler_characteristic(a * b) == euler_characteristic(a) * euler_characteristic(b)


@given(classes)
def test_normalization_is_idempotent(a):
    assert MotivicClass.from_mapping(a.mapping) == a
