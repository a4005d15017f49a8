"""E-polynomials with rational exponents.

A :class:`MotivicClass` is a finite sum ``sum c * u^p * v^q`` with integer
coefficients and nonnegative rational exponents.  It stands in for classes in
the Grothendieck ring of varieties (adjoined fractional powers of the Tate
class ``L = uv``) after taking Hodge-Deligne realizations.

The zero class has no terms.  Coefficients are never stored as zero, so two
classes are equal exactly when their term tuples are equal.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Union[int, Fraction, str]
Exponent = tuple[Fraction, Fraction]


class NonIntegralClassError(ValueError):
    """Raised when integer Hodge data is requested from a class with fractional exponents."""

    def __init__(self, exponent: Exponent):
        self.exponent = exponent
        p, q = exponent
        super().__init__(
            f"non-integral class: exponent (p, q) = ({_fmt(p)}, {_fmt(q)}) is not an integer pair"
        )


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _exp(x: Rational) -> Fraction:
    e = Fraction(x)
    if e < 0:
        raise ValueError(f"negative exponent {e} is not allowed")
    return e


@dataclass(frozen=True)
class MotivicClass:
    """Immutable sparse E-polynomial; ``terms`` is sorted by (p, q)."""

    terms: tuple[tuple[Exponent, int], ...] = ()

    @classmethod
    def from_mapping(cls, mapping: Mapping[tuple[Rational, Rational], int]) -> MotivicClass:
        acc: dict[Exponent, int] = defaultdict(int)
        for (p, q), c in mapping.items():
            acc[(_exp(p), _exp(q))] += int(c)
        return cls(tuple(sorted((k, c) for k, c in acc.items() if c != 0)))

    @property
    def mapping(self) -> dict[Exponent, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: MotivicClass) -> MotivicClass:
        if not isinstance(other, MotivicClass):
            return NotImplemented
        acc = self.mapping
        for k, c in other.terms:
            acc[k] = acc.get(k, 0) + c
        return MotivicClass.from_mapping(acc)

    def __neg__(self) -> MotivicClass:
        return MotivicClass(tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other: MotivicClass) -> MotivicClass:
        if not isinstance(other, MotivicClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: MotivicClass | int) -> MotivicClass:
        if isinstance(other, int):
            return MotivicClass.from_mapping({k: c * other for k, c in self.terms})
        if not isinstance(other, MotivicClass):
            return NotImplemented
        acc: dict[Exponent, int] = defaultdict(int)
        for (p1, q1), c1 in self.terms:
            for (p2, q2), c2 in other.terms:
                acc[(p1 + p2, q1 + q2)] += c1 * c2
        return MotivicClass.from_mapping(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MotivicClass:
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def render(self) -> str:
        """Canonical text form, e.g. ``1 + 2*(uv)^1 + 1*(uv)^2``."""
        if not self.terms:
            return "0"
        parts = []
        for (p, q), c in self.terms:
            if p == 0 and q == 0:
                parts.append(str(c))
            elif p == q:
                parts.append(f"{c}*(uv)^{_fmt(p)}")
            else:
                parts.append(f"{c}*(u^{_fmt(p)})*(v^{_fmt(q)})")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()


ZERO = MotivicClass()
ONE = MotivicClass((((Fraction(0), Fraction(0)), 1),))


def make_term(coeff: int, p: Rational, q: Rational) -> MotivicClass:
    """Single term ``coeff * u^p * v^q``; the zero class when ``coeff == 0``."""
    return MotivicClass.from_mapping({(_exp(p), _exp(q)): coeff})


def add(a: MotivicClass, b: MotivicClass) -> MotivicClass:
    return a + b


def mul(a: MotivicClass, b: MotivicClass) -> MotivicClass:
    return a * b


def tate_power(e: Rational) -> MotivicClass:
    """The class ``L^e = (uv)^e``."""
    e = _exp(e)
    return make_term(1, e, e)


L = tate_power(1)


def tate_sum(exponents: Iterable[Rational]) -> MotivicClass:
    """``sum_e (uv)^e`` over an iterable of exponents (repeats add up)."""
    acc: dict[tuple[Rational, Rational], int] = defaultdict(int)
    for e in exponents:
        e = _exp(e)
        acc[(e, e)] += 1
    return MotivicClass.from_mapping(acc)


def euler_characteristic(a: MotivicClass) -> int:
    """Specialize at ``u = v = 1``."""
    return sum(c for _, c in a.terms)


def hodge_numbers(a: MotivicClass) -> dict[tuple[int, int], int]:
    """Coefficient table keyed by integer (p, q).

    Raises :class:`NonIntegralClassError` on the first fractional exponent.
    Coefficients are reported as stored; no (-1)^(p+q) sign is applied.
    """
    out: dict[tuple[int, int], int] = {}
    for (p, q), c in a.terms:
        if p.denominator != 1 or q.denominator != 1:
            raise NonIntegralClassError((p, q))
        out[(int(p), int(q))] = c
    return out


def fractional_exponents(a: MotivicClass) -> list[Exponent]:
    return [k for k, _ in a.terms if k[0].denominator != 1 or k[1].denominator != 1]
