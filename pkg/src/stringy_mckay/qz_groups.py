"""Finite groups of monomial matrices over roots of unity.

An element is stored as a permutation plus a vector of rational angles in
``[0, 1)``.  The matrix it represents has ``M[perm[i], i] = exp(2 pi i a_i)``
with ``a_i = angles[i]`` and zeros elsewhere.  All computations are exact;
eigenvalues come from cycle sums, never from numerical linear algebra.
"""

from __future__ import annotations

import os
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

DEFAULT_CAP = 20000


class GroupTooLargeError(RuntimeError):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"group too large: closure exceeded the cap of {cap} elements")


def default_cap() -> int:
    return int(os.environ.get("STRINGY_MCKAY_CAP", DEFAULT_CAP))


def qz(x) -> Fraction:
    """Reduce a rational angle into [0, 1)."""
    f = Fraction(x)
    return f - (f.numerator // f.denominator)


@dataclass(frozen=True, order=True)
class MonomialElement:
    perm: tuple[int, ...]
    angles: tuple[Fraction, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise ValueError(f"perm {self.perm} is not a permutation of 0..{n - 1}")
        if len(self.angles) != n:
            raise ValueError("perm and angles must have the same length")
        object.__setattr__(self, "perm", tuple(int(i) for i in self.perm))
        object.__setattr__(self, "angles", tuple(qz(a) for a in self.angles))

    @property
    def n(self) -> int:
        return len(self.perm)

    def key(self) -> tuple:
        return (self.perm, tuple((a.numerator, a.denominator) for a in self.angles))

    def is_diagonal(self) -> bool:
        return self.perm == tuple(range(self.n))

    def __mul__(self, other: MonomialElement) -> MonomialElement:
        return multiply(self, other)

    def inverse(self) -> MonomialElement:
        perm = [0] * self.n
        angles = [Fraction(0)] * self.n
        for i, (p, a) in enumerate(zip(self.perm, self.angles)):
            perm[p] = i
            angles[p] = -a
        return MonomialElement(tuple(perm), tuple(angles))

    def cycles(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for i in range(self.n):
            if seen[i]:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.perm[j]
            out.append(cyc)
        return out

    def order(self) -> int:
        # on a cycle of length l the l-th power is the scalar with angle = cycle sum
        out = 1
        for cyc in self.cycles():
            s = qz(sum(self.angles[i] for i in cyc))
            out = lcm(out, len(cyc) * s.denominator)
        return out

    def __str__(self) -> str:
        angs = ", ".join(_fmt(a) for a in self.angles)
        if self.is_diagonal():
            return f"diag({angs})"
        return f"mono(perm = [{', '.join(map(str, self.perm))}]; angles = [{angs}])"


def _fmt(a: Fraction) -> str:
    return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


def identity(n: int) -> MonomialElement:
    return MonomialElement(tuple(range(n)), (Fraction(0),) * n)


def diag(*angles) -> MonomialElement:
    return MonomialElement(tuple(range(len(angles))), tuple(Fraction(a) for a in angles))


def mono(perm: Sequence[int], angles: Sequence) -> MonomialElement:
    return MonomialElement(tuple(perm), tuple(Fraction(a) for a in angles))


def cyclic_generator(r: int, weights: Sequence[int]) -> MonomialElement:
    """The generator of the cyclic quotient ``1/r(w_1, ..., w_n)``."""
    return diag(*(Fraction(w, r) for w in weights))


def multiply(g: MonomialElement, h: MonomialElement) -> MonomialElement:
    """Matrix product ``g h``."""
    if g.n != h.n:
        raise ValueError(f"dimension mismatch: {g.n} vs {h.n}")
    perm = tuple(g.perm[h.perm[i]] for i in range(g.n))
    angles = tuple(h.angles[i] + g.angles[h.perm[i]] for i in range(g.n))
    return MonomialElement(perm, angles)


def eigen_angles(g: MonomialElement) -> list[Fraction]:
    """Eigenvalue angles with multiplicity, sorted ascending."""
    out = []
    for cyc in g.cycles():
        ell = len(cyc)
        s = sum(g.angles[i] for i in cyc)
        out.extend(qz((s + j) / ell) for j in range(ell))
    return sorted(out)


def age(g: MonomialElement) -> Fraction:
    return sum(eigen_angles(g), Fraction(0))


def shift_w(g: MonomialElement, m: int) -> Fraction:
    """Degree-shifting number ``sum_k (1 - k/m) * mult(k/m)`` over nonzero angles k/m.

    Equals ``age(g.inverse())``.
    """
    if m % g.order() != 0:
        raise ValueError(f"element order {g.order()} does not divide m = {m}")
    total = Fraction(0)
    for theta in eigen_angles(g):
        if theta:
            k = theta * m
            assert k.denominator == 1
            total += 1 - Fraction(int(k), m)
    return total


def fixed_dim(g: MonomialElement) -> int:
    return sum(1 for a in eigen_angles(g) if a == 0)


@dataclass(frozen=True)
class ConjugacyClass:
    representative: MonomialElement
    members: tuple[MonomialElement, ...]
    centralizer_order: int

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class MonomialGroup:
    n: int
    elements: tuple[MonomialElement, ...]
    generators: tuple[MonomialElement, ...]
    m: int
    _index: dict = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {g.key(): i for i, g in enumerate(self.elements)})

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g: MonomialElement) -> bool:
        return g.key() in self._index

    def index(self, g: MonomialElement) -> int:
        return self._index[g.key()]

    def is_abelian(self) -> bool:
        return all(a * b == b * a for a in self.generators for b in self.generators)

    def is_diagonal(self) -> bool:
        return all(g.is_diagonal() for g in self.elements)


def close_group(
    n: int, generators: Iterable[MonomialElement], cap: int | None = None
) -> MonomialGroup:
    """Breadth-first closure of ``generators`` under multiplication."""
    cap = default_cap() if cap is None else cap
    if cap < 1:
        raise ValueError("cap must be at least 1")
    gens = tuple(generators)
    for g in gens:
        if g.n != n:
            raise ValueError(f"generator {g} has dimension {g.n}, expected {n}")
    e = identity(n)
    seen = {e.key(): e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            k = y.key()
            if k not in seen:
                seen[k] = y
                if len(seen) > cap:
                    raise GroupTooLargeError(cap)
                queue.append(y)
    elements = tuple(seen[k] for k in sorted(seen))
    m = lcm(*(g.order() for g in elements))
    return MonomialGroup(n, elements, gens, m)


def conjugacy_classes(G: MonomialGroup) -> list[ConjugacyClass]:
    """Conjugation orbits, ordered by their minimal-key representatives."""
    conj_by = [(g, g.inverse()) for g in G.generators]
    assigned: set = set()
    classes = []
    for x in G.elements:
        if x.key() in assigned:
            continue
        orbit = {x.key(): x}
        queue = deque([x])
        while queue:
            y = queue.popleft()
            for g, gi in conj_by:
                z = gi * y * g
                if z.key() not in orbit:
                    orbit[z.key()] = z
                    queue.append(z)
        assigned.update(orbit)
        members = tuple(orbit[k] for k in sorted(orbit))
        classes.append(ConjugacyClass(members[0], members, G.order // len(members)))
    return classes


def is_sl(G: MonomialGroup) -> bool:
    return all(age(g).denominator == 1 for g in G.elements)


_FRAC = r"-?\d+(?:/0*[1-9]\d*)?"


def _fractions(text: str) -> list[Fraction]:
    items = [t.strip() for t in text.split(",") if t.strip()]
    out = []
    for t in items:
        if not re.fullmatch(_FRAC, t):
            raise ValueError(f"malformed fraction {t!r}")
        out.append(Fraction(t))
    return out


def parse_generator(text: str) -> MonomialElement:
    """Parse ``diag(...)``, ``mono(perm = [...]; angles = [...])`` or ``cyclic r : w1, ...``."""
    s = text.strip()
    if mt := re.fullmatch(r"diag\s*\((.*)\)", s):
        return diag(*_fractions(mt.group(1)))
    if mt := re.fullmatch(
        r"mono\s*\(\s*perm\s*=\s*\[(.*?)\]\s*;\s*angles\s*=\s*\[(.*?)\]\s*\)", s
    ):
        perm = [int(x) for x in _fractions(mt.group(1))]
        return mono(perm, _fractions(mt.group(2)))
    if mt := re.fullmatch(r"cyclic\s+(\d+)\s*:\s*(.*)", s):
        r = int(mt.group(1))
        if r < 1:
            raise ValueError("cyclic order must be positive")
        return cyclic_generator(r, [int(w) for w in _fractions(mt.group(2))])
    raise ValueError(f"cannot parse generator {text!r}")
