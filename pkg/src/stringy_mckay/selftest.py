"""Quick invariant checks runnable without pytest (``stringy-mckay selftest``)."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

from . import toric
from .catalog import abelian_diagonal_sl_groups, catalog_fans
from .epoly import MotivicClass, euler_characteristic, tate_power
from .groupoids import (
    GroupTable,
    action_groupoid,
    conjugacy_class_count,
    cyclic_table,
    dihedral_table,
    inertia,
    pi0,
    symmetric_table,
    validate,
)
from .orbifold import sectors_local_quotient
from .qz_groups import age, close_group, diag, fixed_dim, mono, shift_w


def random_class(rng: random.Random, max_terms: int = 8) -> MotivicClass:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        p = Fraction(rng.randint(0, 6), rng.randint(1, 3))
        q = Fraction(rng.randint(0, 6), rng.randint(1, 3))
        terms[(p, q)] = rng.randint(-5, 5)
    return MotivicClass.from_mapping(terms)


def check_ring_laws(rng: random.Random) -> bool:
    one = tate_power(0)
    for _ in range(50):
        a, b, c = (random_class(rng) for _ in range(3))
        if not (
            a + b == b + a
            and a * b == b * a
            and (a + b) + c == a + (b + c)
            and (a * b) * c == a * (b * c)
            and a * (b + c) == a * b + a * c
            and a * one == a
            and euler_characteristic(a * b) == euler_characteristic(a) * euler_characteristic(b)
        ):
            return False
    return True


def _catalog_groups():
    q8 = close_group(2, [diag(Fraction(1, 4), Fraction(3, 4)), mono([1, 0], [0, Fraction(1, 2)])])
    return [G for _, G in abelian_diagonal_sl_groups()] + [q8]


def check_group_axioms() -> bool:
    for G in _catalog_groups():
        elems = set(g.key() for g in G.elements)
        if any(g.inverse().key() not in elems for g in G.elements):
            return False
        if any((a * b).key() not in elems for a in G.elements[:20] for b in G.elements[:20]):
            return False
    return True


def check_shift_identities() -> bool:
    for G in _catalog_groups():
        for g in G.elements:
            if shift_w(g, G.m) != age(g.inverse()):
                return False
            if age(g) + age(g.inverse()) != G.n - fixed_dim(g):
                return False
    return True


def check_cross_oracle() -> bool:
    for _, G in abelian_diagonal_sl_groups():
        lattice = toric.lattice_from_generators(G.n, [g.angles for g in G.generators])
        box_sum = toric.stringy_epoly(toric.orthant_fan(lattice))
        sector_sum = MotivicClass()
        for s in sectors_local_quotient(G):
            sector_sum = sector_sum + s.term
        if box_sum != sector_sum:
            return False
    return True


def check_mckay() -> bool:
    return all(
        toric.stringy_epoly(f) == toric.epoly_of_fan(toric.crepant_resolve(f))
        for _, f in catalog_fans()
    )


def check_box_counts() -> bool:
    for _, f in catalog_fans():
        for c in f.all_cones:
            if len(toric.box_elements(f, c)) != toric.cone_index(f, c):
                return False
    return True


def check_pi0_conj() -> bool:
    q8 = close_group(2, [diag(Fraction(1, 4), Fraction(3, 4)), mono([1, 0], [0, Fraction(1, 2)])])
    tables = [cyclic_table(n) for n in range(1, 13)]
    tables += [symmetric_table(3), dihedral_table(4), GroupTable.from_monomial_group(q8)]
    for H in tables:
        I = inertia(action_groupoid(["*"], H, lambda g, x: x))
        if not validate(I) or len(pi0(I)) != conjugacy_class_count(H):
            return False
    return True


CHECKS: list[tuple[str, Callable[[], bool]]] = [
    ("epoly ring laws", lambda: check_ring_laws(random.Random(0))),
    ("group axioms", check_group_axioms),
    ("shift identities", check_shift_identities),
    ("box count = cone index", check_box_counts),
    ("sector sum = box sum", check_cross_oracle),
    ("McKay invariance", check_mckay),
    ("pi0(inertia) = Conj", check_pi0_conj),
]


def run_selftest() -> list[tuple[str, bool]]:
    return [(name, bool(fn())) for name, fn in CHECKS]
