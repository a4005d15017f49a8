"""Finite groupoids given by explicit arrow tables.

Composition is diagrammatic: ``compose[(a, b)]`` is "a then b" and is defined
exactly when ``target(a) == source(b)``; its source is ``source(a)`` and its
target is ``target(b)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Hashable, Sequence

from .qz_groups import MonomialGroup


@dataclass(frozen=True)
class Arrow:
    id: int
    source: Hashable
    target: Hashable
    label: Hashable = None


@dataclass(frozen=True)
class FiniteGroupoid:
    objects: tuple
    arrows: tuple[Arrow, ...]
    compose: dict  # (arrow id, arrow id) -> arrow id
    identities: dict  # object -> arrow id
    inverses: dict  # arrow id -> arrow id

    def arrow(self, i: int) -> Arrow:
        return self.arrows[i]

    def loops(self) -> list[Arrow]:
        return [a for a in self.arrows if a.source == a.target]

    def hom(self, x, y) -> list[Arrow]:
        return [a for a in self.arrows if a.source == x and a.target == y]


@dataclass(frozen=True)
class GroupTable:
    """An abstract finite group: element labels plus a multiplication table."""

    elements: tuple
    table: dict  # (g, h) -> g*h
    identity: Hashable

    def mul(self, g, h):
        return self.table[(g, h)]

    def inverse(self, g):
        return next(h for h in self.elements if self.table[(g, h)] == self.identity)

    @classmethod
    def from_function(cls, elements: Sequence, mul: Callable) -> GroupTable:
        elements = tuple(elements)
        table = {(g, h): mul(g, h) for g in elements for h in elements}
        ident = next(
            e for e in elements if all(table[(e, g)] == g == table[(g, e)] for g in elements)
        )
        return cls(elements, table, ident)

    @classmethod
    def from_monomial_group(cls, G: MonomialGroup) -> GroupTable:
        return cls.from_function(range(G.order), lambda i, j: G.index(G.elements[i] * G.elements[j]))


def _compose_perm(p, q):
    # p after q, as permutations of range(n)
    return tuple(p[q[i]] for i in range(len(q)))


def cyclic_table(n: int) -> GroupTable:
    return GroupTable.from_function(range(n), lambda a, b: (a + b) % n)


def symmetric_table(n: int) -> GroupTable:
    return GroupTable.from_function(sorted(permutations(range(n))), _compose_perm)


def dihedral_table(n: int) -> GroupTable:
    """Symmetries of a regular n-gon as permutations of its vertices."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    elems = {tuple(range(n))}
    frontier = list(elems)
    while frontier:
        x = frontier.pop()
        for g in (rot, ref):
            y = _compose_perm(g, x)
            if y not in elems:
                elems.add(y)
                frontier.append(y)
    return GroupTable.from_function(sorted(elems), _compose_perm)


def conjugacy_class_count(H: GroupTable) -> int:
    """Brute-force count of conjugacy classes, independent of any groupoid machinery."""
    seen = set()
    count = 0
    for x in H.elements:
        if x in seen:
            continue
        count += 1
        for g in H.elements:
            seen.add(H.mul(H.mul(H.inverse(g), x), g))
    return count


class GroupActionError(ValueError):
    pass


def action_groupoid(
    points: Sequence,
    group: GroupTable | MonomialGroup,
    action: Callable,
    samples: int = 200,
    seed: int = 0,
) -> FiniteGroupoid:
    """Objects are the points; an arrow ``(g, x)`` goes from ``x`` to ``g . x``.

    ``(g, x)`` then ``(h, g.x)`` composes to ``(h g, x)``.
    """
    if isinstance(group, MonomialGroup):
        group = GroupTable.from_function(group.elements, lambda a, b: a * b)
    points = tuple(points)
    pts = set(points)
    for x in points:
        if action(group.identity, x) != x:
            raise GroupActionError(f"identity moves point {x!r}")
        for g in group.elements:
            if action(g, x) not in pts:
                raise GroupActionError(f"{g!r} sends {x!r} outside the point set")
    rng = random.Random(seed)
    triples = [(g, h, x) for g in group.elements for h in group.elements for x in points]
    if len(triples) > samples:
        triples = rng.sample(triples, samples)
    for g, h, x in triples:
        if action(group.mul(h, g), x) != action(h, action(g, x)):
            raise GroupActionError(f"compatibility fails for ({h!r}, {g!r}) at {x!r}")

    arrows = []
    index = {}
    for g in group.elements:
        for x in points:
            a = Arrow(len(arrows), x, action(g, x), (g, x))
            index[(g, x)] = a.id
            arrows.append(a)
    compose = {}
    for a in arrows:
        g, x = a.label
        for h in group.elements:
            b = index[(h, a.target)]
            compose[(a.id, b)] = index[(group.mul(h, g), x)]
    identities = {x: index[(group.identity, x)] for x in points}
    inverses = {a.id: index[(group.inverse(a.label[0]), a.target)] for a in arrows}
    return FiniteGroupoid(points, tuple(arrows), compose, identities, inverses)


def inertia(G: FiniteGroupoid) -> FiniteGroupoid:
    """Objects: loops ``v``.  Arrows ``v -> w``: one per ``alpha`` with ``v alpha = alpha w``."""
    loops = [a.id for a in G.loops()]
    by_source: dict = {}
    for a in G.arrows:
        by_source.setdefault(a.source, []).append(a)
    arrows = []
    index = {}
    for v in loops:
        x = G.arrows[v].source
        for alpha in by_source.get(x, []):
            y = alpha.target
            va = G.compose[(v, alpha.id)]
            # w is the unique loop at y with alpha w = v alpha, i.e. w = alpha^-1 v alpha
            w = G.compose[(G.inverses[alpha.id], va)]
            assert G.arrows[w].source == y == G.arrows[w].target
            arr = Arrow(len(arrows), v, w, alpha.id)
            index[(v, alpha.id)] = arr.id
            arrows.append(arr)
    compose = {}
    for a in arrows:
        for b in arrows:
            if a.target == b.source:
                compose[(a.id, b.id)] = index[(a.source, G.compose[(a.label, b.label)])]
    identities = {v: index[(v, G.identities[G.arrows[v].source])] for v in loops}
    inverses = {a.id: index[(a.target, G.inverses[a.label])] for a in arrows}
    return FiniteGroupoid(tuple(loops), tuple(arrows), compose, identities, inverses)


def pi0(G: FiniteGroupoid) -> list[list]:
    """Connected components, each sorted by object position, in order of first object."""
    parent = {x: x for x in G.objects}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in G.arrows:
        ra, rb = find(a.source), find(a.target)
        if ra != rb:
            parent[rb] = ra
    comps: dict = {}
    for x in G.objects:
        comps.setdefault(find(x), []).append(x)
    return list(comps.values())


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violation: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate(G: FiniteGroupoid) -> ValidationReport:
    """Exhaustively check the groupoid axioms; report the first violation."""
    objs = set(G.objects)
    out_of: dict = {}
    for a in G.arrows:
        if a.source not in objs or a.target not in objs:
            return ValidationReport(False, f"arrow {a.id} has an endpoint outside the objects")
        out_of.setdefault(a.source, []).append(a)
    for a in G.arrows:
        for b in out_of.get(a.target, []):
            c = G.compose.get((a.id, b.id))
            if c is None:
                return ValidationReport(False, f"composite of arrows {a.id} and {b.id} missing")
            if G.arrows[c].source != a.source or G.arrows[c].target != b.target:
                return ValidationReport(False, f"composite of arrows {a.id} and {b.id} has wrong endpoints")
    for (i, j) in G.compose:
        if G.arrows[i].target != G.arrows[j].source:
            return ValidationReport(False, f"composite defined for non-composable arrows {i}, {j}")
    for x in G.objects:
        e = G.identities.get(x)
        if e is None or G.arrows[e].source != x or G.arrows[e].target != x:
            return ValidationReport(False, f"identity at object {x!r} missing or not a loop")
    for a in G.arrows:
        if G.compose[(G.identities[a.source], a.id)] != a.id:
            return ValidationReport(False, f"left identity law fails for arrow {a.id}")
        if G.compose[(a.id, G.identities[a.target])] != a.id:
            return ValidationReport(False, f"right identity law fails for arrow {a.id}")
        inv = G.inverses.get(a.id)
        if (
            inv is None
            or G.arrows[inv].source != a.target
            or G.arrows[inv].target != a.source
            or G.compose[(a.id, inv)] != G.identities[a.source]
            or G.compose[(inv, a.id)] != G.identities[a.target]
        ):
            return ValidationReport(False, f"inverse law fails for arrow {a.id}")
    for a in G.arrows:
        for b in out_of.get(a.target, []):
            ab = G.compose[(a.id, b.id)]
            for c in out_of.get(b.target, []):
                if G.compose[(ab, c.id)] != G.compose[(a.id, G.compose[(b.id, c.id)])]:
                    return ValidationReport(
                        False, f"associativity fails for arrows {a.id}, {b.id}, {c.id}"
                    )
    return ValidationReport(True)
