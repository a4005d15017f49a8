"""Simplicial fans in refined lattices, box elements and toric E-polynomials.

A fan lives in a lattice ``N`` with ``Z^n <= N <= Q^n``.  Rays are given in
ambient rational coordinates and stored both that way and as primitive
integer vectors in a fixed basis of ``N``; every computation below runs on
the integer coordinates.

The stringy E-polynomial of a simplicial fan is

    sum over cones s of (uv - 1)^(n - dim s) * sum over box points v of s of (uv)^age(v)

where the box of ``s`` is the set of lattice points ``sum q_i r_i`` with
``0 <= q_i < 1`` and ``age(v) = sum q_i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from math import gcd, prod
from typing import Iterable, Sequence

from . import _linalg as la
from .epoly import ONE, L, MotivicClass, tate_sum
from .triangulate import triangulate_segment, triangulate_triangle

MAX_DENOMINATOR = 10**9
DEFAULT_BOX_CAP = 10**6


class FanError(ValueError):
    pass


class NonUnimodularError(AssertionError):
    pass


# ---------------------------------------------------------------- lattices


@dataclass(frozen=True)
class RefinedLattice:
    """The lattice spanned by the columns of ``basis`` (an n x n rational matrix)."""

    rank: int
    basis: tuple[tuple[Fraction, ...], ...]  # rows of the matrix; columns are basis vectors

    @cached_property
    def _inverse(self) -> list[list[Fraction]]:
        return la.inverse(self.basis)

    def coords(self, v: Sequence) -> list[Fraction]:
        """Coordinates of an ambient vector in the lattice basis."""
        return la.matvec(self._inverse, [Fraction(x) for x in v])

    def contains(self, v: Sequence) -> bool:
        return la.is_integral(self.coords(v))

    def to_ambient(self, c: Sequence[int]) -> tuple[Fraction, ...]:
        return tuple(Fraction(x) for x in la.matvec(self.basis, c))

    @property
    def covolume(self) -> Fraction:
        """Determinant of the basis, i.e. ``1 / [N : Z^n]``."""
        return la.det(self.basis)

    def basis_vectors(self) -> list[tuple[Fraction, ...]]:
        return [tuple(col) for col in la.transpose(self.basis)]


def standard_lattice(n: int) -> RefinedLattice:
    return RefinedLattice(n, tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))


def lattice_from_generators(n: int, gens: Iterable[Sequence]) -> RefinedLattice:
    """Lattice generated by ``Z^n`` and rational vectors ``gens``.

    The basis is the column Hermite normal form of the denominator-cleared
    generator matrix, scaled back, so equal lattices get equal bases.
    """
    gens = [tuple(Fraction(x) for x in g) for g in gens]
    for g in gens:
        if len(g) != n:
            raise ValueError(f"generator {g} does not have length {n}")
        if any(x.denominator > MAX_DENOMINATOR for x in g):
            raise ValueError(f"generator {g} has a denominator above {MAX_DENOMINATOR}")
    d = la.lcm(1, *(x.denominator for g in gens for x in g))
    cols = [[d * int(i == j) for i in range(n)] for j in range(n)]
    cols += [[int(x * d) for x in g] for g in gens]
    h, _ = la.hnf_columns(la.transpose(cols))
    basis = tuple(tuple(Fraction(h[i][j], d) for j in range(n)) for i in range(n))
    return RefinedLattice(n, basis)


# ---------------------------------------------------------------- cones and fans


@dataclass(frozen=True, order=True)
class Cone:
    ray_indices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ray_indices", tuple(sorted(self.ray_indices)))

    @property
    def dim(self) -> int:
        return len(self.ray_indices)

    def faces(self) -> list[Cone]:
        return [Cone(c) for k in range(self.dim + 1) for c in combinations(self.ray_indices, k)]

    def label(self) -> str:
        return "cone(" + ",".join(map(str, self.ray_indices)) + ")"


@dataclass(frozen=True)
class BoxElement:
    cone: Cone
    point: tuple[Fraction, ...]  # ambient coordinates
    lattice_point: tuple[int, ...]
    coefficients: tuple[Fraction, ...]  # q_i against cone.ray_indices
    age: Fraction


@dataclass(frozen=True)
class Fan:
    lattice: RefinedLattice
    rays: tuple[tuple[Fraction, ...], ...]
    maximal_cones: tuple[Cone, ...]
    int_rays: tuple[tuple[int, ...], ...] = field(repr=False, default=())

    @property
    def rank(self) -> int:
        return self.lattice.rank

    @cached_property
    def all_cones(self) -> tuple[Cone, ...]:
        faces = {f for c in self.maximal_cones for f in c.faces()}
        faces.add(Cone(()))
        return tuple(sorted(faces, key=lambda c: (c.dim, c.ray_indices)))

    def ray_matrix(self, cone: Cone) -> list[tuple[int, ...]]:
        return [self.int_rays[i] for i in cone.ray_indices]


def make_fan(
    lattice: RefinedLattice,
    rays: Iterable[Sequence],
    cones: Iterable[Iterable[int]],
    validate: bool = True,
) -> Fan:
    """Build a fan; rays are normalized to primitive lattice vectors."""
    int_rays = []
    for r in rays:
        r = [Fraction(x) for x in r]
        if len(r) != lattice.rank:
            raise FanError(f"ray {r} does not have length {lattice.rank}")
        if not any(r):
            raise FanError("zero ray")
        int_rays.append(la.clear_denominators(lattice.coords(r)))
    if len(set(int_rays)) != len(int_rays):
        raise FanError("two rays have the same primitive generator")
    cone_set = []
    for c in cones:
        c = Cone(tuple(c))
        if len(set(c.ray_indices)) != c.dim:
            raise FanError(f"{c.label()} repeats a ray")
        if any(i < 0 or i >= len(int_rays) for i in c.ray_indices):
            raise FanError(f"{c.label()} refers to a missing ray")
        cone_set.append(c)
    # drop cones that are faces of others
    cone_set = sorted(set(cone_set))
    maximal = [
        c for c in cone_set
        if not any(c != d and set(c.ray_indices) <= set(d.ray_indices) for d in cone_set)
    ]
    fan = Fan(
        lattice,
        tuple(lattice.to_ambient(r) for r in int_rays),
        tuple(maximal),
        tuple(int_rays),
    )
    if validate:
        validate_fan(fan)
    return fan


def validate_fan(fan: Fan) -> None:
    """Simpliciality, and that any two maximal cones meet in a common face."""
    for c in fan.maximal_cones:
        if c.dim and la.rank(fan.ray_matrix(c)) != c.dim:
            raise FanError(f"{c.label()} is not simplicial")
    for s, t in combinations(fan.maximal_cones, 2):
        if _cones_overlap(fan, s, t):
            raise FanError(f"{s.label()} and {t.label()} do not meet in a common face")


def _cones_overlap(fan: Fan, s: Cone, t: Cone) -> bool:
    common = set(s.ray_indices) & set(t.ray_indices)
    xs = [fan.int_rays[i] for i in s.ray_indices if i not in common]
    ys = [fan.int_rays[i] for i in t.ray_indices if i not in common]
    if not xs or not ys:
        return False
    # project modulo span of the common face
    annihilator = la.nullspace([fan.int_rays[i] for i in sorted(common)], fan.rank)
    cols = [la.matvec(annihilator, x) for x in xs] + [
        [-v for v in la.matvec(annihilator, y)] for y in ys
    ]
    # is there a nonzero nonnegative combination of cols summing to zero?
    # Extreme rays of that cone have a minimal support with 1-dim kernel.
    k = len(cols)
    dim = len(annihilator)
    for size in range(1, min(k, dim + 1) + 1):
        for support in combinations(range(k), size):
            a = la.transpose([cols[j] for j in support])
            ker = la.nullspace(a, size) if a else [[Fraction(1)] * size]
            if len(ker) != 1:
                continue
            z = ker[0]
            if all(x > 0 for x in z) or all(x < 0 for x in z):
                return True
    return False


def cone_index(fan: Fan, cone: Cone) -> int:
    """Index of the sublattice spanned by the rays in the saturated lattice of their span."""
    if cone.dim == 0:
        return 1
    m = fan.ray_matrix(cone)
    g = 0
    for cols in combinations(range(fan.rank), cone.dim):
        g = gcd(g, int(la.det([[row[j] for j in cols] for row in m])))
    if g == 0:
        raise FanError(f"{cone.label()} is not simplicial")
    return g


def box_elements(fan: Fan, cone: Cone, cap: int = DEFAULT_BOX_CAP) -> list[BoxElement]:
    """Lattice points of the half-open parallelepiped of ``cone``, sorted by (age, point)."""
    k = cone.dim
    if k == 0:
        zero = tuple([0] * fan.rank)
        return [BoxElement(cone, fan.lattice.to_ambient(zero), zero, (), Fraction(0))]
    m = fan.ray_matrix(cone)
    # m @ u = [h | 0]; the first k columns of h express the rays in a basis
    # of the saturation of their span
    h, _ = la.hnf_columns(m)
    hk = [row[:k] for row in h]
    diag = [hk[i][i] for i in range(k)]
    if any(d <= 0 for d in diag):
        raise FanError(f"{cone.label()} is not simplicial")
    if prod(diag) > cap:
        raise ValueError(f"box of {cone.label()} has {prod(diag)} points, above the cap {cap}")
    hinv = la.inverse(hk)
    out = []
    for x in product(*(range(d) for d in diag)):
        q = [sum(x[i] * hinv[i][j] for i in range(k)) for j in range(k)]
        q = [c - (c.numerator // c.denominator) for c in q]
        pt = [sum(q[j] * m[j][t] for j in range(k)) for t in range(fan.rank)]
        assert la.is_integral(pt)
        lp = tuple(int(v) for v in pt)
        out.append(
            BoxElement(cone, fan.lattice.to_ambient(lp), lp, tuple(q), sum(q, Fraction(0)))
        )
    out.sort(key=lambda b: (b.age, b.lattice_point))
    return out


def is_gorenstein_cone(fan: Fan, cone: Cone) -> bool:
    """True iff the functional equal to 1 on the rays is integral on the lattice."""
    return all(b.age.denominator == 1 for b in box_elements(fan, cone))


def is_gorenstein(fan: Fan) -> bool:
    return all(is_gorenstein_cone(fan, c) for c in fan.maximal_cones)


def gorenstein_functional(fan: Fan, cone: Cone) -> list[Fraction]:
    """The covector (in lattice coordinates) equal to 1 on the rays of a full-dimensional cone."""
    if cone.dim != fan.rank:
        raise FanError(f"{cone.label()} is not full-dimensional")
    x = la.solve(fan.ray_matrix(cone), [1] * cone.dim)
    assert x is not None
    return x


def is_smooth(fan: Fan) -> bool:
    return all(cone_index(fan, c) == 1 for c in fan.maximal_cones)


def is_complete(fan: Fan) -> bool:
    """Pure full-dimensional fan whose codimension-one cones each lie in exactly two maximal cones."""
    n = fan.rank
    if not fan.maximal_cones or any(c.dim != n for c in fan.maximal_cones):
        return False
    count: dict[tuple[int, ...], int] = {}
    for c in fan.maximal_cones:
        for f in combinations(c.ray_indices, n - 1):
            count[f] = count.get(f, 0) + 1
    return all(v == 2 for v in count.values())


def _orbit_factor(n: int, dim: int) -> MotivicClass:
    return (L - ONE) ** (n - dim)


def epoly_of_fan(fan: Fan) -> MotivicClass:
    """``sum over cones of (uv - 1)^(n - dim)``: the orbit decomposition."""
    total = MotivicClass()
    for c in fan.all_cones:
        total = total + _orbit_factor(fan.rank, c.dim)
    return total


def stringy_epoly(fan: Fan) -> MotivicClass:
    total = MotivicClass()
    for c in fan.all_cones:
        ages = [b.age for b in box_elements(fan, c)]
        total = total + _orbit_factor(fan.rank, c.dim) * tate_sum(ages)
    return total


# ---------------------------------------------------------------- crepant resolution


def junior_points(fan: Fan, cone: Cone) -> list[BoxElement]:
    """Box elements of age exactly one: the non-vertex lattice points of the height-one slice."""
    return [b for b in box_elements(fan, cone) if b.age == 1]


def crepant_resolve(fan: Fan, reverse: bool = False, delaunay: bool = True) -> Fan:
    """Crepant toric resolution of a Gorenstein simplicial fan of rank <= 3.

    Every maximal cone is subdivided by triangulating all lattice points of
    its height-one slice.  A triangulation that uses every lattice point
    restricts on each shared face to the unique subdivision of that segment
    into unit pieces, so neighbouring cones agree without coordination.

    ``reverse`` inverts the insertion order of the placing triangulation and
    ``delaunay`` toggles the flip pass; the defaults give the canonical result.
    """
    if fan.rank > 3:
        raise FanError("crepant resolution is only supported in rank <= 3")
    for c in fan.maximal_cones:
        if not is_gorenstein_cone(fan, c):
            raise FanError(f"{c.label()} is not Gorenstein; no crepant resolution")

    per_cone = {c: junior_points(fan, c) for c in fan.maximal_cones}
    new_pts = sorted({b.lattice_point for pts in per_cone.values() for b in pts})
    rays = list(fan.int_rays) + [p for p in new_pts if p not in set(fan.int_rays)]
    ray_id = {r: i for i, r in enumerate(rays)}

    cones: set[tuple[int, ...]] = set()
    for c, pts in per_cone.items():
        ids = list(c.ray_indices) + [ray_id[b.lattice_point] for b in pts]
        # barycentric coordinates against the cone's rays
        bary = [tuple(Fraction(int(i == j)) for j in range(c.dim)) for i in range(c.dim)]
        bary += [b.coefficients for b in pts]
        order = sorted(range(len(ids)), key=lambda i: rays[ids[i]], reverse=reverse)
        if c.dim <= 1:
            cones.add(tuple(ids))
        elif c.dim == 2:
            for i, j in triangulate_segment([q[0] for q in bary]):
                cones.add(tuple(sorted((ids[i], ids[j]))))
        else:
            pts2 = [(q[0], q[1]) for q in bary]
            for t in triangulate_triangle(pts2, order, delaunay=delaunay):
                cones.add(tuple(sorted(ids[i] for i in t)))

    out = make_fan(
        fan.lattice, [fan.lattice.to_ambient(r) for r in rays], sorted(cones), validate=False
    )
    for c in out.maximal_cones:
        if cone_index(out, c) != 1:
            raise NonUnimodularError(f"non-unimodular triangulation: {c.label()}")
    return out


# ---------------------------------------------------------------- standard fans


def orthant_fan(lattice: RefinedLattice) -> Fan:
    """The positive orthant (rays e_1..e_n, one cone) over a refined lattice."""
    n = lattice.rank
    rays = [[int(i == j) for j in range(n)] for i in range(n)]
    return make_fan(lattice, rays, [range(n)])


def wps_fan(weights: Sequence[int]) -> Fan:
    """Complete fan of the weighted projective space with the given coprime weights.

    The lattice is ``Z^(n+1) / Z w`` written in a basis obtained from a
    unimodular matrix sending ``w`` to ``e_0``.
    """
    w = [int(x) for x in weights]
    if len(w) < 2 or any(x <= 0 for x in w):
        raise ValueError("weights must be at least two positive integers")
    g = 0
    for x in w:
        g = gcd(g, x)
    if g != 1:
        raise ValueError(f"weights {tuple(w)} are not coprime")
    h, u = la.hnf_columns([w])
    assert h[0][0] == 1
    v = la.transpose(u)  # v @ w = e_0
    n = len(w) - 1
    rays = [[v[i][j] for i in range(1, n + 1)] for j in range(n + 1)]
    cones = [c for c in combinations(range(n + 1), n)]
    return make_fan(standard_lattice(n), rays, cones)


# ---------------------------------------------------------------- text format


def _fmt(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _rationals(text: str) -> list[Fraction]:
    out = []
    for t in text.split(","):
        t = t.strip()
        if not re.fullmatch(r"-?\d+(?:/0*[1-9]\d*)?", t):
            raise ValueError(f"malformed rational {t!r}")
        out.append(Fraction(t))
    return out


def render_fan(fan: Fan) -> str:
    lines = [f"rank = {fan.rank}"]
    for col in fan.lattice.basis_vectors():
        if any(x.denominator != 1 for x in col):
            lines.append("latgen = " + ", ".join(_fmt(x) for x in col))
    for r in fan.rays:
        lines.append("ray = " + ", ".join(_fmt(x) for x in r))
    for c in fan.maximal_cones:
        lines.append("cone = " + ", ".join(map(str, c.ray_indices)))
    return "\n".join(lines) + "\n"


def fan_from_entries(entries: Sequence[tuple[int, str, str]]) -> Fan:
    """Build a fan from parsed ``(line, key, value)`` entries (keys rank/latgen/ray/cone)."""
    rank = None
    latgens, rays, cones = [], [], []
    for lineno, key, value in entries:
        try:
            if key == "rank":
                rank = int(value)
            elif key == "latgen":
                latgens.append(_rationals(value))
            elif key == "ray":
                rays.append(_rationals(value))
            elif key == "cone":
                cones.append([int(x) for x in _rationals(value)])
        except ValueError as exc:
            raise FanError(f"line {lineno}: key {key!r}: {exc}") from None
    if rank is None:
        raise FanError("toric model requires a 'rank' key")
    if not rays:
        raise FanError("toric model requires at least one ray")
    if not cones:
        raise FanError("toric model requires at least one cone")
    return make_fan(lattice_from_generators(rank, latgens), rays, cones)


def parse_fan(text: str) -> Fan:
    entries = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise FanError(f"line {lineno}: expected 'key = value'")
        entries.append((lineno, key.strip(), value.strip()))
    return fan_from_entries(entries)
