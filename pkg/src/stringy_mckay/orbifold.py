"""Twisted-sector sums and McKay checks for concrete orbifold models.

Three kinds of model are supported: a linear quotient ``C^n / G`` by a
monomial group, a simplicial toric orbifold given by a fan, and a weighted
projective space.  For each, :func:`orbifold_epoly` sums

    E(X^a) * (uv)^w(a)

over twisted sectors ``a``, and :func:`verify_mckay` compares the result with
the E-polynomial of a crepant toric resolution when one can be built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence, Union

from . import toric
from .epoly import (
    MotivicClass,
    NonIntegralClassError,
    euler_characteristic,
    hodge_numbers,
    tate_power,
    tate_sum,
)
from .qz_groups import (
    MonomialGroup,
    conjugacy_classes,
    fixed_dim,
    is_sl,
    qz,
    shift_w,
)

LOCAL_NOTE = "local model - completeness hypothesis not satisfied"


@dataclass(frozen=True)
class LocalQuotient:
    group: MonomialGroup
    name: str = ""

    def describe(self) -> str:
        return self.name or f"C^{self.group.n}/G, |G| = {self.group.order}"


@dataclass(frozen=True)
class Toric:
    fan: toric.Fan
    name: str = ""

    def describe(self) -> str:
        return self.name or f"toric rank {self.fan.rank}, {len(self.fan.maximal_cones)} maximal cones"


@dataclass(frozen=True)
class WeightedProjective:
    weights: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        _check_weights(self.weights)

    def describe(self) -> str:
        return self.name or "WP(" + ",".join(map(str, self.weights)) + ")"


OrbifoldModel = Union[LocalQuotient, Toric, WeightedProjective]


@dataclass(frozen=True)
class Sector:
    label: str
    fixed_epoly: MotivicClass
    shift: Fraction

    @property
    def term(self) -> MotivicClass:
        return self.fixed_epoly * tate_power(self.shift)


def _check_weights(weights: Sequence[int]) -> None:
    from math import gcd

    if len(weights) < 2 or any(w <= 0 for w in weights):
        raise ValueError("weights must be at least two positive integers")
    g = 0
    for w in weights:
        g = gcd(g, w)
    if g != 1:
        raise ValueError(f"weights {tuple(weights)} are not coprime")


def sectors_local_quotient(G: MonomialGroup) -> list[Sector]:
    """One sector per conjugacy class ``(g)``: ``(uv)^dim Fix(g)`` shifted by ``w(g^-1) = age(g)``."""
    out = []
    for cls in conjugacy_classes(G):
        g = cls.representative
        out.append(
            Sector(str(g), tate_power(fixed_dim(g)), shift_w(g.inverse(), G.m))
        )
    return out


def sectors_wps(weights: Sequence[int]) -> list[Sector]:
    """Sectors of a weighted projective space, indexed by angles ``t`` in [0, 1).

    ``t`` contributes when ``t * w_i`` is an integer for some ``i``; the fixed
    locus is the weighted projective subspace on those coordinates.
    """
    weights = [int(w) for w in weights]
    _check_weights(weights)
    thetas = sorted({Fraction(k, w) for w in weights for k in range(w)})
    out = []
    for t in thetas:
        fixed = [i for i, w in enumerate(weights) if (t * w).denominator == 1]
        shift = sum((qz(t * w) for i, w in enumerate(weights) if i not in fixed), Fraction(0))
        label = f"theta={t.numerator}/{t.denominator}" if t else "theta=0"
        out.append(Sector(label, tate_sum(range(len(fixed))), shift))
    return out


def sectors_toric(fan: toric.Fan) -> list[Sector]:
    """Sectors of a toric orbifold: one per (cone, box element), over the orbit closure's open part."""
    out = []
    for c in fan.all_cones:
        orbit = (tate_power(1) - tate_power(0)) ** (fan.rank - c.dim)
        for b in toric.box_elements(fan, c):
            pt = ",".join(_fmt(x) for x in b.point)
            out.append(Sector(f"{c.label()}:({pt})", orbit, b.age))
    return out


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def sectors(model: OrbifoldModel) -> list[Sector]:
    if isinstance(model, LocalQuotient):
        return sectors_local_quotient(model.group)
    if isinstance(model, WeightedProjective):
        return sectors_wps(model.weights)
    if isinstance(model, Toric):
        return sectors_toric(model.fan)
    raise TypeError(f"unknown model {model!r}")


def assemble(secs: Sequence[Sector]) -> MotivicClass:
    total = MotivicClass()
    for s in secs:
        total = total + s.term
    return total


def orbifold_epoly(model: OrbifoldModel) -> MotivicClass:
    if isinstance(model, Toric):
        return toric.stringy_epoly(model.fan)
    return assemble(sectors(model))


def model_m(model: OrbifoldModel) -> int:
    """An integer m such that every local isotropy order divides m."""
    if isinstance(model, LocalQuotient):
        return model.group.m
    if isinstance(model, WeightedProjective):
        return lcm(*model.weights)
    return lcm(*(toric.cone_index(model.fan, c) for c in model.fan.maximal_cones))


def is_complete(model: OrbifoldModel) -> bool:
    if isinstance(model, WeightedProjective):
        return True
    if isinstance(model, Toric):
        return toric.is_complete(model.fan)
    return False


def is_gorenstein(model: OrbifoldModel) -> bool:
    if isinstance(model, LocalQuotient):
        return is_sl(model.group)
    if isinstance(model, WeightedProjective):
        return toric.is_gorenstein(toric.wps_fan(model.weights))
    return toric.is_gorenstein(model.fan)


def toric_model_fan(model: OrbifoldModel) -> toric.Fan | None:
    """The fan of a model when it is toric: abelian diagonal quotients, WPS, toric."""
    if isinstance(model, Toric):
        return model.fan
    if isinstance(model, WeightedProjective):
        return toric.wps_fan(model.weights)
    G = model.group
    if not G.is_diagonal():
        return None
    lattice = toric.lattice_from_generators(G.n, [g.angles for g in G.generators])
    return toric.orthant_fan(lattice)


# ---------------------------------------------------------------- reports


@dataclass
class VerificationReport:
    description: str
    orbifold_class: MotivicClass
    resolution_class: MotivicClass | None
    euler_orbifold: int
    euler_resolution: int | None
    hodge: dict | None
    note: str = ""
    sectors: list[Sector] = field(default_factory=list)
    complete: bool = False

    @property
    def equal(self) -> bool | None:
        """None when no resolution comparison was made."""
        if self.resolution_class is None:
            return None
        return self.orbifold_class.render() == self.resolution_class.render()

    @property
    def ok(self) -> bool:
        return self.equal is not False


def _hodge_or_note(cls: MotivicClass) -> tuple[dict | None, str]:
    try:
        return hodge_numbers(cls), ""
    except NonIntegralClassError as exc:
        return None, str(exc)


def _notes(*parts: str) -> str:
    return "; ".join(p for p in parts if p)


def verify_mckay(model: OrbifoldModel) -> VerificationReport:
    eorb = orbifold_epoly(model)
    secs = sectors(model)
    hodge, hnote = _hodge_or_note(eorb)
    complete = is_complete(model)
    cnote = "" if complete else LOCAL_NOTE
    eres = None
    rnote = ""
    if not is_gorenstein(model):
        rnote = "not Gorenstein (non-SL isotropy); resolution comparison skipped"
    else:
        fan = toric_model_fan(model)
        if fan is None:
            rnote = "nonabelian non-toric group; resolution comparison skipped"
        elif fan.rank > 3:
            rnote = "rank above 3; resolution comparison skipped"
        else:
            try:
                eres = toric.epoly_of_fan(toric.crepant_resolve(fan))
            except toric.FanError as exc:
                raise toric.FanError(f"{model.describe()}: resolution failed: {exc}") from exc
    return VerificationReport(
        description=model.describe(),
        orbifold_class=eorb,
        resolution_class=eres,
        euler_orbifold=euler_characteristic(eorb),
        euler_resolution=None if eres is None else euler_characteristic(eres),
        hodge=hodge,
        note=_notes(hnote, rnote, cnote),
        sectors=secs,
        complete=complete,
    )


def _common_height_functional(fans: Sequence[toric.Fan]) -> list[Fraction] | None:
    from . import _linalg as la

    rays = sorted({r for f in fans for r in f.int_rays})
    return la.solve(rays, [1] * len(rays))


def compare_k_equivalent(
    fan_a: toric.Fan, fan_b: toric.Fan, base: toric.Fan | None = None
) -> VerificationReport:
    """Compare E-polynomials of two smooth fans crepant over a common Gorenstein base.

    With ``base`` given, every maximal cone of either fan must sit inside a
    maximal cone of the base with all its rays at height one, and the cones
    inside each base cone must fill its volume.  Without a base, all rays
    must lie at height one for a single functional and both fans must have
    the same boundary (rank <= 3, where boundary facets are unit segments).
    """
    if fan_a.lattice != fan_b.lattice:
        raise ValueError("fans live in different lattices")
    for name, f in (("first", fan_a), ("second", fan_b)):
        if not toric.is_smooth(f):
            raise ValueError(f"{name} fan is not smooth")
    if base is not None:
        if base.lattice != fan_a.lattice:
            raise ValueError("base fan lives in a different lattice")
        for f in (fan_a, fan_b):
            _check_crepant_over(f, base)
    else:
        if _common_height_functional([fan_a, fan_b]) is None:
            raise ValueError("no common height-one functional; pass the base fan explicitly")
        if fan_a.rank > 3:
            raise ValueError("support comparison without a base is limited to rank <= 3")
        if _boundary(fan_a) != _boundary(fan_b):
            raise ValueError("fans have different supports")
    ea, eb = toric.epoly_of_fan(fan_a), toric.epoly_of_fan(fan_b)
    hodge, hnote = _hodge_or_note(ea)
    complete = toric.is_complete(fan_a)
    return VerificationReport(
        description="K-equivalent pair",
        orbifold_class=ea,
        resolution_class=eb,
        euler_orbifold=euler_characteristic(ea),
        euler_resolution=euler_characteristic(eb),
        hodge=hodge,
        note=_notes(hnote, "" if complete else LOCAL_NOTE),
        complete=complete,
    )


def _boundary(fan: toric.Fan) -> set:
    from itertools import combinations

    count: dict = {}
    for c in fan.maximal_cones:
        for f in combinations(c.ray_indices, c.dim - 1):
            key = frozenset(fan.int_rays[i] for i in f)
            count[key] = count.get(key, 0) + 1
    return {k for k, v in count.items() if v == 1}


def _check_crepant_over(fan: toric.Fan, base: toric.Fan) -> None:
    from . import _linalg as la

    volume = {c: 0 for c in base.maximal_cones}
    for c in fan.maximal_cones:
        rays = fan.ray_matrix(c)
        host = None
        for s in base.maximal_cones:
            m = la.transpose(base.ray_matrix(s))
            coeffs = [la.solve(m, r) for r in rays]
            if all(q is not None and min(q) >= 0 for q in coeffs):
                host = (s, coeffs)
                break
        if host is None:
            raise ValueError(f"{c.label()} is not contained in a cone of the base")
        s, coeffs = host
        if any(sum(q) != 1 for q in coeffs):
            raise ValueError(f"{c.label()} has a ray off the height-one slice of {s.label()}")
        if c.dim == s.dim:
            volume[s] += toric.cone_index(fan, c)
    for s, v in volume.items():
        if v != toric.cone_index(base, s):
            raise ValueError(f"cones over {s.label()} do not fill it")


@dataclass(frozen=True)
class Stratum:
    cone: str
    isotropy_order: int
    box_ages: tuple[Fraction, ...]


def stratify_by_isotropy(fan: toric.Fan) -> list[Stratum]:
    """One stratum per torus orbit, with its isotropy order and local sector ages."""
    strata = []
    total = MotivicClass()
    for c in fan.all_cones:
        ages = tuple(b.age for b in toric.box_elements(fan, c))
        strata.append(Stratum(c.label(), toric.cone_index(fan, c), ages))
        total = total + (tate_power(1) - tate_power(0)) ** (fan.rank - c.dim) * tate_sum(ages)
    assert total == orbifold_epoly(Toric(fan)), "stratum sum disagrees with the stringy E-polynomial"
    return strata


# ---------------------------------------------------------------- rendering


def render_sectors(secs: Sequence[Sector]) -> str:
    rows = [("sector", "E(X^a)", "shift")]
    rows += [(s.label, s.fixed_epoly.render(), _fmt(s.shift)) for s in secs]
    widths = [max(len(r[i]) for r in rows) for i in range(3)]
    return "\n".join(
        "  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows
    ) + "\n"


def render_report(rep: VerificationReport, fmt: str = "table") -> str:
    kv = [
        f"model = {rep.description}",
        f"eorb = {rep.orbifold_class.render()}",
        f"eres = {rep.resolution_class.render() if rep.resolution_class is not None else 'absent'}",
        f"equal = {_fmt_equal(rep.equal)}",
        f"chi_orb = {rep.euler_orbifold}",
        f"chi_res = {rep.euler_resolution if rep.euler_resolution is not None else 'absent'}",
        f"complete = {'true' if rep.complete else 'false'}",
    ]
    if rep.hodge is not None:
        kv.append(
            "hodge = " + ", ".join(f"h({p},{q})={c}" for (p, q), c in sorted(rep.hodge.items()))
        )
    if rep.note:
        kv.append(f"note = {rep.note}")
    text = "\n".join(kv) + "\n"
    if fmt == "table" and rep.sectors:
        text = render_sectors(rep.sectors) + "\n" + text
    return text


def _fmt_equal(eq: bool | None) -> str:
    return "skipped" if eq is None else ("true" if eq else "false")
