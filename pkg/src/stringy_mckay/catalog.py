"""Built-in example models, stored as model-file text."""

from __future__ import annotations

from dataclasses import dataclass

from . import toric
from .modelfile import parse_model
from .orbifold import (
    LocalQuotient,
    VerificationReport,
    compare_k_equivalent,
    is_gorenstein,
    toric_model_fan,
    verify_mckay,
)
from .qz_groups import is_sl


@dataclass(frozen=True)
class Entry:
    name: str
    text: str
    # second fan for a K-equivalent pair
    partner: str | None = None


def _cyclic(r: int, weights: tuple[int, ...]) -> Entry:
    w = ",".join(map(str, weights))
    return Entry(f"1/{r}({w})", f"kind = cyclic-quotient; order = {r}; weights = {w}")


FLOP_A = """kind = toric
name = square cone, diagonal (1,0,1)-(0,1,1)
rank = 3
ray = 0, 0, 1
ray = 1, 0, 1
ray = 0, 1, 1
ray = 1, 1, 1
cone = 0, 1, 2
cone = 1, 2, 3
"""

FLOP_B = """kind = toric
name = square cone, diagonal (0,0,1)-(1,1,1)
rank = 3
ray = 0, 0, 1
ray = 1, 0, 1
ray = 0, 1, 1
ray = 1, 1, 1
cone = 0, 1, 3
cone = 0, 2, 3
"""

WP112_FAN = """kind = toric
name = WP(1,1,2) fan
rank = 2
ray = 1, 0
ray = 0, 1
ray = -1, -2
cone = 0, 1
cone = 1, 2
cone = 0, 2
"""

Q8 = """kind = monomial-quotient
name = Q8 (binary dihedral, D4)
gen = diag(1/4, 3/4)
gen = mono(perm = [1, 0]; angles = [0, 1/2])
"""

BD3 = """kind = monomial-quotient
name = BD3 (binary dihedral of order 12, D5)
gen = diag(1/6, 5/6)
gen = mono(perm = [1, 0]; angles = [0, 1/2])
"""

CATALOG: tuple[Entry, ...] = (
    *(_cyclic(r, (1, r - 1)) for r in range(2, 11)),
    _cyclic(3, (1, 1, 1)),
    _cyclic(5, (1, 1, 3)),
    _cyclic(2, (1, 1, 0)),
    _cyclic(7, (1, 2, 4)),
    _cyclic(6, (1, 2, 3)),
    _cyclic(11, (1, 3, 7)),
    _cyclic(199, (1, 198)),
    Entry(
        "Z2xZ2 in SL(3)",
        "kind = monomial-quotient; gen = diag(1/2, 1/2, 0); gen = diag(0, 1/2, 1/2)",
    ),
    Entry(
        "Z3xZ3 in SL(3)",
        "kind = monomial-quotient; gen = diag(1/3, 2/3, 0); gen = diag(0, 1/3, 2/3)",
    ),
    Entry(
        "Z6xZ6 in SL(3)",
        "kind = monomial-quotient; gen = diag(1/6, 5/6, 0); gen = diag(0, 1/6, 5/6)",
    ),
    Entry("Q8", Q8),
    Entry("BD3", BD3),
    Entry("WP(1,1,2)", "kind = wps; weights = 1,1,2"),
    Entry("WP(1,2,3)", "kind = wps; weights = 1,2,3"),
    Entry("WP(1,1,2) fan", WP112_FAN),
    Entry("square-cone flop", FLOP_A, partner=FLOP_B),
)


def run_entry(entry: Entry) -> VerificationReport:
    model = parse_model(entry.text)
    if entry.partner is None:
        return verify_mckay(model)
    other = parse_model(entry.partner)
    return compare_k_equivalent(model.fan, other.fan)


def abelian_diagonal_sl_groups() -> list:
    """Catalog groups that are abelian, diagonal and inside SL, with order <= 200 and dim <= 3."""
    out = []
    for e in CATALOG:
        if e.partner is not None:
            continue
        m = parse_model(e.text)
        if isinstance(m, LocalQuotient):
            G = m.group
            if G.is_diagonal() and G.order <= 200 and G.n <= 3 and is_sl(G):
                out.append((e.name, G))
    return out


def summary_line(name: str, rep: VerificationReport) -> str:
    eq = "skipped" if rep.equal is None else ("true" if rep.equal else "false")
    chi_res = "absent" if rep.euler_resolution is None else str(rep.euler_resolution)
    line = (
        f"{name}: equal = {eq}; eorb = {rep.orbifold_class.render()}; "
        f"chi_orb = {rep.euler_orbifold}; chi_res = {chi_res}"
    )
    if rep.equal is None:
        line += f"; note = {rep.note}"
    return line


def catalog_fans() -> list[tuple[str, toric.Fan]]:
    """Gorenstein fans of rank <= 3 reachable from the catalog."""
    out = []
    for e in CATALOG:
        m = parse_model(e.text)
        fan = toric_model_fan(m)
        if fan is not None and fan.rank <= 3 and is_gorenstein(m):
            out.append((e.name, fan))
    return out
