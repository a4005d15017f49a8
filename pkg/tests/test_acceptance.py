"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line before asserting, so
``pytest tests/test_acceptance.py -s`` reads as a checklist.
"""

import io
from fractions import Fraction

import pytest

from stringy_mckay import toric
from stringy_mckay.catalog import CATALOG, FLOP_A, FLOP_B, Q8, abelian_diagonal_sl_groups
from stringy_mckay.cli import run
from stringy_mckay.epoly import NonIntegralClassError, euler_characteristic, hodge_numbers
from stringy_mckay.groupoids import (
    GroupTable,
    action_groupoid,
    conjugacy_class_count,
    cyclic_table,
    dihedral_table,
    inertia,
    pi0,
    symmetric_table,
)
from stringy_mckay.modelfile import parse_model
from stringy_mckay.orbifold import (
    LocalQuotient,
    WeightedProjective,
    compare_k_equivalent,
    orbifold_epoly,
    sectors_local_quotient,
    verify_mckay,
)
from stringy_mckay.qz_groups import age, conjugacy_classes, fixed_dim, is_sl, shift_w


def report(name, ok, detail=""):
    print(f"\n{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))
    assert ok, detail


def local(text):
    return parse_model(text)


def rep_group(text):
    return local(text).group


def test_a_series_mckay():
    bad = []
    for r in range(2, 51):
        rep = verify_mckay(local(f"kind = cyclic-quotient; order = {r}; weights = 1,{r - 1}"))
        expected = f"{r - 1}*(uv)^1 + 1*(uv)^2"
        ok = (
            rep.orbifold_class.render() == rep.resolution_class.render() == expected
            and rep.euler_orbifold == rep.euler_resolution == r
        )
        if not ok:
            bad.append(r)
    report("A-series 1/r(1,r-1), r = 2..50", not bad, f"mismatches at r = {bad}" if bad else "49 cases")


def test_one_third_111():
    rep = verify_mckay(local("kind = cyclic-quotient; order = 3; weights = 1,1,1"))
    ages = sorted(age(g) for g in rep_group("kind = cyclic-quotient; order = 3; weights = 1,1,1").elements)
    ok = (
        rep.orbifold_class.render() == rep.resolution_class.render() == "1*(uv)^1 + 1*(uv)^2 + 1*(uv)^3"
        and rep.euler_orbifold == rep.euler_resolution == 3
        and ages == [0, 1, 2]
    )
    report("1/3(1,1,1)", ok, rep.orbifold_class.render())


def test_wp112():
    rep = verify_mckay(WeightedProjective((1, 1, 2)))
    ok = rep.equal is True and rep.orbifold_class.render() == "1 + 2*(uv)^1 + 1*(uv)^2" == rep.resolution_class.render()
    report("WP(1,1,2) orbifold vs crepant resolution", ok, rep.orbifold_class.render())


def test_flop_invariance():
    a, b = parse_model(FLOP_A).fan, parse_model(FLOP_B).fan
    ea, eb = toric.epoly_of_fan(a).render(), toric.epoly_of_fan(b).render()
    rep = compare_k_equivalent(a, b)
    ok = ea.encode() == eb.encode() and rep.equal is True and a.maximal_cones != b.maximal_cones
    report("square-cone flop", ok, ea)


def test_cross_oracle_sector_vs_box():
    groups = abelian_diagonal_sl_groups()
    bad = []
    for name, G in groups:
        lattice = toric.lattice_from_generators(G.n, [g.angles for g in G.generators])
        if orbifold_epoly(LocalQuotient(G)) != toric.stringy_epoly(toric.orthant_fan(lattice)):
            bad.append(name)
    ok = not bad and len(groups) >= 15
    report("sector sum = box sum", ok, f"{len(groups)} groups" + (f", mismatches {bad}" if bad else ""))


def test_pi0_inertia_is_conj():
    q8 = rep_group(Q8)
    tables = {f"C{n}": cyclic_table(n) for n in range(1, 13)}
    tables.update(S3=symmetric_table(3), D4=dihedral_table(4), Q8=GroupTable.from_monomial_group(q8))
    bad = []
    for name, H in tables.items():
        g = action_groupoid(["*"], H, lambda h, x: x)
        if len(pi0(inertia(g))) != conjugacy_class_count(H):
            bad.append(name)
    if conjugacy_class_count(tables["Q8"]) != len(conjugacy_classes(q8)):
        bad.append("Q8 vs monomial classes")
    report("pi0(inertia) = Conj", not bad, f"{len(tables)} groups" + (f", mismatches {bad}" if bad else ""))


def test_shift_identities():
    bad = []
    count = 0
    for entry in CATALOG:
        m = parse_model(entry.text)
        if not isinstance(m, LocalQuotient):
            continue
        G = m.group
        for g in G.elements:
            count += 1
            a, ainv = age(g), age(g.inverse())
            if not (isinstance(a, Fraction) and shift_w(g, G.m) == ainv and a + ainv == G.n - fixed_dim(g)):
                bad.append((entry.name, str(g)))
    report("shift identities", not bad and count > 0, f"{count} elements" + (f", failures {bad[:3]}" if bad else ""))


def test_negative_control():
    G = rep_group("kind = cyclic-quotient; order = 3; weights = 1,1")
    cls = orbifold_epoly(LocalQuotient(G))
    raised = None
    try:
        hodge_numbers(cls)
    except NonIntegralClassError as exc:
        raised = exc
    ok = (
        not is_sl(G)
        and Fraction(2, 3) in {p for (p, _), _c in cls.terms}
        and raised is not None
        and raised.exponent == (Fraction(2, 3), Fraction(2, 3))
    )
    report("1/3(1,1) negative control", ok, cls.render())


def test_q8_sector_table():
    G = rep_group(Q8)
    secs = sectors_local_quotient(G)
    nontrivial = [s for s in secs if s.shift > 0]
    d4_rank = 4
    rep = verify_mckay(LocalQuotient(G))
    ok = (
        len(secs) == 5
        and len(nontrivial) == d4_rank
        and rep.equal is None
        and "nonabelian" in rep.note
        and euler_characteristic(rep.orbifold_class) == 5
    )
    report("Q8 sector table", ok, f"{len(secs)} sectors; note: {rep.note}")


def test_catalog_determinism():
    outs = []
    for _ in range(2):
        buf = io.StringIO()
        code = run(["catalog"], buf)
        outs.append((code, buf.getvalue()))
    ok = outs[0] == outs[1] and outs[0][0] == 0 and outs[0][1].count("\n") == len(CATALOG)
    report("catalog determinism", ok, f"{len(CATALOG)} lines, byte-identical")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-s", "-q"]))
