from fractions import Fraction

import pytest

from stringy_mckay import toric
from stringy_mckay.catalog import CATALOG, FLOP_A
from stringy_mckay.modelfile import ModelError, parse_model, split_statements
from stringy_mckay.orbifold import LocalQuotient, Toric, WeightedProjective


def test_split_statements_respects_brackets():
    entries = split_statements("kind = monomial-quotient; gen = mono(perm = [1, 0]; angles = [0, 1/2])")
    assert [(k, v) for _, k, v in entries] == [
        ("kind", "monomial-quotient"),
        ("gen", "mono(perm = [1, 0]; angles = [0, 1/2])"),
    ]


def test_comments_and_line_numbers():
    entries = split_statements("# header\nkind = wps  # trailing\n\nweights = 1,1,2\n")
    assert entries == [(2, "kind", "wps"), (4, "weights", "1,1,2")]


def test_cyclic_quotient():
    m = parse_model("kind = cyclic-quotient; order = 3; weights = 1,1,1")
    assert isinstance(m, LocalQuotient)
    assert m.group.order == 3 and m.group.n == 3 and m.name == "1/3(1,1,1)"


def test_wps_and_name():
    m = parse_model("kind = wps\nname = quadric cone\nweights = 1,1,2")
    assert isinstance(m, WeightedProjective)
    assert m.weights == (1, 1, 2) and m.name == "quadric cone"


def test_toric_with_latgen():
    m = parse_model("kind = toric; rank = 2; latgen = 1/2, 1/2; ray = 1, 0; ray = 0, 1; cone = 0, 1")
    assert isinstance(m, Toric)
    assert m.fan.lattice.contains([Fraction(1, 2), Fraction(1, 2)])
    assert toric.cone_index(m.fan, m.fan.maximal_cones[0]) == 2


def test_monomial_quotient_generators():
    m = parse_model("kind = monomial-quotient; gen = cyclic 4 : 1, 3; gen = mono(perm = [1, 0]; angles = [0, 1/2])")
    assert m.group.order == 8 and not m.group.is_abelian()
    m = parse_model("kind = monomial-quotient; dim = 2")
    assert m.group.order == 1


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("order = 3", "missing 'kind'"),
        ("kind = lens-space", "unknown kind"),
        ("kind = wps; kind = wps; weights = 1,1", "more than one"),
        ("kind = wps; order = 2; weights = 1,1", "not allowed"),
        ("kind = wps", "requires a 'weights'"),
        ("kind = wps; weights = 1,1; weights = 1,2", "repeated"),
        ("kind = cyclic-quotient; order = 0; weights = 1", "positive"),
        ("kind = cyclic-quotient; order = x; weights = 1", "integers"),
        ("kind = wps; weights = 2,4", "weights"),
        ("kind = toric; rank = 2; cone = 0, 1", "at least one ray"),
        ("kind = toric; rank = 2; ray = 1/0, 1; cone = 0", "ray"),
        ("kind = toric; rank = 2; ray = 1/x, 1; cone = 0", "ray"),
        ("kind = monomial-quotient; gen = rotate(1/2)", "gen"),
        ("kind wps", "key = value"),
    ],
)
def test_diagnostics(text, fragment):
    with pytest.raises(ModelError, match=fragment):
        parse_model(text)


def test_line_number_in_diagnostic():
    with pytest.raises(ModelError) as exc:
        parse_model("kind = wps\n\nweights = a,b\n")
    assert exc.value.line == 3 and exc.value.key == "weights"


def test_cap_applies():
    from stringy_mckay.qz_groups import GroupTooLargeError

    with pytest.raises(GroupTooLargeError):
        parse_model("kind = cyclic-quotient; order = 50; weights = 1,49", cap=10)


def test_catalog_texts_parse():
    for entry in CATALOG:
        assert parse_model(entry.text) is not None
    assert parse_model(FLOP_A).name.startswith("square cone")
