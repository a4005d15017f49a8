import io
import subprocess
import sys
from fractions import Fraction

import pytest

from stringy_mckay import toric
from stringy_mckay.catalog import CATALOG, FLOP_A, FLOP_B, WP112_FAN
from stringy_mckay.cli import EXIT_DIAGNOSTIC, EXIT_FAIL, EXIT_OK, run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def test_verify_wps(write):
    code, out = call("--format", "kv", "verify", write("m", "kind = wps; weights = 1,1,2"))
    assert code == EXIT_OK
    assert "equal = true\n" in out
    assert "eorb = 1 + 2*(uv)^1 + 1*(uv)^2\n" in out


def test_verify_table_format(write):
    code, out = call("verify", write("m", "kind = cyclic-quotient; order = 3; weights = 1,1,1"))
    assert code == EXIT_OK and "1*(uv)^1 + 1*(uv)^2 + 1*(uv)^3" in out


def test_stringy_fractional(write):
    path = write("m", "kind = cyclic-quotient; order = 3; weights = 1,1")
    code, out = call("stringy", path)
    assert code != EXIT_OK
    assert "fractional exponent 2/3" in out
    code, out = call("--allow-fractional", "stringy", path)
    assert code == EXIT_OK and "2/3" in out


def test_verify_non_sl_is_diagnostic(write):
    path = write("m", "kind = cyclic-quotient; order = 3; weights = 1,1")
    assert call("verify", path)[0] == EXIT_DIAGNOSTIC
    assert call("--allow-fractional", "verify", path)[0] == EXIT_OK


def test_sectors(write):
    path = write("m", "kind = cyclic-quotient; order = 2; weights = 1,1")
    code, out = call("--format", "kv", "sectors", path)
    assert code == EXIT_OK
    assert out.count("sector = ") == 2
    code, table = call("sectors", path)
    assert code == EXIT_OK and table != out


def test_resolve_round_trip(write):
    path = write("m", "kind = cyclic-quotient; order = 5; weights = 1,1,3")
    code, out = call("resolve", path)
    assert code == EXIT_OK and out.startswith("kind = toric\n")
    resolved = toric.parse_fan(out.split("\n", 1)[1])
    assert toric.is_smooth(resolved)
    base = toric.orthant_fan(toric.lattice_from_generators(3, [[Fraction(1, 5), Fraction(1, 5), Fraction(3, 5)]]))
    assert toric.epoly_of_fan(resolved) == toric.stringy_epoly(base)
    # the printed fan is itself a valid model file
    code, again = call("stringy", write("r", out))
    assert code == EXIT_OK and "2*(uv)^1 + 2*(uv)^2 + 1*(uv)^3" in again


def test_resolve_non_toric(write):
    code, _ = call("resolve", write("m", "kind = monomial-quotient; gen = diag(1/4, 3/4); gen = mono(perm = [1, 0]; angles = [0, 1/2])"))
    assert code == EXIT_DIAGNOSTIC


def test_compare(write):
    a, b = write("a", FLOP_A), write("b", FLOP_B)
    code, out = call("--format", "kv", "compare", a, b)
    assert code == EXIT_OK and "equal = true" in out
    code, _ = call("compare", a, write("c", WP112_FAN))
    assert code == EXIT_DIAGNOSTIC


def test_compare_with_base(write):
    base = write("base", "kind = cyclic-quotient; order = 3; weights = 1,1,1")
    a = write("a", call("resolve", base)[1])
    code, out = call("--format", "kv", "compare", "--base", base, a, a)
    assert code == EXIT_OK and "equal = true" in out


def test_catalog_lines_and_determinism():
    code, first = call("catalog")
    _, second = call("catalog")
    assert code == EXIT_OK and first == second
    lines = first.splitlines()
    assert len(lines) == len(CATALOG)
    for entry, line in zip(CATALOG, lines):
        assert line.startswith(entry.name + ": ")
        assert "equal = true" in line or "equal = skipped" in line


def test_selftest():
    code, out = call("selftest")
    assert code == EXIT_OK
    assert out and all(line.startswith("PASS") for line in out.splitlines())


def test_diagnostics(write, tmp_path):
    assert call("stringy", write("m", "kind = wps; weights = a"))[0] == EXIT_DIAGNOSTIC
    assert call("--cap", "5", "stringy", write("c", "kind = cyclic-quotient; order = 50; weights = 1,49"))[0] == EXIT_DIAGNOSTIC
    assert call("stringy", str(tmp_path / "missing"))[0] == EXIT_DIAGNOSTIC


def test_console_entry_point(write):
    proc = subprocess.run(
        [sys.executable, "-m", "stringy_mckay.cli", "--format", "kv", "verify", write("m", "kind = wps; weights = 1,2,3")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == EXIT_OK
    assert "eorb = 1 + 4*(uv)^1 + 1*(uv)^2" in proc.stdout


def test_failure_exit_code_is_distinct():
    assert EXIT_FAIL not in (EXIT_OK, EXIT_DIAGNOSTIC)
