"""Command-line front end.

    stringy-mckay sectors  MODEL         sector table
    stringy-mckay stringy  MODEL         orbifold E-polynomial
    stringy-mckay resolve  MODEL         crepant resolution, as a fan file
    stringy-mckay verify   MODEL         McKay comparison report
    stringy-mckay compare  FAN FAN       K-equivalent pair comparison
    stringy-mckay catalog                verify every built-in entry
    stringy-mckay selftest               invariant checks

Exit status is 0 on success, 1 on an inequality or failed check, and 2 on a
diagnostic (unparseable input, invalid model, fractional exponents without
``--allow-fractional``).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import toric
from .catalog import CATALOG, run_entry, summary_line
from .epoly import fractional_exponents
from .modelfile import ModelError, parse_model
from .orbifold import (
    compare_k_equivalent,
    orbifold_epoly,
    render_report,
    render_sectors,
    sectors,
    toric_model_fan,
    verify_mckay,
)
from .qz_groups import GroupTooLargeError
from .selftest import run_selftest

EXIT_OK, EXIT_FAIL, EXIT_DIAGNOSTIC = 0, 1, 2


def _fraction_note(cls) -> str:
    exps = fractional_exponents(cls)
    p, q = exps[0]
    return (
        f"non-integral class: fractional exponent {p.numerator}/{p.denominator}"
        if p.denominator != 1
        else f"non-integral class: fractional exponent {q.numerator}/{q.denominator}"
    )


def _load(path: str, cap: int | None):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ModelError(f"{path}: cannot read: {exc.strerror}") from None
    try:
        return parse_model(text, cap=cap)
    except (ModelError, toric.FanError, GroupTooLargeError) as exc:
        raise ModelError(f"{path}: {exc}") from None


def _fan_of(path: str, cap: int | None) -> toric.Fan:
    model = _load(path, cap)
    fan = toric_model_fan(model)
    if fan is None:
        raise ModelError(f"{path}: model has no toric description")
    return fan


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stringy-mckay", description="Exact stringy invariants of orbifolds.")
    parser.add_argument("--format", choices=("table", "kv"), default="table")
    parser.add_argument("--allow-fractional", action="store_true", help="accept non-SL inputs")
    parser.add_argument("--cap", type=int, default=None, help="group closure cap")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("sectors", "stringy", "resolve", "verify"):
        sub.add_parser(name).add_argument("model")
    cmp_ = sub.add_parser("compare")
    cmp_.add_argument("fan_a")
    cmp_.add_argument("fan_b")
    cmp_.add_argument("--base", default=None, help="common Gorenstein base fan")
    sub.add_parser("catalog")
    sub.add_parser("selftest")
    return parser


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args, out)
    except (ModelError, toric.FanError, ValueError, GroupTooLargeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIAGNOSTIC


def _dispatch(args, out) -> int:
    cmd = args.command
    if cmd == "sectors":
        secs = sectors(_load(args.model, args.cap))
        if args.format == "kv":
            for s in secs:
                out.write(f"sector = {s.label} | {s.fixed_epoly.render()} | {s.shift}\n")
        else:
            out.write(render_sectors(secs))
        return EXIT_OK

    if cmd == "stringy":
        cls = orbifold_epoly(_load(args.model, args.cap))
        out.write(f"eorb = {cls.render()}\n")
        if fractional_exponents(cls):
            out.write(f"note = {_fraction_note(cls)}\n")
            return EXIT_OK if args.allow_fractional else EXIT_DIAGNOSTIC
        return EXIT_OK

    if cmd == "resolve":
        fan = toric.crepant_resolve(_fan_of(args.model, args.cap))
        out.write("kind = toric\n" + toric.render_fan(fan))
        return EXIT_OK

    if cmd == "verify":
        rep = verify_mckay(_load(args.model, args.cap))
        out.write(render_report(rep, args.format))
        if rep.hodge is None and not args.allow_fractional:
            return EXIT_DIAGNOSTIC
        return EXIT_OK if rep.ok else EXIT_FAIL

    if cmd == "compare":
        base = _fan_of(args.base, args.cap) if args.base else None
        rep = compare_k_equivalent(_fan_of(args.fan_a, args.cap), _fan_of(args.fan_b, args.cap), base)
        out.write(render_report(rep, args.format))
        return EXIT_OK if rep.ok else EXIT_FAIL

    if cmd == "catalog":
        status = EXIT_OK
        for entry in CATALOG:
            rep = run_entry(entry)
            out.write(summary_line(entry.name, rep) + "\n")
            if not rep.ok:
                status = EXIT_FAIL
        return status

    if cmd == "selftest":
        status = EXIT_OK
        for name, ok in run_selftest():
            out.write(f"{'PASS' if ok else 'FAIL'}  {name}\n")
            if not ok:
                status = EXIT_FAIL
        return status

    raise AssertionError(cmd)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
