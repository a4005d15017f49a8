"""Parser for the ``key = value`` model file format.

Statements are separated by newlines or by ``;`` outside brackets, so a
whole model fits on one line::

    kind = cyclic-quotient; order = 3; weights = 1,1,1

Kinds and their keys:

``cyclic-quotient``   ``order``, ``weights``
``monomial-quotient`` repeated ``gen`` (``diag(...)``, ``mono(...)``, ``cyclic r : ...``), optional ``dim``
``toric``             ``rank``, repeated ``latgen``, ``ray``, ``cone``
``wps``               ``weights``

Every kind accepts an optional ``name``.  ``#`` starts a comment.
"""

from __future__ import annotations

import re

from . import toric
from .orbifold import LocalQuotient, OrbifoldModel, Toric, WeightedProjective
from .qz_groups import close_group, cyclic_generator, parse_generator

KINDS = ("cyclic-quotient", "monomial-quotient", "toric", "wps")
ALLOWED = {
    "cyclic-quotient": {"order", "weights"},
    "monomial-quotient": {"gen", "dim"},
    "toric": {"rank", "latgen", "ray", "cone"},
    "wps": {"weights"},
}


class ModelError(ValueError):
    def __init__(self, message: str, line: int | None = None, key: str | None = None):
        self.line = line
        self.key = key
        where = []
        if line is not None:
            where.append(f"line {line}")
        if key is not None:
            where.append(f"key {key!r}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


def split_statements(text: str) -> list[tuple[int, str, str]]:
    """Split into ``(line, key, value)``; ``;`` inside ``()`` or ``[]`` does not split."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        depth = 0
        buf = ""
        pieces = []
        for ch in line:
            if ch in "([":
                depth += 1
            elif ch in ")]":
                depth -= 1
            if ch == ";" and depth == 0:
                pieces.append(buf)
                buf = ""
            else:
                buf += ch
        pieces.append(buf)
        for piece in pieces:
            piece = piece.strip()
            if not piece:
                continue
            key, sep, value = piece.partition("=")
            if not sep:
                raise ModelError(f"expected 'key = value', got {piece!r}", lineno)
            out.append((lineno, key.strip(), value.strip()))
    return out


def _ints(value: str, lineno: int, key: str) -> list[int]:
    items = [t.strip() for t in value.split(",")]
    if not all(re.fullmatch(r"-?\d+", t) for t in items):
        raise ModelError(f"expected comma-separated integers, got {value!r}", lineno, key)
    return [int(t) for t in items]


def parse_model(text: str, cap: int | None = None) -> OrbifoldModel:
    entries = split_statements(text)
    kinds = [(ln, v) for ln, k, v in entries if k == "kind"]
    if not kinds:
        raise ModelError("missing 'kind' key")
    if len(kinds) > 1:
        raise ModelError("more than one 'kind' key", kinds[1][0], "kind")
    kind_line, kind = kinds[0]
    if kind not in KINDS:
        raise ModelError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}", kind_line, "kind")
    names = [v for _, k, v in entries if k == "name"]
    name = names[0] if names else ""
    body = [(ln, k, v) for ln, k, v in entries if k not in ("kind", "name")]
    for ln, k, _ in body:
        if k not in ALLOWED[kind]:
            raise ModelError(f"key not allowed for kind {kind!r}", ln, k)

    def single(key: str) -> tuple[int, str]:
        hits = [(ln, v) for ln, k, v in body if k == key]
        if not hits:
            raise ModelError(f"{kind} model requires a {key!r} key", kind_line, key)
        if len(hits) > 1:
            raise ModelError("repeated key", hits[1][0], key)
        return hits[0]

    if kind == "cyclic-quotient":
        ln, v = single("order")
        (order,) = _ints(v, ln, "order")
        if order < 1:
            raise ModelError("order must be positive", ln, "order")
        wl, wv = single("weights")
        weights = _ints(wv, wl, "weights")
        g = cyclic_generator(order, weights)
        G = close_group(len(weights), [g], cap=cap)
        label = f"1/{order}(" + ",".join(map(str, weights)) + ")"
        return LocalQuotient(G, name or label)

    if kind == "monomial-quotient":
        gens = []
        for ln, k, v in body:
            if k == "gen":
                try:
                    gens.append(parse_generator(v))
                except ValueError as exc:
                    raise ModelError(str(exc), ln, "gen") from None
        dims = [(ln, v) for ln, k, v in body if k == "dim"]
        if dims:
            n = _ints(dims[0][1], dims[0][0], "dim")[0]
        elif gens:
            n = gens[0].n
        else:
            raise ModelError("monomial-quotient needs at least one 'gen' or a 'dim'", kind_line, "gen")
        try:
            G = close_group(n, gens, cap=cap)
        except ValueError as exc:
            raise ModelError(str(exc), kind_line, "gen") from None
        return LocalQuotient(G, name)

    if kind == "wps":
        ln, v = single("weights")
        weights = tuple(_ints(v, ln, "weights"))
        try:
            return WeightedProjective(weights, name)
        except ValueError as exc:
            raise ModelError(str(exc), ln, "weights") from None

    try:
        fan = toric.fan_from_entries(body)
    except toric.FanError as exc:
        raise ModelError(str(exc)) from None
    return Toric(fan, name)
