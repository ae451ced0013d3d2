"""Text forms of tangles and handlebody-knot specs.

::

    spec     := "k:" INT ";" tangle
    tangle   := "rational:" VERTEX ":" P "/" Q
              | "composite:" (VERTEX | "-") ":" KNOT ("," KNOT)* ":" DESCRIPTOR
    KNOT     := NAME ("+" | "-" | "=")

``format_spec`` inverts ``parse_spec`` on every tangle the grammar can
express (rational tangles without a fraction cannot be written).
"""
from __future__ import annotations

import re

from .contfrac import InfiniteValue, parse_fraction
from .engine import HbkSpec
from .tangle import (
    CompositeTau,
    KnotLabel,
    RationalTau,
    TangleError,
    TauTangle,
    Vertex,
    validate_rational,
)

__all__ = ["ParseError", "parse_tangle", "parse_spec", "format_tangle", "format_spec"]


class ParseError(ValueError):
    def __init__(self, message: str, token: str = "", position: int = 0):
        super().__init__(f"{message} at position {position}: {token!r}")
        self.token = token
        self.position = position


def _located(exc: TangleError, token: str, position: int) -> TangleError:
    """Same error class, message extended with the offending token."""
    new = type(exc)(f"{exc} (token {token!r} at position {position})")
    new.token, new.position = token, position
    return new


def _vertex(tok: str, pos: int, allow_none=False):
    if allow_none and tok == "-":
        return None
    try:
        return Vertex(tok)
    except ValueError:
        raise ParseError("vertex must be x, y or z", tok, pos) from None


def parse_tangle(text: str, offset: int = 0) -> TauTangle:
    kind, sep, rest = text.partition(":")
    if not sep:
        raise ParseError("expected 'rational:' or 'composite:'", text, offset)
    pos = offset + len(kind) + 1
    if kind == "rational":
        parts = rest.split(":")
        if len(parts) != 2:
            raise ParseError("expected rational:<s>:<p>/<q>", rest, pos)
        s = _vertex(parts[0], pos)
        fpos = pos + len(parts[0]) + 1
        if not re.fullmatch(r"[+-]?\d+/\d+|[+-]?\d+", parts[1]):
            raise ParseError("expected a fraction p/q", parts[1], fpos)
        try:
            r = parse_fraction(parts[1])
        except InfiniteValue:
            raise ParseError("zero denominator", parts[1], fpos) from None
        try:
            return validate_rational(s, r)
        except TangleError as exc:
            raise _located(exc, parts[1], fpos) from None
    if kind == "composite":
        parts = rest.split(":")
        if len(parts) != 3:
            raise ParseError("expected composite:<s|->:<knots>:<descriptor>", rest, pos)
        s = _vertex(parts[0], pos, allow_none=True)
        kpos = pos + len(parts[0]) + 1
        knots = []
        for tok in parts[1].split(","):
            try:
                knots.append(KnotLabel.parse(tok))
            except ValueError:
                raise ParseError("bad knot label", tok, kpos) from None
            kpos += len(tok) + 1
        desc = parts[2]
        dpos = kpos
        m = re.fullmatch(r"([A-Za-z0-9_.]+)(~?)(\*?)", desc)
        if m is None:
            raise ParseError("bad descriptor", desc, dpos)
        return CompositeTau(
            s, tuple(knots), True, m.group(1),
            mirrored=bool(m.group(2)), starred=bool(m.group(3)),
        )
    raise ParseError("unknown tangle kind", kind, offset)


def parse_spec(text: str) -> HbkSpec:
    """Parse ``k:<int>;<tangle>``.

    >>> parse_spec("k:0;rational:x:2/5").k
    0
    """
    text = text.strip()
    head, sep, tail = text.partition(";")
    if not sep:
        raise ParseError("expected 'k:<int>;<tangle>'", text, 0)
    m = re.fullmatch(r"k:([+-]?\d+)", head)
    if m is None:
        raise ParseError("expected k:<int>", head, 0)
    return HbkSpec(int(m.group(1)), parse_tangle(tail, len(head) + 1))


def format_tangle(t: TauTangle) -> str:
    if isinstance(t, RationalTau):
        if t.fraction is None:
            raise ValueError(f"tangle {t.label!r} has no fraction to write")
        return f"rational:{t.vertex}:{t.fraction.rep.numerator}/{t.fraction.rep.denominator}"
    s = str(t.rational_vertex) if t.rational_vertex is not None else "-"
    knots = ",".join(str(k) for k in t.knots)
    return f"composite:{s}:{knots}:{t.presentation}"


def format_spec(spec: HbkSpec) -> str:
    return f"k:{spec.k};{format_tangle(spec.tangle)}"
