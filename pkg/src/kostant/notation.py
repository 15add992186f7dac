"""Text form of delta-coordinate vectors: ``d1-d2``, ``-2d1``, ``1/2d3``."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from . import linalg as la

_TERM = re.compile(r"\s*([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*d(\d+)\s*")


def format_delta(v: Sequence[Fraction]) -> str:
    out = ""
    for i, c in enumerate(v, start=1):
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if out else "")
        mag = abs(c)
        coef = "" if mag == 1 else la.fmt(mag)
        out += f"{sign}{coef}d{i}"
    return out or "0"


class NotationError(ValueError):
    def __init__(self, text: str, pos: int, reason: str):
        super().__init__(f"{reason} at column {pos + 1} of {text!r}")
        self.text, self.pos = text, pos


def parse_delta(text: str, k: int) -> la.Vec:
    """Parse ``d1-d2``, ``-2d1``, ``2*d3`` or a bracketed list ``[1,-1]``."""
    s = text.strip()
    if s.startswith("[") or s.startswith("("):
        body = s.strip("[]()")
        try:
            v = tuple(Fraction(x) for x in body.split(","))
        except (ValueError, ZeroDivisionError):
            raise NotationError(text, 0, "bad rational list") from None
        if len(v) != k:
            raise NotationError(text, 0, f"expected {k} coordinates")
        return v
    coords = [Fraction(0)] * k
    if s == "0":
        return tuple(coords)
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (pos > 0 and not m.group(1)):
            raise NotationError(text, pos, "expected a term like '+2d1'")
        i = int(m.group(3))
        if not 1 <= i <= k:
            raise NotationError(text, m.start(3), f"index d{i} outside 1..{k}")
        c = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        coords[i - 1] += -c if m.group(1) == "-" else c
        pos = m.end()
    if not s:
        raise NotationError(text, 0, "empty term")
    return tuple(coords)
