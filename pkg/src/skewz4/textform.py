"""Parsing and rendering of ring elements and skew polynomials.

Grammar (whitespace is ignored)::

    poly  := term (('+' | '-') term)*
    term  := coef? ('x' ('^' INT)?)?          -- at least one part present
    coef  := '(' elem ')' | INT 'v'? | 'v'
    elem  := ['-'] atom (('+' | '-') atom)*
    atom  := INT 'v'? | 'v'

A compound coefficient such as ``1+3v`` needs parentheses when it is
followed by ``x``. Like terms are summed, so ``1+3v+2x`` and ``(1+3v)+2x``
are the same polynomial.
"""

from __future__ import annotations

from .errors import PolySyntaxError
from .poly import SkewPoly
from .ring import DEFAULT_KIND, ZERO, DerivationKind, RingElem, format_elem

__all__ = ["parse_elem", "parse_poly", "render_elem", "render_poly"]


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def at_end(self) -> bool:
        return self.peek() == ""

    def error(self, message: str) -> PolySyntaxError:
        self.skip_ws()
        return PolySyntaxError(message, self.text, self.pos)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start : self.pos])


def _atom(sc: _Scanner) -> RingElem | None:
    """INT 'v'? | 'v'; returns None if nothing matches."""
    ch = sc.peek()
    if ch.isdigit():
        n = sc.integer()
        if sc.peek() == "v":
            sc.take()
            return RingElem(0, n)
        return RingElem(n, 0)
    if ch == "v":
        sc.take()
        return RingElem(0, 1)
    return None


def _elem(sc: _Scanner) -> RingElem:
    sign = 1
    if sc.peek() == "-":
        sc.take()
        sign = -1
    first = _atom(sc)
    if first is None:
        raise sc.error("expected a ring element")
    total = first if sign > 0 else -first
    while sc.peek() in ("+", "-"):
        op = sc.take()
        nxt = _atom(sc)
        if nxt is None:
            raise sc.error("expected a ring element")
        total = total + nxt if op == "+" else total - nxt
    return total


def parse_elem(text: str) -> RingElem:
    """Parse ``0``, ``2v``, ``1+3v``, ``(3+2v)`` and similar."""
    sc = _Scanner(text)
    if sc.peek() == "(":
        sc.take()
        value = _elem(sc)
        if sc.take() != ")":
            raise sc.error("expected ')'")
    else:
        value = _elem(sc)
    if not sc.at_end():
        raise sc.error(f"unexpected {sc.peek()!r}")
    return value


def _term(sc: _Scanner) -> tuple[RingElem, int]:
    start = sc.pos
    coef: RingElem | None = None
    if sc.peek() == "(":
        sc.take()
        coef = _elem(sc)
        if sc.take() != ")":
            sc.pos -= 1
            raise sc.error("expected ')'")
    else:
        coef = _atom(sc)
    degree = 0
    if sc.peek() == "x":
        sc.take()
        degree = 1
        if sc.peek() == "^":
            sc.take()
            degree = sc.integer()
    elif coef is None:
        sc.pos = max(sc.pos, start)
        ch = sc.peek()
        raise sc.error(f"unknown token {ch!r}" if ch else "unexpected end of input")
    return (coef if coef is not None else RingElem(1, 0)), degree


def parse_poly(text: str, kind: DerivationKind = DEFAULT_KIND) -> SkewPoly:
    """Parse polynomial text such as ``(1+3v)+2x+(3+3v)x^2`` into a :class:`SkewPoly`."""
    sc = _Scanner(text)
    if sc.at_end():
        raise sc.error("empty polynomial")
    terms: dict[int, RingElem] = {}
    sign = 1
    if sc.peek() == "-":
        sc.take()
        sign = -1
    while True:
        coef, deg = _term(sc)
        if sign < 0:
            coef = -coef
        terms[deg] = terms.get(deg, ZERO) + coef
        if sc.at_end():
            break
        op = sc.take()
        if op not in ("+", "-"):
            sc.pos -= 1
            raise sc.error(f"unknown token {op!r}")
        sign = 1 if op == "+" else -1
    top = max(terms)
    return SkewPoly([terms.get(i, ZERO) for i in range(top + 1)], kind)


def render_elem(x: RingElem) -> str:
    return format_elem(x)


def _coef_text(c: RingElem, with_x: bool) -> str:
    text = format_elem(c)
    if c.a != 0 and c.b != 0:
        return f"({text})"
    if with_x and text == "1":
        return ""
    return text


def render_poly(f: SkewPoly) -> str:
    """Text form accepted by :func:`parse_poly`, e.g. ``(1+3v)+2x+(3+3v)x^2``."""
    if f.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        if i == 0:
            parts.append(_coef_text(c, with_x=False))
        elif i == 1:
            parts.append(_coef_text(c, with_x=True) + "x")
        else:
            parts.append(_coef_text(c, with_x=True) + f"x^{i}")
    return "+".join(parts)
