"""Arithmetic in the 16-element ring R = Z4 + vZ4 with v^2 = v.

Elements are stored as the pair ``(a, b)`` meaning ``a + b*v`` with both
components reduced mod 4. There are only sixteen of them, so every element
is interned and all operations are table lookups built once at import time
from the defining formulas.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .errors import NotAUnit

__all__ = [
    "RingElem",
    "DerivationKind",
    "Ideal",
    "ZERO",
    "ONE",
    "V",
    "ELEMENTS",
    "UNITS",
    "add",
    "sub",
    "neg",
    "mul",
    "is_unit",
    "inverse",
    "theta",
    "delta",
    "gray_phi",
    "gray_weight",
    "lee_weight",
    "nontrivial_ideals",
]

_LEE = (0, 1, 2, 1)


class RingElem:
    """An element ``a + b*v`` of R. Instances are interned and immutable."""

    __slots__ = ("a", "b", "code")
    _pool: dict[int, "RingElem"] = {}

    def __new__(cls, a: int = 0, b: int = 0) -> "RingElem":
        a %= 4
        b %= 4
        code = a + 4 * b
        self = cls._pool.get(code)
        if self is None:
            self = object.__new__(cls)
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)
            object.__setattr__(self, "code", code)
            cls._pool[code] = self
        return self

    def __setattr__(self, name, value):
        raise AttributeError("RingElem is immutable")

    def __reduce__(self):
        return (RingElem, (self.a, self.b))

    @classmethod
    def from_code(cls, code: int) -> "RingElem":
        return ELEMENTS[code]

    def __eq__(self, other) -> bool:
        if isinstance(other, RingElem):
            return self.code == other.code
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("RingElem", self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __iter__(self) -> Iterator[int]:
        yield self.a
        yield self.b

    def __add__(self, other: "RingElem") -> "RingElem":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _ELEMS[_ADD[self.code][o.code]]

    __radd__ = __add__

    def __sub__(self, other: "RingElem") -> "RingElem":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _ELEMS[_ADD[self.code][_NEG[o.code]]]

    def __rsub__(self, other: "RingElem") -> "RingElem":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "RingElem":
        return _ELEMS[_NEG[self.code]]

    def __mul__(self, other: "RingElem") -> "RingElem":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _ELEMS[_MUL[self.code][o.code]]

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"RingElem({self.a}, {self.b})"

    def __str__(self) -> str:
        return format_elem(self)


def _coerce(x) -> "RingElem | None":
    if isinstance(x, RingElem):
        return x
    if isinstance(x, int):
        return RingElem(x, 0)
    return None


def format_elem(x: RingElem) -> str:
    """Render in the usual notation: ``0``, ``3``, ``v``, ``2v``, ``1+3v``."""
    if x.b == 0:
        return str(x.a)
    vpart = "v" if x.b == 1 else f"{x.b}v"
    return vpart if x.a == 0 else f"{x.a}+{vpart}"


class DerivationKind(enum.Enum):
    """The two unit multipliers u for which u*(theta(x) - x) is a derivation."""

    UNIT_1_PLUS_2V = "1+2v"
    UNIT_3_PLUS_2V = "3+2v"

    @property
    def multiplier(self) -> RingElem:
        return RingElem(1, 2) if self is DerivationKind.UNIT_1_PLUS_2V else RingElem(3, 2)

    @classmethod
    def parse(cls, text: str) -> "DerivationKind":
        key = text.replace(" ", "").lower()
        for kind in cls:
            if key in (kind.value, kind.name.lower()):
                return kind
        raise ValueError(f"unknown derivation {text!r}; expected '1+2v' or '3+2v'")


DEFAULT_KIND = DerivationKind.UNIT_1_PLUS_2V

# Lookup tables, built once from the defining formulas.
_ELEMS: tuple[RingElem, ...] = tuple(RingElem(c % 4, c // 4) for c in range(16))
ELEMENTS = _ELEMS


def _mul_pair(x: RingElem, y: RingElem) -> RingElem:
    # (a + bv)(c + dv) = ac + (ad + bc + bd)v since v^2 = v
    return RingElem(x.a * y.a, x.a * y.b + x.b * y.a + x.b * y.b)


_ADD = tuple(tuple((x.a + y.a) % 4 + 4 * ((x.b + y.b) % 4) for y in _ELEMS) for x in _ELEMS)
_NEG = tuple((-x.a) % 4 + 4 * ((-x.b) % 4) for x in _ELEMS)
_MUL = tuple(tuple(_mul_pair(x, y).code for y in _ELEMS) for x in _ELEMS)
_THETA = tuple(RingElem(x.a + x.b, -x.b).code for x in _ELEMS)


def _delta_table(kind: DerivationKind) -> tuple[int, ...]:
    u = kind.multiplier
    return tuple((u * (_ELEMS[_THETA[x.code]] - x)).code for x in _ELEMS)


_DELTA = {kind: _delta_table(kind) for kind in DerivationKind}

ZERO = RingElem(0, 0)
ONE = RingElem(1, 0)
V = RingElem(0, 1)


def add(x: RingElem, y: RingElem) -> RingElem:
    return x + y


def sub(x: RingElem, y: RingElem) -> RingElem:
    return x - y


def neg(x: RingElem) -> RingElem:
    return -x


def mul(x: RingElem, y: RingElem) -> RingElem:
    return x * y


def is_unit(x: RingElem) -> bool:
    """``a + bv`` is a unit iff both ``a`` and ``a + b`` are odd."""
    return x.a % 2 == 1 and (x.a + x.b) % 2 == 1


UNITS: tuple[RingElem, ...] = tuple(x for x in _ELEMS if is_unit(x))
_INV = {u.code: next(y for y in _ELEMS if u * y == ONE) for u in UNITS}


def inverse(x: RingElem) -> RingElem:
    try:
        return _INV[x.code]
    except KeyError:
        raise NotAUnit(f"{format_elem(x)} is not a unit of Z4+vZ4") from None


def theta(x: RingElem) -> RingElem:
    """The order-2 automorphism a + bv -> (a + b) - bv."""
    return _ELEMS[_THETA[x.code]]


def delta(x: RingElem, kind: DerivationKind = DEFAULT_KIND) -> RingElem:
    """The derivation ``u * (theta(x) - x)`` for the multiplier ``u`` of ``kind``."""
    return _ELEMS[_DELTA[kind][x.code]]


def lee_weight(z: int) -> int:
    return _LEE[z % 4]


def gray_phi(x: RingElem) -> tuple[int, int]:
    return (x.a, (x.a + x.b) % 4)


def gray_weight(x: RingElem) -> int:
    first, second = gray_phi(x)
    return _LEE[first] + _LEE[second]


@dataclass(frozen=True, eq=False)
class Ideal:
    """A principal ideal of R. Equality compares element sets, not generators."""

    generator: RingElem
    elements: frozenset

    @classmethod
    def generated_by(cls, g: RingElem) -> "Ideal":
        return cls(g, frozenset(r * g for r in _ELEMS))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: RingElem) -> bool:
        return x in self.elements

    def sorted_elements(self) -> list[RingElem]:
        return sorted(self.elements, key=lambda e: (e.a, e.b))


# Generators in the order the ideal lattice is usually listed.
_IDEAL_GENERATORS = ((0, 2), (2, 2), (2, 0), (0, 1), (3, 1), (1, 1), (2, 1))


def nontrivial_ideals() -> list[Ideal]:
    """The seven ideals other than {0} and R itself."""
    return [Ideal.generated_by(RingElem(a, b)) for a, b in _IDEAL_GENERATORS]


def all_ideals() -> list[Ideal]:
    """Every distinct principal ideal, found by brute force over all generators."""
    seen: list[Ideal] = []
    for g in _ELEMS:
        ideal = Ideal.generated_by(g)
        if ideal not in seen:
            seen.append(ideal)
    return seen
