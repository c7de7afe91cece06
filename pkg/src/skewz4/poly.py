"""The skew polynomial ring R[x; theta, delta] over R = Z4 + vZ4.

Multiplication follows ``x*a = theta(a)*x + delta(a)``. Because
``delta*theta + theta*delta = 0`` and ``delta*delta = 0`` on R, the power
``x^2`` commutes with every constant, which gives the closed form used by
:func:`x_pow_times`::

    x^n a = (theta(a) x + delta(a)) x^(n-1)   n odd
    x^n a = a x^n                             n even

Coefficients are stored in ascending degree order with trailing zeros
removed. The zero polynomial has degree ``-inf``.
"""

from __future__ import annotations

import math
from typing import Iterable, Optional, Sequence, Union

from . import ring
from .errors import DivisionByZeroPolynomial, MixedDerivation, NonUnitLeadingCoefficient
from .ring import DEFAULT_KIND, ELEMENTS, DerivationKind, RingElem

__all__ = [
    "SkewPoly",
    "NEG_INF",
    "x_pow_times",
    "skew_add",
    "skew_mul",
    "right_divide",
    "is_central",
    "right_divides_xn_minus_1",
    "commutation_witness",
]

NEG_INF = -math.inf

_ADD = ring._ADD
_MUL = ring._MUL
_NEG = ring._NEG
_THETA = ring._THETA

Degree = Union[int, float]


class SkewPoly:
    __slots__ = ("coeffs", "kind", "_codes")

    def __init__(self, coeffs: Iterable = (), kind: DerivationKind = DEFAULT_KIND):
        cs = [c if isinstance(c, RingElem) else _as_elem(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "_codes", tuple(c.code for c in cs))

    @classmethod
    def _from_codes(cls, codes: Sequence[int], kind: DerivationKind) -> "SkewPoly":
        n = len(codes)
        while n and codes[n - 1] == 0:
            n -= 1
        self = object.__new__(cls)
        object.__setattr__(self, "coeffs", tuple(ELEMENTS[c] for c in codes[:n]))
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "_codes", tuple(codes[:n]))
        return self

    def __setattr__(self, name, value):
        raise AttributeError("SkewPoly is immutable")

    def __reduce__(self):
        return (SkewPoly, (self.coeffs, self.kind))

    # construction helpers

    @classmethod
    def zero(cls, kind: DerivationKind = DEFAULT_KIND) -> "SkewPoly":
        return cls((), kind)

    @classmethod
    def constant(cls, a, kind: DerivationKind = DEFAULT_KIND) -> "SkewPoly":
        return cls((a,), kind)

    @classmethod
    def monomial(cls, a, degree: int, kind: DerivationKind = DEFAULT_KIND) -> "SkewPoly":
        return cls([ring.ZERO] * degree + [_as_elem(a)], kind)

    @classmethod
    def x(cls, kind: DerivationKind = DEFAULT_KIND) -> "SkewPoly":
        return cls.monomial(ring.ONE, 1, kind)

    @classmethod
    def xn_minus_1(cls, n: int, kind: DerivationKind = DEFAULT_KIND) -> "SkewPoly":
        if n == 0:
            return cls.zero(kind)
        return cls([RingElem(3, 0)] + [ring.ZERO] * (n - 1) + [ring.ONE], kind)

    # inspection

    @property
    def degree(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> RingElem:
        return self.coeffs[-1] if self.coeffs else ring.ZERO

    def coeff(self, i: int) -> RingElem:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ring.ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def with_kind(self, kind: DerivationKind) -> "SkewPoly":
        return SkewPoly(self.coeffs, kind)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self._codes == other._codes and self.kind is other.kind

    def __hash__(self) -> int:
        return hash((self._codes, self.kind))

    def __repr__(self) -> str:
        return f"SkewPoly({str(self)!r}, kind={self.kind.value})"

    def __str__(self) -> str:
        from .textform import render_poly

        return render_poly(self)

    # arithmetic

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        return skew_add(self, _lift(other, self.kind))

    __radd__ = __add__

    def __neg__(self) -> "SkewPoly":
        return SkewPoly._from_codes([_NEG[c] for c in self._codes], self.kind)

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        return skew_add(self, -_lift(other, self.kind))

    def __rsub__(self, other) -> "SkewPoly":
        return skew_add(_lift(other, self.kind), -self)

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        return skew_mul(self, _lift(other, self.kind))

    def __rmul__(self, other) -> "SkewPoly":
        return skew_mul(_lift(other, self.kind), self)

    def __pow__(self, e: int) -> "SkewPoly":
        out = SkewPoly.constant(ring.ONE, self.kind)
        for _ in range(e):
            out = out * self
        return out


def _as_elem(c) -> RingElem:
    if isinstance(c, RingElem):
        return c
    if isinstance(c, int):
        return RingElem(c, 0)
    a, b = c
    return RingElem(a, b)


def _lift(other, kind: DerivationKind) -> SkewPoly:
    if isinstance(other, SkewPoly):
        return other
    if isinstance(other, (RingElem, int)):
        return SkewPoly.constant(_as_elem(other), kind)
    raise TypeError(f"cannot combine SkewPoly with {type(other).__name__}")


def _same_kind(f: SkewPoly, g: SkewPoly) -> DerivationKind:
    if f.kind is not g.kind:
        raise MixedDerivation(
            f"polynomials use different derivations ({f.kind.value} vs {g.kind.value})"
        )
    return f.kind


def skew_add(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    kind = _same_kind(f, g)
    a, b = f._codes, g._codes
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = _ADD[out[i]][c]
    return SkewPoly._from_codes(out, kind)


def _xpow_terms(code: int, n: int, delta_tab: Sequence[int]) -> tuple[tuple[int, int], ...]:
    """(degree, coefficient code) pairs of x^n * a."""
    if n % 2 == 0:
        return ((n, code),)
    return ((n, _THETA[code]), (n - 1, delta_tab[code]))


def x_pow_times(a: RingElem, n: int, kind: DerivationKind = DEFAULT_KIND) -> SkewPoly:
    """Expand ``x^n * a`` as a polynomial with coefficients on the left."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = [0] * (n + 1)
    for deg, c in _xpow_terms(_as_elem(a).code, n, ring._DELTA[kind]):
        out[deg] = _ADD[out[deg]][c]
    return SkewPoly._from_codes(out, kind)


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Product ``f * g``; each term is ``f_i * (x^i g_j) * x^j``."""
    kind = _same_kind(f, g)
    fc, gc = f._codes, g._codes
    if not fc or not gc:
        return SkewPoly.zero(kind)
    dtab = ring._DELTA[kind]
    out = [0] * (len(fc) + len(gc) - 1)
    for i, fi in enumerate(fc):
        if fi == 0:
            continue
        mrow = _MUL[fi]
        for j, gj in enumerate(gc):
            if gj == 0:
                continue
            for deg, c in _xpow_terms(gj, i, dtab):
                k = deg + j
                out[k] = _ADD[out[k]][mrow[c]]
    return SkewPoly._from_codes(out, kind)


def right_divide(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Return ``(q, r)`` with ``f = q*g + r`` and ``deg r < deg g``.

    The leading coefficient of ``g`` must be a unit. Eliminating the top
    term of the running remainder at degree offset ``d`` uses the quotient
    coefficient ``lead(r) * theta^d(lead(g))^-1``, since ``x^d`` moves past
    ``lead(g)`` as ``theta^d``.
    """
    kind = _same_kind(f, g)
    if g.is_zero():
        raise DivisionByZeroPolynomial("right division by the zero polynomial")
    lead = g.leading
    if not ring.is_unit(lead):
        raise NonUnitLeadingCoefficient(f"leading coefficient {lead} of divisor is not a unit")
    inv_even = ring.inverse(lead).code
    inv_odd = ring.inverse(ring.theta(lead)).code

    dg = len(g._codes) - 1
    rem = list(f._codes)
    while rem and rem[-1] == 0:
        rem.pop()
    if len(rem) - 1 < dg:
        return SkewPoly.zero(kind), SkewPoly._from_codes(rem, kind)
    quo = [0] * (len(rem) - dg)
    dtab = ring._DELTA[kind]
    gc = g._codes
    while len(rem) - 1 >= dg:
        d = len(rem) - 1 - dg
        c = _MUL[rem[-1]][inv_odd if d % 2 else inv_even]
        quo[d] = _ADD[quo[d]][c]
        # rem -= (c x^d) * g
        mrow = _MUL[c]
        for j, gj in enumerate(gc):
            for deg, t in _xpow_terms(gj, d, dtab):
                k = deg + j
                rem[k] = _ADD[rem[k]][_NEG[mrow[t]]]
        while rem and rem[-1] == 0:
            rem.pop()
    return SkewPoly._from_codes(quo, kind), SkewPoly._from_codes(rem, kind)


def is_central(f: SkewPoly) -> bool:
    """Central iff every coefficient is in Z4 and odd-degree coefficients vanish."""
    return all(c.b == 0 and (i % 2 == 0 or c.a == 0) for i, c in enumerate(f.coeffs))


def commutation_witness(f: SkewPoly) -> Optional[SkewPoly]:
    """Return ``v`` or ``x`` if ``f`` fails to commute with it, else ``None``.

    Commuting with both generators of the ring is equivalent to being
    central, so this is an independent check on :func:`is_central`.
    """
    for w in (SkewPoly.constant(ring.V, f.kind), SkewPoly.x(f.kind)):
        if skew_mul(f, w) != skew_mul(w, f):
            return w
    return None


def right_divides_xn_minus_1(g: SkewPoly, n: int) -> Optional[SkewPoly]:
    """Return ``h`` with ``h*g = x^n - 1``, or ``None`` if ``g`` is no right divisor."""
    if not ring.is_unit(g.leading):
        raise NonUnitLeadingCoefficient(f"leading coefficient {g.leading} of g is not a unit")
    if not (0 <= g.degree <= n):
        raise ValueError(f"need 0 <= deg g <= n, got deg g = {g.degree}, n = {n}")
    q, r = right_divide(SkewPoly.xn_minus_1(n, g.kind), g)
    return q if r.is_zero() else None
