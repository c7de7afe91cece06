"""Delta-cyclic codes over R: codes closed under the twisted shift.

A vector ``c = (c_0, ..., c_{n-1})`` is identified with the residue class of
``c_0 + c_1 x + ... + c_{n-1} x^(n-1)`` modulo the left ideal generated by
``x^n - 1``. Left multiplication by ``x`` is then the shift::

    T(c) = (theta(c_{n-1}) + delta(c_0), theta(c_0) + delta(c_1), ...,
            theta(c_{n-2}) + delta(c_{n-1}))

Codes are finite lists of generator vectors; the code itself is their left
R-linear span.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

from . import ring
from .errors import (
    DegreeTooLarge,
    NonUnitLeadingCoefficient,
    NotARightDivisor,
    NotFreeCode,
    OddLength,
    SpanTooLarge,
)
from .kernels import ordered_map, worker_count
from .poly import SkewPoly, right_divide, right_divides_xn_minus_1, skew_mul
from .ring import DEFAULT_KIND, ELEMENTS, ZERO, DerivationKind, RingElem

__all__ = [
    "RVector",
    "RMatrix",
    "RCode",
    "RSpan",
    "ClosureReport",
    "shift",
    "poly_of",
    "vector_of",
    "reduce_mod_xn_minus_1",
    "free_code_from_divisor",
    "subcode_generators",
    "generator_matrix",
    "generator_matrix_display",
    "parity_check_matrix",
    "dot",
    "times_transpose",
    "in_code_by_cofactor",
    "res_generators",
    "tor_generators",
    "res_generators_closed_form",
    "tor_generators_closed_form",
    "enumerate_span",
    "closure_check",
    "DEFAULT_SPAN_BOUND",
]

RVector = tuple[RingElem, ...]
RMatrix = tuple[RVector, ...]

DEFAULT_SPAN_BOUND = 16**6

# numpy views of the ring tables, indexed by element code a + 4b
_ADD_T = np.array(ring._ADD, dtype=np.uint8)
_THETA_T = np.array(ring._THETA, dtype=np.uint8)
_DELTA_T = {k: np.array(t, dtype=np.uint8) for k, t in ring._DELTA.items()}


@dataclass(frozen=True)
class RCode:
    n: int
    generators: tuple[RVector, ...]
    kind: DerivationKind = DEFAULT_KIND
    free_rank: Optional[int] = None
    generator_poly: Optional[SkewPoly] = None
    cofactor: Optional[SkewPoly] = None

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.n:
                raise ValueError(f"generator of length {len(g)} in a code of length {self.n}")
        if self.free_rank is not None and len(self.generators) != self.free_rank:
            raise ValueError("free code must list exactly free_rank generators")

    @property
    def is_free(self) -> bool:
        return self.free_rank is not None

    def generator_codes(self) -> np.ndarray:
        """Generators as a (k, n) array of element codes."""
        return np.array([[c.code for c in g] for g in self.generators], dtype=np.uint8).reshape(
            len(self.generators), self.n
        )


def _vec(entries) -> RVector:
    return tuple(e if isinstance(e, RingElem) else RingElem(*e) for e in entries)


def shift(c: Sequence[RingElem], kind: DerivationKind = DEFAULT_KIND) -> RVector:
    n = len(c)
    if n < 1:
        raise ValueError("shift needs n >= 1")
    return tuple(ring.theta(c[i - 1]) + ring.delta(c[i], kind) for i in range(n))


def poly_of(c: Sequence[RingElem], kind: DerivationKind = DEFAULT_KIND) -> SkewPoly:
    return SkewPoly(c, kind)


def reduce_mod_xn_minus_1(p: SkewPoly, n: int) -> SkewPoly:
    """Representative of degree < n of ``p`` modulo the left ideal <x^n - 1>."""
    if p.degree < n:
        return p
    return right_divide(p, SkewPoly.xn_minus_1(n, p.kind))[1]


def vector_of(p: SkewPoly, n: int) -> RVector:
    if p.degree >= n:
        raise DegreeTooLarge(f"degree {p.degree} polynomial does not fit length {n}")
    return tuple(p.coeff(i) for i in range(n))


def _x_times(c: RVector, i: int, kind: DerivationKind) -> RVector:
    for _ in range(i):
        c = shift(c, kind)
    return c


def free_code_from_divisor(g: SkewPoly, n: int) -> RCode:
    """The free code <g> with basis g, xg, ..., x^(n-k-1) g, where k = deg g."""
    if g.is_zero() or not ring.is_unit(g.leading):
        raise NonUnitLeadingCoefficient(f"leading coefficient of {g} is not a unit")
    h = right_divides_xn_minus_1(g, n)
    if h is None:
        raise NotARightDivisor(f"{g} is not a right divisor of x^{n}-1")
    k = int(g.degree)
    rank = n - k
    if rank == 0:
        return RCode(n, (), g.kind, free_rank=0, generator_poly=g, cofactor=h)
    first = vector_of(g, n)
    gens = [first]
    for _ in range(rank - 1):
        gens.append(shift(gens[-1], g.kind))
    return RCode(n, tuple(gens), g.kind, free_rank=rank, generator_poly=g, cofactor=h)


def subcode_generators(g: SkewPoly, n: int, k: int) -> RCode:
    """The subcode spanned over R by g, xg, ..., x^(k-1) g (no divisibility needed)."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k = {k}, n = {n}")
    first = vector_of(reduce_mod_xn_minus_1(g, n), n)
    gens = [first]
    for _ in range(k - 1):
        gens.append(shift(gens[-1], g.kind))
    return RCode(n, tuple(gens), g.kind, generator_poly=g)


def generator_matrix(code: RCode) -> RMatrix:
    if not code.is_free:
        raise NotFreeCode("generator matrix is defined for codes built from a right divisor")
    return tuple(code.generators)


def generator_matrix_display(g: SkewPoly, n: int) -> RMatrix:
    """Rows x^i g written out directly, without the shift operator.

    Even i: the coefficients of g starting at column i. Odd i: starting at
    column i - 1, the row
    ``delta(g_0), theta(g_0) + delta(g_1), ..., theta(g_{k-1}) + delta(g_k), theta(g_k)``.
    """
    kind = g.kind
    k = int(g.degree)
    gc = g.coeffs
    odd_row = [ring.delta(gc[0], kind)]
    odd_row += [ring.theta(gc[j - 1]) + ring.delta(gc[j], kind) for j in range(1, k + 1)]
    odd_row.append(ring.theta(gc[k]))
    rows = []
    for i in range(n - k):
        row = [ZERO] * n
        if i % 2 == 0:
            for j, c in enumerate(gc):
                row[i + j] = c
        else:
            for j, c in enumerate(odd_row):
                row[i - 1 + j] = c
        rows.append(tuple(row))
    return tuple(rows)


def _cofactor_coefficient(h: SkewPoly, i: int, m: int) -> RingElem:
    # coefficient of c_i in the x^m coefficient of c(x) h(x)
    kind = h.kind
    if i % 2 == 0:
        return h.coeff(m - i)
    return ring.theta(h.coeff(m - i)) + ring.delta(h.coeff(m - i + 1), kind)


def parity_check_matrix(g: SkewPoly, n: int) -> RMatrix:
    """(n - k) x n matrix H, k = deg h where h g = x^n - 1, with G H^T = 0.

    Row r collects the coefficients of c_0, ..., c_{n-1} in the x^(k + r)
    coefficient of c(x) h(x); these coefficients never wrap modulo x^n - 1.
    Odd columns carry theta(h_j) + delta(h_{j+1}), even columns h_j.
    """
    if n % 2:
        raise OddLength("the parity-check construction needs even length")
    h = right_divides_xn_minus_1(g, n)
    if h is None:
        raise NotARightDivisor(f"{g} is not a right divisor of x^{n}-1")
    k = int(h.degree)
    return tuple(
        tuple(_cofactor_coefficient(h, i, k + r) for i in range(n)) for r in range(n - k)
    )


def dot(x: Sequence[RingElem], y: Sequence[RingElem]) -> RingElem:
    total = ZERO
    for a, b in zip(x, y):
        total = total + a * b
    return total


def times_transpose(G: RMatrix, H: RMatrix) -> list[list[RingElem]]:
    """G H^T with the plain componentwise inner product."""
    return [[dot(g, h) for h in H] for g in G]


def in_code_by_cofactor(c: Sequence[RingElem], h: SkewPoly, n: int) -> bool:
    """Membership via c(x) h(x) = 0 in R[x]/<x^n - 1> (even n)."""
    prod = skew_mul(poly_of(c, h.kind), h)
    return reduce_mod_xn_minus_1(prod, n).is_zero()


# residue and torsion generators


def res_generators(code: RCode) -> list[list[int]]:
    """a-parts of the generators; their Z4-span is Res(C)."""
    return [[c.a for c in g] for g in code.generators]


def tor_generators(code: RCode) -> list[list[int]]:
    """(a + b)-parts of the generators; their Z4-span is Tor(C).

    Since v is idempotent, R = (1 - v)R x vR and v(a + bv) = (a + b)v, so
    the vectors b with bv in C are exactly the Z4-span of the (a + b)-parts.
    """
    return [[(c.a + c.b) % 4 for c in g] for g in code.generators]


def _closed_form_rows(g: SkewPoly, n: int, k: int, part: str) -> list[list[int]]:
    p = reduce_mod_xn_minus_1(g, n)
    a = [p.coeff(i).a for i in range(n)]
    b = [p.coeff(i).b for i in range(n)]
    m = ring.delta(ring.V, g.kind).a  # delta(a + bv) = m*b
    if part == "res":
        even = a
        odd = [(a[i - 1] + b[i - 1] + m * b[i]) % 4 for i in range(n)]
    else:
        even = [(a[i] + b[i]) % 4 for i in range(n)]
        odd = [(a[i - 1] + m * b[i]) % 4 for i in range(n)]
    rows = []
    for i in range(k):
        base, rot = (even, i) if i % 2 == 0 else (odd, i - 1)
        rows.append([base[(j - rot) % n] for j in range(n)])
    return rows


def res_generators_closed_form(g: SkewPoly, n: int, k: int) -> list[list[int]]:
    """Res of g_1..g_k written directly in terms of the a_i, b_i of g.

    g_{2j+1} is the rotation of g by 2j, so Res is the rotated a. g_{2j+2}
    rotates the vector with entries ``a_{i-1} + b_{i-1} + m b_i``, where m
    is 1 or 3 according to the derivation.
    """
    return _closed_form_rows(g, n, k, "res")


def tor_generators_closed_form(g: SkewPoly, n: int, k: int) -> list[list[int]]:
    """Tor counterpart: rotated ``a_i + b_i`` and ``a_{i-1} + m b_i``."""
    return _closed_form_rows(g, n, k, "tor")


# brute-force span


def _pack(codes: np.ndarray) -> np.ndarray:
    """One sortable key per row of element codes (4 bits per coordinate)."""
    n = codes.shape[1]
    weights = np.uint64(16) ** np.arange(min(n, 16), dtype=np.uint64)
    lo = (codes[:, : min(n, 16)].astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)
    if n <= 16:
        return lo
    hi = _pack(codes[:, 16:])
    return hi.astype(object) * (1 << 64) + lo.astype(object)


def _unpack(keys: np.ndarray, n: int) -> np.ndarray:
    out = np.empty((len(keys), n), dtype=np.uint8)
    vals = keys.copy()
    for j in range(n):
        out[:, j] = (vals % 16).astype(np.uint8)
        vals = vals // 16
    return out


class RSpan:
    """A deduplicated set of vectors in R^n, stored as sorted packed keys."""

    def __init__(self, n: int, keys: np.ndarray):
        self.n = n
        self.keys = keys

    @classmethod
    def from_codes(cls, codes: np.ndarray) -> "RSpan":
        return cls(codes.shape[1], np.unique(_pack(codes)))

    def __len__(self) -> int:
        return len(self.keys)

    def codes(self) -> np.ndarray:
        return _unpack(self.keys, self.n)

    def contains_codes(self, codes: np.ndarray) -> np.ndarray:
        probe = _pack(np.asarray(codes, dtype=np.uint8).reshape(-1, self.n))
        pos = np.searchsorted(self.keys, probe)
        pos = np.minimum(pos, len(self.keys) - 1)
        return self.keys[pos] == probe

    def __contains__(self, vec: Sequence[RingElem]) -> bool:
        return bool(self.contains_codes(np.array([[c.code for c in vec]], dtype=np.uint8))[0])

    def __iter__(self) -> Iterator[RVector]:
        for row in self.codes():
            yield tuple(ELEMENTS[int(c)] for c in row)

    def residue_set(self) -> set[tuple[int, ...]]:
        """{a : a + bv in C}."""
        a = self.codes() % 4
        return {tuple(int(x) for x in row) for row in np.unique(a, axis=0)}

    def torsion_set(self) -> set[tuple[int, ...]]:
        """{b : bv in C}."""
        c = self.codes()
        pure = c[(c % 4 == 0).all(axis=1)] // 4
        return {tuple(int(x) for x in row) for row in np.unique(pure, axis=0)}


_SCALAR_A = np.arange(16, dtype=np.int64) % 4
_SCALAR_B = np.arange(16, dtype=np.int64) // 4


def enumerate_span(
    code: RCode, bound: int = DEFAULT_SPAN_BOUND, workers: Optional[int] = None
) -> RSpan:
    """Every sum r_1 g_1 + ... + r_k g_k over all 16^k scalar tuples, deduplicated.

    This is the brute-force oracle: it does not use any structure of the
    generators. With r = s + tv and g = a + bv the product is
    ``s*a + (s*b + t*a + t*b) v``.
    """
    k, n = len(code.generators), code.n
    total = 16**k
    if total > bound:
        raise SpanTooLarge(f"16^{k} scalar tuples exceed the span bound {bound}")
    if k == 0:
        return RSpan.from_codes(np.zeros((1, n), dtype=np.uint8))
    G = code.generator_codes().astype(np.int64)
    Ga, Gb = G % 4, G // 4
    Gab = (Ga + Gb) % 4
    # outer chunks fix the leading scalars; inner blocks enumerate the rest
    inner = min(k, 4)
    outer = k - inner
    inner_idx = np.arange(16**inner, dtype=np.int64)
    inner_digits = (inner_idx[:, None] // (16 ** np.arange(inner, dtype=np.int64))) % 16
    Si, Ti = _SCALAR_A[inner_digits], _SCALAR_B[inner_digits]
    inner_a = Si @ Ga[:inner]
    inner_b = Si @ Gb[:inner] + Ti @ Gab[:inner]

    def chunk(prefix: int) -> np.ndarray:
        digits = [(prefix // 16**j) % 16 for j in range(outer)]
        base_a = np.zeros(n, dtype=np.int64)
        base_b = np.zeros(n, dtype=np.int64)
        for j, d in enumerate(digits):
            s, t = int(_SCALAR_A[d]), int(_SCALAR_B[d])
            base_a += s * Ga[inner + j]
            base_b += s * Gb[inner + j] + t * Gab[inner + j]
        A = (inner_a + base_a) % 4
        B = (inner_b + base_b) % 4
        return np.unique(_pack((A + 4 * B).astype(np.uint8)))

    parts = ordered_map(chunk, range(16**outer), worker_count(workers))
    return RSpan(n, np.unique(np.concatenate(parts)))


@dataclass(frozen=True)
class ClosureReport:
    is_cyclic: bool
    is_quasicyclic_2: bool
    is_delta_closed: bool

    def as_dict(self) -> dict:
        return {
            "is_cyclic": self.is_cyclic,
            "is_quasicyclic_2": self.is_quasicyclic_2,
            "is_delta_closed": self.is_delta_closed,
        }


def shift_codes(codes: np.ndarray, kind: DerivationKind) -> np.ndarray:
    """Vectorised shift on rows of element codes."""
    prev = np.roll(codes, 1, axis=1)
    return _ADD_T[_THETA_T[prev], _DELTA_T[kind][codes]]


def closure_check(
    code: RCode,
    bound: int = DEFAULT_SPAN_BOUND,
    workers: Optional[int] = None,
    span: Optional[RSpan] = None,
) -> ClosureReport:
    if span is None:
        span = enumerate_span(code, bound, workers)
    words = span.codes()
    return ClosureReport(
        is_cyclic=bool(span.contains_codes(np.roll(words, 1, axis=1)).all()),
        is_quasicyclic_2=bool(span.contains_codes(np.roll(words, 2, axis=1)).all()),
        is_delta_closed=bool(span.contains_codes(shift_codes(words, code.kind)).all()),
    )
