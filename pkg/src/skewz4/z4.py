"""Linear codes over Z4: standard form, type 4^k1 2^k2, minimum Lee distance.

Row reduction takes unit pivots first and then pivots equal to 2, which
brings any generator matrix to the block shape::

    [ I_k1   A     B   ]
    [ 0    2 I_k2  2 C ]

up to a column permutation. Unit rows take coefficients in Z4 and 2-rows
take coefficients in {0, 1}, so each codeword is produced exactly once and
``|C| = 4^k1 * 2^k2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING, Iterator, Optional, Sequence

import numpy as np

from . import kernels
from .errors import LengthMismatch, TooManyCodewords, ZeroCode

if TYPE_CHECKING:
    from .cyclic import RCode

__all__ = [
    "CodeParams",
    "StandardForm",
    "Z4Code",
    "standard_form",
    "min_lee_distance",
    "min_lee_distance_bruteforce",
    "enumerate_z4_codewords",
    "codeword_array",
    "gray_image",
    "residue_code",
    "torsion_code",
    "plotkin_sum",
    "DEFAULT_CODEWORD_BOUND",
]

DEFAULT_CODEWORD_BOUND = 2**32

_LEE = np.array([0, 1, 2, 1], dtype=np.int64)


@dataclass(frozen=True)
class CodeParams:
    n: int
    k1: int
    k2: int
    d_L: int

    def __str__(self) -> str:
        return f"[{self.n}, 4^{self.k1} 2^{self.k2}, {self.d_L}]"

    @property
    def cardinality(self) -> int:
        return 4**self.k1 * 2**self.k2

    def as_dict(self) -> dict:
        return {"n": self.n, "k1": self.k1, "k2": self.k2, "dL": self.d_L}

    @classmethod
    def from_dict(cls, d: dict) -> "CodeParams":
        return cls(int(d["n"]), int(d["k1"]), int(d["k2"]), int(d["dL"]))


@dataclass(frozen=True)
class StandardForm:
    """Reduced rows in the original column order.

    ``rows[:k1]`` have a 1 at their pivot column, ``rows[k1:]`` have a 2
    and only even entries. ``pivots`` lists the pivot columns in row order.
    """

    rows: np.ndarray
    k1: int
    k2: int
    pivots: tuple[int, ...]

    @property
    def column_order(self) -> tuple[int, ...]:
        """Column permutation that exposes the block shape: pivots first."""
        n = self.rows.shape[1]
        rest = tuple(c for c in range(n) if c not in self.pivots)
        return self.pivots + rest

    def permuted(self) -> np.ndarray:
        return self.rows[:, list(self.column_order)]

    def binary_generators(self) -> np.ndarray:
        """Rows whose 0/1 combinations give every codeword exactly once.

        A unit row ``r`` contributes ``r`` and ``2r`` (coefficient c = c0 + 2*c1);
        a 2-row contributes itself.
        """
        unit = self.rows[: self.k1]
        two = self.rows[self.k1 :]
        return np.concatenate([unit, (2 * unit) & 3, two]).astype(np.uint8)


def standard_form(rows, n: Optional[int] = None) -> StandardForm:
    """Row-reduce generators over Z4; the row space is unchanged."""
    M = np.array(rows, dtype=np.int64).reshape(-1, n if n is not None else np.shape(rows)[-1]) & 3
    m, ncols = M.shape
    pivots: list[int] = []
    r = 0

    # unit pivots
    while r < m:
        free_cols = [c for c in range(ncols) if c not in pivots]
        block = M[r:, free_cols]
        hits = np.argwhere(block & 1)
        if hits.size == 0:
            break
        i, jj = hits[0]
        i += r
        col = free_cols[jj]
        M[[r, i]] = M[[i, r]]
        M[r] = (M[r] * M[r, col]) & 3  # 1 and 3 are self-inverse mod 4
        for t in range(m):
            if t != r and M[t, col]:
                M[t] = (M[t] - M[t, col] * M[r]) & 3
        pivots.append(col)
        r += 1
    k1 = r

    # pivots equal to 2; rows below k1 are now all even
    while r < m:
        free_cols = [c for c in range(ncols) if c not in pivots]
        block = M[r:, free_cols]
        hits = np.argwhere(block)
        if hits.size == 0:
            break
        i, jj = hits[0]
        i += r
        col = free_cols[jj]
        M[[r, i]] = M[[i, r]]
        for t in range(m):
            if t == r:
                continue
            if t >= k1 and M[t, col]:
                M[t] = (M[t] - M[r]) & 3
            elif t < k1 and M[t, col] >= 2:
                M[t] = (M[t] - M[r]) & 3
        pivots.append(col)
        r += 1
    k2 = r - k1
    return StandardForm(M[:r].astype(np.uint8), k1, k2, tuple(pivots))


class Z4Code:
    """A linear code over Z4 given by generator rows."""

    def __init__(self, rows, n: Optional[int] = None, label: str = ""):
        arr = np.array(rows, dtype=np.int64)
        if arr.size == 0:
            if n is None:
                raise ValueError("length is required for a code without generators")
            arr = np.zeros((0, n), dtype=np.int64)
        if arr.ndim == 1:
            arr = arr[None, :]
        if n is not None and arr.shape[1] != n:
            raise LengthMismatch(f"rows have length {arr.shape[1]}, expected {n}")
        self.n = int(arr.shape[1])
        self.gen_rows = (arr & 3).astype(np.uint8)
        self.label = label

    def __repr__(self) -> str:
        return f"Z4Code(n={self.n}, rows={self.gen_rows.shape[0]}, type=4^{self.k1} 2^{self.k2})"

    @cached_property
    def standard(self) -> StandardForm:
        return standard_form(self.gen_rows, self.n)

    @property
    def k1(self) -> int:
        return self.standard.k1

    @property
    def k2(self) -> int:
        return self.standard.k2

    @property
    def cardinality(self) -> int:
        return 4**self.k1 * 2**self.k2

    def is_zero(self) -> bool:
        return self.k1 + self.k2 == 0

    def min_lee_distance(self, bound: int = DEFAULT_CODEWORD_BOUND, workers: Optional[int] = None) -> int:
        cached = self.__dict__.get("_dL")
        if cached is None:
            cached = min_lee_distance(self, bound=bound, workers=workers)
            self.__dict__["_dL"] = cached
        return cached

    def params(self, bound: int = DEFAULT_CODEWORD_BOUND, workers: Optional[int] = None) -> CodeParams:
        return CodeParams(self.n, self.k1, self.k2, self.min_lee_distance(bound, workers))

    def contains(self, word: Sequence[int]) -> bool:
        """Membership test by rank: appending ``word`` must not grow the code."""
        extended = Z4Code(np.vstack([self.gen_rows, np.asarray(word, dtype=np.int64)[None, :] & 3]))
        return extended.cardinality == self.cardinality


def _check_bound(code: Z4Code, bound: int) -> None:
    if code.cardinality > bound:
        raise TooManyCodewords(
            f"code has {code.cardinality} codewords, above the enumeration bound {bound}"
        )


def codeword_array(code: Z4Code, bound: int = DEFAULT_CODEWORD_BOUND) -> np.ndarray:
    """All codewords as a (|C|, n) uint8 array, each exactly once."""
    _check_bound(code, bound)
    gens = code.standard.binary_generators().astype(np.int64)
    k = gens.shape[0]
    total = 1 << k
    out = np.empty((total, code.n), dtype=np.uint8)
    block = 1 << min(k, 16)
    shifts = np.arange(k, dtype=np.int64)
    for start in range(0, total, block):
        idx = np.arange(start, start + block, dtype=np.int64)
        bits = (idx[:, None] >> shifts) & 1
        out[start : start + block] = (bits @ gens) & 3
    return out


def enumerate_z4_codewords(code: Z4Code, bound: int = DEFAULT_CODEWORD_BOUND) -> Iterator[tuple[int, ...]]:
    for row in codeword_array(code, bound):
        yield tuple(int(x) for x in row)


def min_lee_distance(code: Z4Code, bound: int = DEFAULT_CODEWORD_BOUND, workers: Optional[int] = None) -> int:
    """Exact minimum Lee weight of a nonzero codeword (= minimum Lee distance)."""
    if code.is_zero():
        raise ZeroCode("the zero code has no minimum distance")
    _check_bound(code, bound)
    return kernels.min_lee_weight(code.standard.binary_generators(), workers=workers)


def min_lee_distance_bruteforce(code: Z4Code, bound: int = 2**20) -> int:
    """Reference path: materialise every codeword, take the minimum weight."""
    if code.is_zero():
        raise ZeroCode("the zero code has no minimum distance")
    words = codeword_array(code, bound)
    w = _LEE[words].sum(axis=1)
    return int(w[w > 0].min())


def gray_image(code: "RCode") -> Z4Code:
    """Image under a+bv -> (a, a+b), coordinates interleaved.

    Generated by Phi(g) and Phi(v*g) for each generator g of the R-code.
    """
    rows = []
    for g in code.generators:
        rows.append([x for c in g for x in (c.a, (c.a + c.b) % 4)])
        rows.append([x for c in g for x in (0, (c.a + c.b) % 4)])
    return Z4Code(rows, n=2 * code.n)


def residue_code(code: "RCode") -> Z4Code:
    from .cyclic import res_generators

    return Z4Code(res_generators(code), n=code.n)


def torsion_code(code: "RCode") -> Z4Code:
    from .cyclic import tor_generators

    return Z4Code(tor_generators(code), n=code.n)


def plotkin_sum(A: Z4Code, B: Z4Code) -> Z4Code:
    """{(x | x + y) : x in A, y in B}."""
    if A.n != B.n:
        raise LengthMismatch(f"Plotkin sum needs equal lengths, got {A.n} and {B.n}")
    n = A.n
    top = np.hstack([A.gen_rows, A.gen_rows])
    bottom = np.hstack([np.zeros_like(B.gen_rows), B.gen_rows])
    return Z4Code(np.vstack([top, bottom]), n=2 * n)
