"""Seeded or exhaustive search over generator polynomials.

Candidates are evaluated in batches (optionally threaded) and emitted in
candidate order. A record is emitted when no earlier emitted record with the
same selector and length has at least its cardinality and minimum distance,
so the output is a running Pareto front per (selector, n).
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from . import ring
from .analysis import SELECTORS, Subcode, build_code, derived_code
from .cyclic import RCode
from .errors import SkewZ4Error
from .kernels import ordered_map
from .poly import SkewPoly, right_divides_xn_minus_1
from .ring import DEFAULT_KIND, ELEMENTS, UNITS, DerivationKind
from .textform import render_poly
from .z4 import DEFAULT_CODEWORD_BOUND, CodeParams

log = logging.getLogger(__name__)

_NONZERO = tuple(e for e in ELEMENTS if e)


@dataclass(frozen=True)
class SearchConfig:
    n_values: tuple[int, ...]
    degrees: tuple[int, ...]
    k_values: tuple[Subcode, ...] = ("free",)
    kind: DerivationKind = DEFAULT_KIND
    seed: int = 0
    samples: Optional[int] = None  # None means exhaustive
    bound: int = DEFAULT_CODEWORD_BOUND
    selectors: tuple[str, ...] = SELECTORS
    plotkin_operand: str = "res"

    @property
    def exhaustive(self) -> bool:
        return self.samples is None


@dataclass(frozen=True)
class SearchRecord:
    params: CodeParams
    generator: str
    kind: DerivationKind
    selector: str
    source_n: int
    k: Subcode

    def as_dict(self) -> dict:
        return {
            "n": self.params.n,
            "k1": self.params.k1,
            "k2": self.params.k2,
            "dL": self.params.d_L,
            "generator": self.generator,
            "kind": self.kind.value,
            "selector": self.selector,
            "source_n": self.source_n,
            "k": self.k,
        }


@dataclass
class SearchStats:
    visited: int = 0
    evaluated: int = 0
    skipped: int = 0
    failed: int = 0
    emitted: int = 0


@dataclass(frozen=True)
class Candidate:
    n: int
    k: Subcode
    poly: SkewPoly


def _valid(n: int, degree: int, k: Subcode) -> bool:
    if k == "free":
        return 0 < degree <= n
    return 0 <= degree < n and 1 <= int(k) <= n


def _leads(k: Subcode) -> Sequence[ring.RingElem]:
    # right division by x^n - 1 needs a unit leading coefficient
    return UNITS if k == "free" else _NONZERO


def candidates(config: SearchConfig) -> Iterator[Candidate]:
    """Exhaustive: lexicographic over (n, degree, k, coefficients). Sampled: seeded draws."""
    if config.exhaustive:
        for n in config.n_values:
            for d in config.degrees:
                for k in config.k_values:
                    if not _valid(n, d, k):
                        continue
                    for lead in _leads(k):
                        for low in itertools.product(ELEMENTS, repeat=d):
                            yield Candidate(n, k, SkewPoly(low + (lead,), config.kind))
        return
    combos = [
        (n, d, k)
        for n in config.n_values
        for d in config.degrees
        for k in config.k_values
        if _valid(n, d, k)
    ]
    if not combos:
        return
    rng = random.Random(config.seed)
    for _ in range(config.samples or 0):
        n, d, k = combos[rng.randrange(len(combos))]
        leads = _leads(k)
        low = tuple(ELEMENTS[rng.randrange(16)] for _ in range(d))
        lead = leads[rng.randrange(len(leads))]
        yield Candidate(n, k, SkewPoly(low + (lead,), config.kind))


def _evaluate(cand: Candidate, config: SearchConfig) -> tuple[str, list[tuple[str, CodeParams]]]:
    """Returns (status, results); status is 'ok', 'skip' or an error message."""
    g = cand.poly
    if cand.k == "free" and right_divides_xn_minus_1(g, cand.n) is None:
        return "skip", []
    try:
        code: RCode = build_code(g, cand.n, cand.k)
        out = []
        for sel in config.selectors:
            z = derived_code(code, sel, config.plotkin_operand)
            if z.is_zero():
                continue
            out.append((sel, z.params(config.bound, workers=1)))
        return "ok", out
    except SkewZ4Error as exc:
        return f"{type(exc).__name__}: {exc}", []


def search(
    config: SearchConfig,
    workers: Optional[int] = None,
    stats: Optional[SearchStats] = None,
    batch: int = 256,
) -> Iterator[SearchRecord]:
    stats = stats if stats is not None else SearchStats()
    front: dict[tuple[str, int], list[CodeParams]] = {}
    it = candidates(config)
    while True:
        chunk = list(itertools.islice(it, batch))
        if not chunk:
            return
        results = ordered_map(lambda c: _evaluate(c, config), chunk, workers)
        for cand, (status, found) in zip(chunk, results):
            stats.visited += 1
            if status == "skip":
                stats.skipped += 1
                continue
            if status != "ok":
                stats.failed += 1
                log.warning("candidate %s failed: %s", render_poly(cand.poly), status)
                continue
            stats.evaluated += 1
            for sel, p in found:
                group = front.setdefault((sel, p.n), [])
                if any(q.cardinality >= p.cardinality and q.d_L >= p.d_L for q in group):
                    continue
                group[:] = [q for q in group if not (p.cardinality >= q.cardinality and p.d_L >= q.d_L)]
                group.append(p)
                stats.emitted += 1
                yield SearchRecord(p, render_poly(cand.poly), config.kind, sel, cand.n, cand.k)
