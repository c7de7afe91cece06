"""Build R-codes from generator text and compute parameters of derived Z4 codes.

Shared by the ``analyze``, ``verify`` and ``search`` commands.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence, Union

from . import ring
from .cyclic import (
    DEFAULT_SPAN_BOUND,
    RCode,
    closure_check,
    free_code_from_divisor,
    subcode_generators,
)
from .errors import NonUnitLeadingCoefficient, SkewZ4Error, SpanTooLarge
from .kernels import ordered_map
from .poly import SkewPoly, is_central, right_divides_xn_minus_1
from .ring import DerivationKind
from .textform import parse_poly, render_poly
from .z4 import DEFAULT_CODEWORD_BOUND, CodeParams, Z4Code, gray_image, plotkin_sum, residue_code, torsion_code

log = logging.getLogger(__name__)

SELECTORS = ("gray", "res", "tor", "plotkin")

Subcode = Union[int, str]  # an int k, or "free"

_PARAMS_RE = re.compile(r"^\[\s*(\d+)\s*,\s*4\^(\d+)\s*2\^(\d+)\s*,\s*(\d+)\s*\]$")


def parse_params(text: str) -> CodeParams:
    """Parse ``[n, 4^k1 2^k2, d]``."""
    m = _PARAMS_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse code parameters {text!r}")
    n, k1, k2, d = (int(x) for x in m.groups())
    return CodeParams(n, k1, k2, d)


def build_code(g: SkewPoly, n: int, k: Subcode) -> RCode:
    if k == "free":
        return free_code_from_divisor(g, n)
    return subcode_generators(g, n, int(k))


def derived_code(code: RCode, selector: str, plotkin_operand: str = "res") -> Z4Code:
    if selector == "gray":
        return gray_image(code)
    if selector == "res":
        return residue_code(code)
    if selector == "tor":
        return torsion_code(code)
    if selector == "plotkin":
        base = residue_code(code) if plotkin_operand == "res" else torsion_code(code)
        return plotkin_sum(base, base)
    raise ValueError(f"unknown selector {selector!r}; expected one of {', '.join(SELECTORS)}")


@dataclass
class Analysis:
    generator: str
    n: int
    k: Subcode
    kind: DerivationKind
    params: dict[str, CodeParams] = field(default_factory=dict)
    right_divisor: Optional[bool] = None
    cofactor: Optional[str] = None
    cofactor_central: Optional[bool] = None
    closure: Optional[dict] = None
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "generator": self.generator,
            "n": self.n,
            "k": self.k,
            "derivation": self.kind.value,
            "params": {s: p.as_dict() for s, p in self.params.items()},
            "right_divisor": self.right_divisor,
            "cofactor": self.cofactor,
            "cofactor_central": self.cofactor_central,
            "closure": self.closure,
            "notes": self.notes,
        }


def analyze(
    g: SkewPoly,
    n: int,
    k: Subcode,
    selectors: Sequence[str] = SELECTORS,
    plotkin_operand: str = "res",
    bound: int = DEFAULT_CODEWORD_BOUND,
    span_bound: int = DEFAULT_SPAN_BOUND,
    workers: Optional[int] = None,
    diagnostics: bool = True,
) -> Analysis:
    out = Analysis(render_poly(g), n, k, g.kind)
    code = build_code(g, n, k)
    for sel in selectors:
        out.params[sel] = derived_code(code, sel, plotkin_operand).params(bound, workers)
    if not diagnostics:
        return out
    if ring.is_unit(g.leading) and g.degree <= n:
        h = right_divides_xn_minus_1(g, n)
        out.right_divisor = h is not None
        if h is not None:
            out.cofactor = render_poly(h)
            out.cofactor_central = is_central(h)
    else:
        out.notes.append("leading coefficient is not a unit; divisibility not tested")
    try:
        out.closure = closure_check(code, span_bound, workers).as_dict()
    except SpanTooLarge as exc:
        out.notes.append(f"closure check skipped: {exc}")
    return out


# manifest


@dataclass(frozen=True)
class ManifestEntry:
    label: str
    generator: str
    n: int
    k: Subcode
    kind: DerivationKind
    expected: dict[str, CodeParams]
    plotkin_operand: str = "res"
    table: str = ""
    n_inferred: bool = False

    def poly(self) -> SkewPoly:
        return parse_poly(self.generator, self.kind)

    @classmethod
    def from_dict(cls, d: dict) -> "ManifestEntry":
        k = d["k"]
        return cls(
            label=d["label"],
            generator=d["generator"],
            n=int(d["n"]),
            k=k if k == "free" else int(k),
            kind=DerivationKind.parse(d.get("derivation", "1+2v")),
            expected={sel: parse_params(p) for sel, p in d["expected"].items()},
            plotkin_operand=d.get("plotkin_operand", "res"),
            table=d.get("table", ""),
            n_inferred=bool(d.get("n_inferred", False)),
        )


def default_manifest_path() -> Path:
    return Path(str(resources.files("skewz4") / "data" / "manifest.json"))


def load_manifest(path: Union[str, Path, None] = None) -> list[ManifestEntry]:
    p = Path(path) if path is not None else default_manifest_path()
    data = json.loads(p.read_text(encoding="utf-8"))
    entries = [ManifestEntry.from_dict(row) for row in data["rows"]]
    for e in entries:
        for sel in e.expected:
            if sel not in SELECTORS:
                raise ValueError(f"{e.label}: unknown selector {sel!r}")
    return entries


@dataclass
class RowResult:
    label: str
    selector: str
    expected: CodeParams
    computed: Optional[CodeParams]
    status: str  # PASS, FAIL or ERROR
    error: Optional[str] = None

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "selector": self.selector,
            "expected": self.expected.as_dict(),
            "computed": self.computed.as_dict() if self.computed else None,
            "status": self.status,
            "error": self.error,
        }


@dataclass
class VerificationReport:
    manifest: str
    rows: list[RowResult]

    @property
    def summary(self) -> dict:
        counts = {"total": len(self.rows), "pass": 0, "fail": 0, "error": 0}
        for r in self.rows:
            counts[r.status.lower()] += 1
        return counts

    @property
    def ok(self) -> bool:
        return all(r.status == "PASS" for r in self.rows)

    def as_dict(self) -> dict:
        return {
            "schema": "skewz4.verify/1",
            "manifest": self.manifest,
            "rows": [r.as_dict() for r in self.rows],
            "summary": self.summary,
        }


def verify_entry(entry: ManifestEntry, bound: int = DEFAULT_CODEWORD_BOUND) -> list[RowResult]:
    results = []
    try:
        code = build_code(entry.poly(), entry.n, entry.k)
    except (SkewZ4Error, ValueError) as exc:
        return [
            RowResult(entry.label, sel, exp, None, "ERROR", f"{type(exc).__name__}: {exc}")
            for sel, exp in entry.expected.items()
        ]
    for sel, exp in entry.expected.items():
        try:
            got = derived_code(code, sel, entry.plotkin_operand).params(bound, workers=1)
        except (SkewZ4Error, ValueError) as exc:
            results.append(RowResult(entry.label, sel, exp, None, "ERROR", f"{type(exc).__name__}: {exc}"))
            continue
        results.append(RowResult(entry.label, sel, exp, got, "PASS" if got == exp else "FAIL"))
    return results


def verify(
    path: Union[str, Path, None] = None,
    bound: int = DEFAULT_CODEWORD_BOUND,
    workers: Optional[int] = None,
) -> VerificationReport:
    entries = load_manifest(path)
    per_entry = ordered_map(lambda e: verify_entry(e, bound), entries, workers)
    rows = [r for group in per_entry for r in group]
    return VerificationReport(str(path) if path is not None else str(default_manifest_path()), rows)
