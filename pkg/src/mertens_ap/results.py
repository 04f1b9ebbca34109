"""Versioned JSON result files and the published table layout."""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import gmpy2
from gmpy2 import mpfr

from .constants import ConstantRecord, Params
from .mp import PrecisionContext, parse_decimal, truncate_decimal

FORMAT_NAME = "mertens-ap-results"
FORMAT_VERSION = 1
KIND_ORDER = {"M": 0, "B": 1, "C": 2}


class ResultFormatError(ValueError):
    pass


@dataclass(frozen=True)
class StoredRecord:
    """A ConstantRecord as persisted: every number is an exact decimal string."""

    q: int
    a: int
    kind: str
    value: str
    error_bound: str
    certified_digits: int
    params: Dict[str, object]

    @property
    def sort_key(self):
        return (self.q, KIND_ORDER.get(self.kind, 9), self.a)

    @classmethod
    def from_record(cls, rec: ConstantRecord, ctx: PrecisionContext) -> "StoredRecord":
        digits = max(ctx.total_digits, rec.certified_digits)
        return cls(
            q=rec.q,
            a=rec.a,
            kind=rec.kind,
            value=truncate_decimal(rec.value, digits),
            error_bound=format_bound(rec.error_bound),
            certified_digits=rec.certified_digits,
            params=rec.params.as_dict(),
        )

    def to_record(self, ctx: PrecisionContext) -> ConstantRecord:
        p = self.params
        params = Params(self.q, int(p["P"]), int(p["K"]), int(p["N"]), int(p["T"]), int(p["m_max"]))
        return ConstantRecord(
            self.q,
            self.a,
            self.kind,
            parse_decimal(self.value, ctx),
            parse_decimal(self.error_bound, ctx),
            self.certified_digits,
            params,
        )


def format_bound(x: mpfr, sig: int = 7) -> str:
    """Short decimal upper bound for a non-negative error (never rounds down)."""
    if x <= 0:
        return "0"
    mant, exp, _ = gmpy2.digits(x, 10, sig)
    m = int(mant) + 1  # one unit up covers the rounding in digits()
    if m >= 10**sig:
        m //= 10
        exp += 1
    s = str(m)
    return f"{s[0]}.{s[1:]}e{exp - 1}"


@dataclass
class ResultFile:
    target_digits: int
    guard_digits: int
    records: List[StoredRecord] = field(default_factory=list)
    identities: List[Dict[str, object]] = field(default_factory=list)
    timing: Dict[str, float] = field(default_factory=dict)

    @property
    def ctx(self) -> PrecisionContext:
        return PrecisionContext(self.target_digits, self.guard_digits)

    def sort(self) -> None:
        self.records.sort(key=lambda r: r.sort_key)

    def completed(self) -> set:
        """(q, kind) pairs with at least one stored record."""
        return {(r.q, r.kind) for r in self.records}

    def constant_records(self) -> List[ConstantRecord]:
        ctx = self.ctx
        return [r.to_record(ctx) for r in self.records]

    def without_timing(self) -> "ResultFile":
        return ResultFile(self.target_digits, self.guard_digits, list(self.records), list(self.identities), {})


def render(rf: ResultFile) -> str:
    doc = {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "context": {"target_digits": rf.target_digits, "guard_digits": rf.guard_digits},
        "records": [asdict(r) for r in sorted(rf.records, key=lambda r: r.sort_key)],
        "identities": rf.identities,
        "timing": rf.timing,
    }
    return json.dumps(doc, indent=1) + "\n"


def parse(text: str) -> ResultFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ResultFormatError(f"not a result file: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != FORMAT_NAME:
        raise ResultFormatError("missing or unknown format tag")
    if doc.get("version") != FORMAT_VERSION:
        raise ResultFormatError(f"unsupported version {doc.get('version')}")
    try:
        ctx = doc["context"]
        recs = []
        for r in doc["records"]:
            recs.append(
                StoredRecord(
                    q=int(r["q"]),
                    a=int(r["a"]),
                    kind=str(r["kind"]),
                    value=str(r["value"]),
                    error_bound=str(r["error_bound"]),
                    certified_digits=int(r["certified_digits"]),
                    params=dict(r["params"]),
                )
            )
        for r in recs:
            if r.kind not in KIND_ORDER:
                raise ResultFormatError(f"unknown kind {r.kind!r}")
            float(r.value)
        return ResultFile(
            target_digits=int(ctx["target_digits"]),
            guard_digits=int(ctx["guard_digits"]),
            records=recs,
            identities=list(doc.get("identities", [])),
            timing=dict(doc.get("timing", {})),
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ResultFormatError):
            raise
        raise ResultFormatError(f"malformed result file: {exc}") from exc


def load(path: str) -> ResultFile:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def save(rf: ResultFile, path: str) -> None:
    """Write-temp-then-rename so readers never see a partial file."""
    text = render(rf)
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", suffix=".json", dir=d)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# --------------------------------------------------------------- tables


def format_table(records: Sequence[StoredRecord], digits: int) -> str:
    """Rows q | a | value (truncated, sign-aligned, trailing ellipsis) | digits."""
    if digits <= 0:
        raise ValueError("digits to print must be positive")
    short = [r for r in records if r.certified_digits < digits]
    if short:
        r = short[0]
        raise ValueError(f"{r.kind}({r.q},{r.a}) is certified to {r.certified_digits} digits only")
    lines: List[str] = []
    kinds = sorted({r.kind for r in records}, key=lambda k: KIND_ORDER[k])
    for kind in kinds:
        rows = sorted((r for r in records if r.kind == kind), key=lambda r: r.sort_key)
        head = f"{'q':>4} | {'a':>4} | {kind + '(q,a)':<{digits + 4}} | digits"
        lines.append(head)
        lines.append("-" * len(head))
        prev_q: Optional[int] = None
        for r in rows:
            if prev_q is not None and r.q != prev_q:
                lines.append("")
            prev_q = r.q
            v = truncate_decimal(Fraction(r.value), digits)
            v = v if v.startswith("-") else " " + v
            lines.append(f"{r.q:>4} | {r.a:>4} | {v}… | {r.certified_digits:>6}")
        lines.append("")
    return "\n".join(lines).rstrip("\n") + "\n"
