"""Consistency identities between computed constants, identity counting, and
brute-force sieve oracles for the defining limits."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import gmpy2
import numpy as np
from gmpy2 import mpfr

from .arith import coprime_residues, euler_phi, prime_count, prime_divisors, sieve_primes
from .mp import PrecisionContext

Number = Union[mpfr, int, float, str]


@dataclass(frozen=True)
class IdentityReport:
    kind: str
    operands: Tuple
    residual: mpfr
    threshold: mpfr

    @property
    def passed(self) -> bool:
        return bool(self.residual < self.threshold)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def as_dict(self) -> Dict[str, object]:
        return {
            "kind": self.kind,
            "operands": list(self.operands),
            "residual": f"{float(self.residual):.3e}",
            "threshold": f"{float(self.threshold):.3e}",
            "verdict": self.verdict,
        }


def default_threshold(ctx: PrecisionContext) -> mpfr:
    """10^-(target - 5): five digits of slack below certification."""
    return ctx.eps(5)


def _values(records: Iterable, q: int, kind: str) -> Dict[int, mpfr]:
    """{a: value} for one modulus and kind out of a record collection."""
    out: Dict[int, mpfr] = {}
    for r in records:
        if r.q == q and r.kind == kind:
            out[r.a] = r.value
    return out


def _require_complete(vals: Mapping[int, mpfr], q: int, kind: str) -> None:
    missing = [a for a in coprime_residues(q) if a not in vals]
    if missing:
        raise ValueError(f"records for {kind}(q={q}) are missing residues {missing[:5]}")


def _to_mpfr(x: Number, ctx: PrecisionContext) -> mpfr:
    with ctx.local():
        return mpfr(x)


def _b_correction(p: int) -> mpfr:
    # the summand of B at a single prime, under the caller's context
    x = 1 / mpfr(p)
    return gmpy2.log1p(-x) + x


def _modulus_two(kind: str, gamma: Optional[mpfr], B: Optional[mpfr]) -> Optional[mpfr]:
    # the single class mod 2 is pinned by the sum over a
    if B is None:
        return None
    if kind == "M":
        return None if gamma is None else gamma + B - mpfr(1) / 2
    return B - _b_correction(2)


# ---------------------------------------------------------------- identities


def check_sum_over_a(
    q: int, records: Iterable, gamma: Number, B: Number, ctx: PrecisionContext, threshold: Optional[mpfr] = None
) -> IdentityReport:
    """sum_a M(q, a) = gamma + B - sum_{p | q} 1/p."""
    vals = _values(records, q, "M")
    _require_complete(vals, q, "M")
    thr = default_threshold(ctx) if threshold is None else threshold
    with ctx.local():
        lhs = sum((vals[a] for a in coprime_residues(q)), mpfr(0))
        rhs = _to_mpfr(gamma, ctx) + _to_mpfr(B, ctx)
        for p in prime_divisors(q):
            rhs -= 1 / mpfr(p)
        res = abs(lhs - rhs)
    return IdentityReport("sum-over-a", (q,), res, thr)


_CLASS_KIND = {"M": "sum-over-classes", "B": "B-sum-over-classes"}


def check_sum_over_classes(
    q1: int,
    q2: int,
    records: Iterable,
    ctx: PrecisionContext,
    threshold: Optional[mpfr] = None,
    kind: str = "M",
    gamma: Optional[Number] = None,
    B: Optional[Number] = None,
) -> List[IdentityReport]:
    """X(q1, a) = sum_j X(q2, a + j q1) + sum_{p | q2, p = a (q1)} f(p), one report per a.

    f(p) = 1/p for X = M and log(1 - 1/p) + 1/p for X = B.  A modulus of 2
    needs no records: its only class is fixed by gamma and B.
    """
    if q1 <= 1 or q2 <= q1 or q2 % q1:
        raise ValueError(f"need 1 < q1 < q2 with q1 | q2, got ({q1}, {q2})")
    if kind not in ("M", "B"):
        raise ValueError("kind must be M or B")
    records = list(records)
    thr = default_threshold(ctx) if threshold is None else threshold
    low = _values(records, q1, kind)
    high = _values(records, q2, kind)
    with ctx.local():
        if q1 == 2 and 1 not in low:
            g = None if gamma is None else _to_mpfr(gamma, ctx)
            b = None if B is None else _to_mpfr(B, ctx)
            v = _modulus_two(kind, g, b)
            if v is None:
                raise ValueError("modulus 2 identities need gamma and B")
            low = {1: v}
        _require_complete(low, q1, kind)
        _require_complete(high, q2, kind)
        reports = []
        for a in coprime_residues(q1):
            rhs = mpfr(0)
            for j in range(q2 // q1):
                b = a + j * q1
                if math.gcd(b, q2) == 1:
                    rhs += high[b]
            for p in prime_divisors(q2):
                if p % q1 == a:
                    rhs += 1 / mpfr(p) if kind == "M" else _b_correction(p)
            res = abs(low[a] - rhs)
            reports.append(IdentityReport(_CLASS_KIND[kind], (q1, q2, a), res, thr))
    return reports


def check_b_variants(
    target: Union[int, Tuple[int, int]],
    records: Iterable,
    B: Number,
    ctx: PrecisionContext,
    threshold: Optional[mpfr] = None,
) -> List[IdentityReport]:
    """B analogues: sum_a B(q, a) = B - sum_{p | q} (log(1 - 1/p) + 1/p), or the
    class refinement for a pair (q1, q2)."""
    if isinstance(target, tuple):
        q1, q2 = target
        return check_sum_over_classes(q1, q2, records, ctx, threshold, kind="B", B=B)
    q = target
    vals = _values(records, q, "B")
    _require_complete(vals, q, "B")
    thr = default_threshold(ctx) if threshold is None else threshold
    with ctx.local():
        lhs = sum((vals[a] for a in coprime_residues(q)), mpfr(0))
        rhs = _to_mpfr(B, ctx)
        for p in prime_divisors(q):
            rhs -= _b_correction(p)
        res = abs(lhs - rhs)
    return [IdentityReport("B-sum-over-a", (q,), res, thr)]


def check_three_constants(M_rec, B_rec, C_rec, ctx: PrecisionContext, threshold: Optional[mpfr] = None) -> IdentityReport:
    """M(q, a) = B(q, a) - log C(q, a)."""
    if not (M_rec.q == B_rec.q == C_rec.q and M_rec.a == B_rec.a == C_rec.a):
        raise ValueError("three-constants check needs records for the same (q, a)")
    if (M_rec.kind, B_rec.kind, C_rec.kind) != ("M", "B", "C"):
        raise ValueError("records must be of kinds M, B, C in that order")
    thr = default_threshold(ctx) if threshold is None else threshold
    with ctx.local():
        logC = gmpy2.log(mpfr(C_rec.value))
        res = abs(mpfr(M_rec.value) - mpfr(B_rec.value) + logC)
    return IdentityReport("three-constants", (M_rec.q, M_rec.a), res, thr)


def verify_records(
    records: Sequence, gamma: Number, B: Number, ctx: PrecisionContext, threshold: Optional[mpfr] = None
) -> List[IdentityReport]:
    """Every identity the record set supports: sums over a, all class refinements
    (M and B), and three-constants for each complete (q, a) triple."""
    records = list(records)
    by_kind: Dict[str, set] = {"M": set(), "B": set(), "C": set()}
    for r in records:
        by_kind.setdefault(r.kind, set()).add(r.q)
    complete = {
        kind: {q for q in qs if set(_values(records, q, kind)) >= set(coprime_residues(q))} for kind, qs in by_kind.items()
    }
    out: List[IdentityReport] = []
    for q in sorted(complete["M"]):
        out.append(check_sum_over_a(q, records, gamma, B, ctx, threshold))
    for q in sorted(complete["B"]):
        out.extend(check_b_variants(q, records, B, ctx, threshold))
    for kind in ("M", "B"):
        qs = complete[kind]
        for q2 in sorted(qs):
            for q1 in range(2, q2):
                if q2 % q1 == 0 and (q1 == 2 or q1 in qs):
                    out.extend(check_sum_over_classes(q1, q2, records, ctx, threshold, kind=kind, gamma=gamma, B=B))
    index = {(r.q, r.a, r.kind): r for r in records}
    for (q, a, kind), m in sorted(index.items()):
        if kind != "M":
            continue
        b, c = index.get((q, a, "B")), index.get((q, a, "C"))
        if b is not None and c is not None:
            out.append(check_three_constants(m, b, c, ctx, threshold))
    return out


# ---------------------------------------------------------------- counting


def count_identities_direct(Q: int) -> int:
    """Class refinements counted one by one: a pair q1 | q2 with 1 < q1 < q2
    gives phi(q1) identities."""
    return sum(euler_phi(d) for q2 in range(3, Q + 1) for d in range(2, q2) if q2 % d == 0)


def enumerate_identities(Q: int, include_n1: bool = False) -> Tuple[int, int]:
    """(total, independent) class-refinement identity counts for moduli up to Q."""
    if Q < 3:
        raise ValueError("Q must be at least 3")
    total = sum(q - 1 - euler_phi(q) for q in range(3, Q + 1))
    start = 1 if include_n1 else 2
    independent = sum(prime_count(Q // n) * euler_phi(n) for n in range(start, Q + 1))
    return total, independent


# ------------------------------------------------------------------- oracles

_SEGMENT = 1 << 21


def _segmented_primes(x: int):
    """Yield numpy arrays of the primes <= x, segment by segment, ascending."""
    if x < 2:
        return
    root = math.isqrt(x)
    base = np.array(sieve_primes(root), dtype=np.int64)
    for lo in range(0, x + 1, _SEGMENT):
        hi = min(lo + _SEGMENT, x + 1)
        mark = np.ones(hi - lo, dtype=bool)
        if lo == 0:
            mark[: min(2, hi)] = False
        for p in base:
            p = int(p)
            if p * p >= hi:
                break
            start = max(p * p, (lo + p - 1) // p * p)
            mark[start - lo :: p] = False
        yield np.flatnonzero(mark).astype(np.int64) + lo


@lru_cache(maxsize=32)
def class_sums(q: int, x: int) -> Tuple[Tuple[float, ...], Tuple[float, ...]]:
    """Per residue b mod q: (sum 1/p, sum log(1 - 1/p)) over primes p <= x, p = b."""
    recip: List[List[float]] = [[] for _ in range(q)]
    logs: List[List[float]] = [[] for _ in range(q)]
    for ps in _segmented_primes(x):
        r = ps % q
        inv = 1.0 / ps.astype(np.float64)
        s1 = np.bincount(r, weights=inv, minlength=q)
        s2 = np.bincount(r, weights=np.log1p(-inv), minlength=q)
        for b in range(q):
            recip[b].append(float(s1[b]))
            logs[b].append(float(s2[b]))
    return tuple(math.fsum(v) for v in recip), tuple(math.fsum(v) for v in logs)


def _check_class(q: int, a: int) -> None:
    if q < 1 or math.gcd(a, q) != 1:
        raise ValueError(f"need gcd(a, q) = 1, got a={a}, q={q}")


def oracle_prime_sum(q: int, a: int, x: int) -> float:
    """sum_{p <= x, p = a (q)} 1/p - log log x / phi(q) in double precision."""
    _check_class(q, a)
    recip, _ = class_sums(q, int(x))
    return recip[a % q] - math.log(math.log(x)) / euler_phi(q)


def oracle_euler_product(q: int, a: int, x: int) -> float:
    """prod_{p <= x, p = a (q)} (1 - 1/p) * (log x)^(1/phi(q)), which tends to C(q, a)."""
    _check_class(q, a)
    _, logs = class_sums(q, int(x))
    return math.exp(logs[a % q] + math.log(math.log(x)) / euler_phi(q))
