"""Exact Bernoulli numbers, Bernoulli polynomials and chi-Bernoulli numbers."""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import gmpy2
from gmpy2 import mpc, mpfr

from .characters import Character
from .mp import PrecisionContext, roots_of_unity


class BernoulliCache:
    """Exact B_0..B_n (B_1 = -1/2), grown on demand via tangent numbers."""

    def __init__(self) -> None:
        self._values: List[Fraction] = [Fraction(1), Fraction(-1, 2)]
        self._lock = threading.Lock()

    def _extend(self, n: int) -> None:
        # Brent-Harvey integer recurrence for tangent numbers T_1..T_m;
        # B_2k = (-1)^(k-1) 2k T_k / (4^k (4^k - 1))
        m = n // 2 + 1
        T = [0] * (m + 1)
        T[1] = 1
        for k in range(2, m + 1):
            T[k] = (k - 1) * T[k - 1]
        for k in range(2, m + 1):
            for j in range(k, m + 1):
                T[j] = (j - k) * T[j - 1] + (j - k + 2) * T[j]
        vals: List[Fraction] = [Fraction(1), Fraction(-1, 2)]
        for k in range(1, m + 1):
            four_k = 4**k
            b = Fraction((-1) ** (k - 1) * 2 * k * T[k], four_k * (four_k - 1))
            vals.extend([b, Fraction(0)])
        self._values = vals

    def get(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("Bernoulli index must be non-negative")
        if n >= len(self._values):
            with self._lock:
                if n >= len(self._values):
                    self._extend(max(n, 2 * len(self._values)))
        return self._values[n]

    def upto(self, n: int) -> List[Fraction]:
        self.get(n)
        return self._values[: n + 1]


_CACHE = BernoulliCache()


def bernoulli_number(n: int) -> Fraction:
    return _CACHE.get(n)


def bernoulli_poly(n: int, x, ctx: PrecisionContext) -> mpfr:
    """B_n(x) = sum_j C(n, j) B_j x^(n - j), evaluated by Horner in x."""
    bs = _CACHE.upto(n)
    with ctx.local():
        x = mpfr(x) if not isinstance(x, Fraction) else ctx.mpf(x)
        acc = mpfr(0)
        for j in range(n + 1):
            c = math.comb(n, j) * bs[j]
            acc = acc * x + gmpy2.mpq(c.numerator, c.denominator)
        return acc


@lru_cache(maxsize=512)
def _common_denominator(n: int) -> int:
    return math.lcm(*(b.denominator for b in _CACHE.upto(n)))


@lru_cache(maxsize=8192)
def scaled_bernoulli_row(n: int, F: int, q: int) -> Tuple[Tuple[int, ...], int]:
    """Exact F^(n-1) B_n(a/F) for a in [0, F), as (numerators, shared denominator).

    Entries with gcd(a, q) > 1 are set to 0 since every caller multiplies
    them by a character value that vanishes there.
    """
    lam = _common_denominator(n)
    bs = _CACHE.upto(n)
    # F^(n-1) B_n(a/F) = (1/F) sum_j C(n,j) B_j F^j a^(n-j)
    coeffs = [math.comb(n, j) * bs[j].numerator * (lam // bs[j].denominator) * F**j for j in range(n + 1)]
    nums: List[int] = []
    for a in range(F):
        if math.gcd(a, q) != 1:
            nums.append(0)
            continue
        acc = 0
        for c in coeffs:
            acc = acc * a + c
        nums.append(acc)
    return tuple(nums), lam * F


def _exact_buckets(chi: Character, n: int, F: int) -> Tuple[List[int], int]:
    nums, den = scaled_bernoulli_row(n, F, chi.q)
    L = chi.order
    buckets = [0] * L
    table = chi.table
    q = chi.q
    for a in range(F):
        t = table[a % q]
        if t is not None:
            buckets[t] += nums[a]
    if L % 2 == 0:
        half = L // 2
        buckets = [buckets[e] - buckets[e + half] for e in range(half)] + [0] * half
    return buckets, den


class InvalidPeriod(ValueError):
    pass


_CHI_B_CACHE: Dict[Tuple, mpc] = {}
_CHI_B_LOCK = threading.Lock()


def chi_bernoulli(chi: Character, n: int, F: Optional[int] = None, ctx: Optional[PrecisionContext] = None) -> mpc:
    """B_n(chi) = F^(n-1) sum_{a<F} chi(a) B_n(a/F) for a period F of chi (default q)."""
    if ctx is None:
        ctx = PrecisionContext()
    F = chi.q if F is None else F
    if F < 1 or F % chi.q:
        raise InvalidPeriod(f"period {F} is not a multiple of the modulus {chi.q}")
    if n < 1:
        raise ValueError("chi_bernoulli needs n >= 1")
    key = (chi.key, n, F, ctx.working_bits)
    hit = _CHI_B_CACHE.get(key)
    if hit is not None:
        return hit
    buckets, den = _exact_buckets(chi, n, F)
    big = max((abs(b) for b in buckets), default=0)
    extra = max(0, big.bit_length() - den.bit_length() + 1) if big else 0
    roots = roots_of_unity(chi.order, ctx) if extra == 0 else None
    with ctx.local(extra):
        if roots is None:
            roots = _roots_at(chi.order, ctx, extra)
        acc = mpc(0)
        for e, b in enumerate(buckets):
            if b:
                acc += roots[e] * gmpy2.mpq(b, den)
    with _CHI_B_LOCK:
        _CHI_B_CACHE[key] = acc
    return acc


def _roots_at(L: int, ctx: PrecisionContext, extra: int) -> Sequence[mpc]:
    bigger = PrecisionContext(ctx.target_digits, ctx.guard_digits + math.ceil(extra / math.log2(10)))
    return roots_of_unity(L, bigger)
