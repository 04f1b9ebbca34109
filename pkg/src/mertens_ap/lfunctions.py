"""Euler-Maclaurin evaluation of Dirichlet L-functions and zeta at integer
arguments, logarithms of Euler-product tails, and Moebius-accelerated prime
tail sums.

Everything that depends only on the modulus (partial sums split by residue
class, prime-power sums split by residue class) is computed once per
:class:`LEvaluator` and shared by all characters, so a single L-value costs
O(order + T) complex operations once the tables exist.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import gmpy2
from gmpy2 import mpc, mpfr

from .arith import mobius, prime_divisors, primes_upto
from .bernoulli import bernoulli_number, chi_bernoulli
from .characters import Character, power
from .mp import DomainError, PrecisionContext, complex_log, roots_of_unity


class UnreliableU(ArithmeticError):
    """An L-value is too close to zero for its logarithm to be trusted."""


class BranchError(ArithmeticError):
    pass


@dataclass(frozen=True)
class EmParams:
    N: int
    T: int

    def __post_init__(self) -> None:
        if self.T < 2 or self.T % 2:
            raise ValueError(f"T must be even and >= 2, got {self.T}")
        if self.N < 1:
            raise ValueError("N must be positive")

    def check_period(self, q: int) -> None:
        if self.N % q or self.N < 2 * q:
            raise ValueError(f"N={self.N} must be a multiple of q={q} with N >= 2q")


@dataclass
class TailAssembly:
    """Shared bookkeeping for one run: cutoff, EM params, running min |L_{T,N}|."""

    P: int
    em: EmParams
    U: Optional[mpfr] = None
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def observe(self, value: mpfr) -> None:
        with self._lock:
            if self.U is None or value < self.U:
                self.U = value


def rising(s: int, n: int) -> int:
    """s (s+1) ... (s+n-1); empty product 1 when n == 0."""
    out = 1
    for i in range(n):
        out *= s + i
    return out


def em_error_bound(q: int, s: int, em: EmParams, ctx: PrecisionContext) -> mpfr:
    """q^T |B_T| / T! * s...(s+T-2) * N^(1-s-T): error of one L_{T,N} value."""
    T, N = em.T, em.N
    val = Fraction(q**T) * abs(bernoulli_number(T)) / math.factorial(T) * rising(s, T - 1)
    with ctx.local():
        return gmpy2.mpq(val.numerator, val.denominator) * mpfr(N) ** (1 - s - T)


def _term_limit(cut: int, s: int) -> float:
    """Largest r with r^-s above 2^-cut (inf when that exceeds any range we use)."""
    e = cut / s
    return math.inf if e > 1000 else 2.0**e


def zeta_em(s: int, N: int, T: int, ctx: PrecisionContext) -> mpfr:
    """zeta(s), s >= 2, by Euler-Maclaurin with N-term head and T/2 correction terms."""
    if s <= 1:
        raise DomainError("zeta_em needs s >= 2")
    if T % 2 or T < 2:
        raise ValueError("T must be even and positive")
    cut = ctx.working_bits + 20
    # terms r^-s below 2^-cut are dropped
    rmax = min(N - 1, int(min(_term_limit(cut, s), N)) + 1)
    with ctx.local():
        acc = mpfr(0)
        for r in range(rmax, 0, -1):
            acc += mpfr(r) ** (-s)
        Nf = mpfr(N)
        Ns = Nf ** (-s)
        acc += Nf * Ns / (s - 1) + Ns / 2
        # r_j = rising(s, 2j-1) N^(-s-2j+1), updated incrementally
        r_j = s * Ns / Nf
        inv_N2 = 1 / (Nf * Nf)
        for j in range(1, T // 2 + 1):
            acc += _bernoulli_over_factorial(2 * j, ctx.working_bits) * r_j
            r_j *= (s + 2 * j - 1) * (s + 2 * j) * inv_N2
        return acc


@lru_cache(maxsize=None)
def _bernoulli_over_factorial(n: int, bits: int) -> mpfr:
    c = bernoulli_number(n) / math.factorial(n)
    return mpfr(gmpy2.mpq(c.numerator, c.denominator), bits)


def _log10_zeta_term(s: int, j: int, N: int) -> float:
    # log10 |B_2j / (2j)! * rising(s, 2j-1) * N^(-s-2j+1)|, B_2j ~ 2 (2j)! / (2 pi)^2j
    lr = math.lgamma(s + 2 * j - 1) - math.lgamma(s)
    return (math.log(2) - 2 * j * math.log(2 * math.pi) + lr - (s + 2 * j - 1) * math.log(N)) / math.log(10)


def zeta_params(s: int, digits: int) -> Tuple[int, int]:
    """(N, T) whose first omitted EM term is below 10^-(digits + 5)."""
    N = max(8, digits // 2)
    while True:
        prev = math.inf
        for j in range(1, 4 * digits):
            v = _log10_zeta_term(s, j, N)
            if v < -(digits + 5):
                return N, max(2, 2 * (j - 1))
            if v > prev:
                break
            prev = v
        N *= 2


_ZETA_CACHE: Dict[Tuple[int, int], mpfr] = {}


def zeta_value(s: int, ctx: PrecisionContext) -> mpfr:
    """zeta(s) at full working precision, cached."""
    key = (s, ctx.working_bits)
    v = _ZETA_CACHE.get(key)
    if v is None:
        N, T = zeta_params(s, ctx.total_digits)
        v = zeta_em(s, N, T, ctx)
        _ZETA_CACHE[key] = v
    return v


def l_principal(q: int, s: int, ctx: PrecisionContext) -> mpfr:
    """L(chi_0 mod q, s) = zeta(s) * prod_{p | q} (1 - p^-s)."""
    if s <= 1:
        raise DomainError("principal L-values are only used for s >= 2")
    z = zeta_value(s, ctx)
    with ctx.local():
        for p in prime_divisors(q):
            z *= 1 - mpfr(p) ** (-s)
        return z


class LEvaluator:
    """Per-(q, P, N, T, precision) tables and caches for L-values and tails."""

    def __init__(self, q: int, P: int, em: EmParams, ctx: PrecisionContext) -> None:
        if P < 1:
            raise ValueError(f"prime cutoff must be positive, got {P}")
        if q > 1:
            em.check_period(q)
        self.q, self.P, self.em, self.ctx = q, P, em, ctx
        self.units = [b for b in range(q) if math.gcd(b, q) == 1]
        self.primes = [p for p in primes_upto(P) if q == 1 or q % p]
        self.bits = ctx.working_bits
        self._cut = self.bits + 20
        self._partials: Dict[int, List[mpfr]] = {}
        self._prime_pows: Dict[int, List[mpfr]] = {}
        self._corr: Dict[int, List[Tuple[int, mpfr]]] = {}
        self._lvals: Dict[Tuple, mpc] = {}
        self._logtails: Dict[Tuple, mpc] = {}
        self._bern: Dict[Tuple, List[mpc]] = {}
        self._pmin = self.primes[0] if self.primes else None

    # ---- residue-class tables ----------------------------------------

    def partial_sums(self, s: int) -> List[mpfr]:
        """sum_{r < N, r = b mod q} r^-s for every residue b (zeros off units)."""
        tab = self._partials.get(s)
        if tab is not None:
            return tab
        q, N = self.q, self.em.N
        rmax = N - 1
        # terms below 2^-cut do not matter
        lim = _term_limit(self._cut, s)
        if lim < rmax:
            rmax = int(lim) + 1
        with self.ctx.local():
            acc = [mpfr(0)] * q
            for r in range(rmax, 0, -1):
                b = r % q
                if math.gcd(b, q) == 1:
                    acc[b] += mpfr(r) ** (-s)
        self._partials[s] = acc
        return acc

    def prime_power_sums(self, t: int) -> List[mpfr]:
        """sum_{p <= P, p = b mod q} p^-t for every residue b."""
        tab = self._prime_pows.get(t)
        if tab is not None:
            return tab
        q = self.q
        lim = _term_limit(self._cut, t)
        with self.ctx.local():
            acc = [mpfr(0)] * q
            for p in self.primes:
                if p > lim:
                    break
                acc[p % q] += mpfr(p) ** (-t)
        self._prime_pows[t] = acc
        return acc

    def _char_dot(self, chi: Character, vec: List[mpfr], k: int = 1) -> mpc:
        """sum_b chi(b)^k vec[b], bucketing by exponent before complex products."""
        L = chi.order
        if L == 1:
            with self.ctx.local():
                return mpc(sum((vec[b] for b in self.units), mpfr(0)))
        table = chi.table
        with self.ctx.local():
            buckets = [mpfr(0)] * L
            for b in self.units:
                buckets[(table[b] * k) % L] += vec[b]
            roots = roots_of_unity(L, self.ctx)
            acc = mpc(0)
            for e, v in enumerate(buckets):
                if v:
                    acc += roots[e] * v
            return acc

    # ---- Euler-Maclaurin ---------------------------------------------

    def _corrections(self, s: int) -> List[Tuple[int, mpfr]]:
        tab = self._corr.get(s)
        if tab is None:
            N, T = self.em.N, self.em.T
            tab = []
            with self.ctx.local():
                for j in range(1, T + 1):
                    c = Fraction((-1) ** (j - 1) * rising(s, j - 1), math.factorial(j))
                    tab.append((j, gmpy2.mpq(c.numerator, c.denominator) * mpfr(N) ** (-(s + j - 1))))
            self._corr[s] = tab
        return tab

    def chi_bernoullis(self, chi: Character) -> List[mpc]:
        bl = self._bern.get(chi.key)
        if bl is None:
            bl = [chi_bernoulli(chi, j, self.q, self.ctx) for j in range(1, self.em.T + 1)]
            self._bern[chi.key] = bl
        return bl

    def l_em(self, chi: Character, s: int) -> mpc:
        if chi.is_principal:
            raise ValueError("l_em is for nonprincipal characters; use l_principal")
        if chi.q != self.q:
            raise ValueError("character modulus does not match evaluator")
        key = (chi.key, s)
        v = self._lvals.get(key)
        if v is not None:
            return v
        head = self._char_dot(chi, self.partial_sums(s))
        bl = self.chi_bernoullis(chi)
        with self.ctx.local():
            corr = mpc(0)
            for j, c in self._corrections(s):
                b = bl[j - 1]
                if b:
                    corr += b * c
            v = head - corr
        self._lvals[key] = v
        return v

    # ---- Euler-product tails -----------------------------------------

    def log_euler_head(self, chi: Character, s: int) -> mpc:
        """sum_{p <= P} log(1 - chi(p) p^-s), expanded as -sum_n chi^n(p) p^-ns / n."""
        if self._pmin is None:
            return mpc(0)
        if s < 1:
            raise BranchError("tail logarithms need s >= 1")
        acc = mpc(0)
        n = 1
        while True:
            t = n * s
            if t * math.log2(self._pmin) > self._cut:
                break
            term = self._char_dot(chi, self.prime_power_sums(t), n)
            with self.ctx.local():
                acc -= term / n
            n += 1
        return acc

    def log_l_tail(self, chi: Character, s: int, assembly: Optional[TailAssembly] = None) -> mpc:
        """log L_P(chi, s) = log L(chi, s) + sum_{p <= P} log(1 - chi(p) p^-s)."""
        key = (chi.key, s)
        v = self._logtails.get(key)
        if v is not None:
            return v
        if chi.is_principal:
            if s < 2:
                raise DomainError("principal tail needs s >= 2")
            with self.ctx.local():
                main = complex_log(l_principal(self.q, s, self.ctx))
        else:
            L = self.l_em(chi, s)
            with self.ctx.local():
                absL = abs(L)
                if assembly is not None:
                    assembly.observe(absL)
                if absL < 10 * em_error_bound(self.q, s, self.em, self.ctx):
                    raise UnreliableU(f"|L(chi, {s})| = {float(absL):.3g} is within EM error")
                main = complex_log(L)
        with self.ctx.local():
            v = main + self.log_euler_head(chi, s)
        self._logtails[key] = v
        return v

    def tail_terms(self, s_min: int) -> int:
        """Largest k with P^(-k s_min) still above working precision (at least 1)."""
        return max(1, math.ceil(self._cut / (s_min * math.log2(self.P + 1))))

    def prime_tail_sum(self, chi: Character, m: int, K: int, assembly: Optional[TailAssembly] = None) -> mpc:
        """sum_{p > P} chi(p) / p^m via sum_{k <= K} mu(k)/k log L_P(chi^k, k m)."""
        if m == 1 and chi.is_principal:
            raise DomainError("m = 1 needs a nonprincipal character")
        if K < 1:
            raise ValueError("K must be positive")
        acc = mpc(0)
        for k in range(1, K + 1):
            mu = mobius(k)
            if mu == 0:
                continue
            # beyond working precision the tail logarithm is exactly negligible
            if (k * m - 1) * math.log2(self.P) > self._cut + 8 and k > 1:
                break
            lt = self.log_l_tail(power(chi, k), k * m, assembly)
            with self.ctx.local():
                acc += lt * mu / k
        return acc


_EVALUATORS: Dict[Tuple[int, int, int, int, int], LEvaluator] = {}
_EVAL_LOCK = threading.Lock()


def evaluator(q: int, P: int, em: EmParams, ctx: PrecisionContext) -> LEvaluator:
    key = (q, P, em.N, em.T, ctx.working_bits)
    ev = _EVALUATORS.get(key)
    if ev is None:
        with _EVAL_LOCK:
            ev = _EVALUATORS.get(key)
            if ev is None:
                ev = LEvaluator(q, P, em, ctx)
                _EVALUATORS[key] = ev
    return ev


def clear_caches() -> None:
    _EVALUATORS.clear()


# Module-level entry points mirroring the evaluator methods.


def l_em(chi: Character, s: int, em: EmParams, ctx: PrecisionContext) -> mpc:
    return evaluator(chi.q, max(chi.q, 2), em, ctx).l_em(chi, s)


def log_l_tail(chi: Character, s: int, P: int, em: EmParams, assembly: Optional[TailAssembly], ctx: PrecisionContext) -> mpc:
    if P < 1:
        raise ValueError("P must be positive")
    return evaluator(chi.q, P, em, ctx).log_l_tail(chi, s, assembly)


def prime_tail_sum(chi: Character, m: int, P: int, K: int, em: EmParams, assembly: Optional[TailAssembly], ctx: PrecisionContext) -> mpc:
    return evaluator(chi.q, P, em, ctx).prime_tail_sum(chi, m, K, assembly)
