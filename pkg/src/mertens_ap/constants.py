"""Assembly of M(q, a), B(q, a), C(q, a) and of the global constants gamma and
B, with truncation bounds, parameter selection and digit certification."""

from __future__ import annotations

import logging
import math
import threading
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import gmpy2
from gmpy2 import mpc, mpfr

from .arith import coprime_residues, euler_phi, prime_divisors, primes_upto
from .bernoulli import bernoulli_number
from .characters import Character, build_group, trivial_character
from .lfunctions import EmParams, LEvaluator, TailAssembly, em_error_bound, evaluator
from .mp import PrecisionContext, roots_of_unity

log = logging.getLogger(__name__)

DEFAULT_CUTOFF = 9600
DEFAULT_K = 26
_LN10 = math.log(10)


class NumericFault(ArithmeticError):
    """Raised when a computed constant fails its realness check."""


@dataclass(frozen=True)
class Params:
    q: int
    P: int  # prime cutoff A*q
    K: int
    N: int
    T: int
    m_max: int

    @property
    def A(self) -> Fraction:
        return Fraction(self.P, self.q)

    @property
    def em(self) -> EmParams:
        return EmParams(self.N, self.T)

    def as_dict(self) -> Dict[str, object]:
        A = self.A
        return {
            "A": A.numerator if A.denominator == 1 else f"{A.numerator}/{A.denominator}",
            "P": self.P,
            "K": self.K,
            "N": self.N,
            "T": self.T,
            "m_max": self.m_max,
        }


@dataclass
class ConstantRecord:
    q: int
    a: int
    kind: str  # "M", "B" or "C"
    value: mpfr
    error_bound: mpfr
    certified_digits: int
    params: Params
    log_value: Optional[mpfr] = None  # log C(q, a) for kind "C"

    @property
    def key(self) -> Tuple[int, int, str]:
        return (self.q, self.a, self.kind)


# ---------------------------------------------------------------- bounds


def _log10_E1(q: int, P: int, K: int) -> float:
    phi = euler_phi(q)
    if phi == 1:
        return -math.inf
    return (math.log(2) + (1 - K) * math.log(P) + math.log(phi - 1) - 2 * math.log(K) - math.log(P - 1)) / _LN10


def _log10_E2(q: int, K: int, N: int, T: int, U: float) -> float:
    phi = euler_phi(q)
    if phi == 1:
        return -math.inf
    bT = abs(bernoulli_number(T))
    lb = math.log(bT.numerator) - math.log(bT.denominator)
    num = math.log(2 * (phi - 1)) + (T - 2) * math.log(K + T - 2) + T * math.log(q) + lb
    den = math.log(N - 1) + math.log(U) + (T - 1) * math.log(N) + math.lgamma(T + 1)
    return (num - den) / _LN10


def bound_E1(q: int, A, K: int, ctx: PrecisionContext) -> mpfr:
    """2 (Aq)^(1-K) (phi(q) - 1) / (K^2 (Aq - 1))."""
    Aq = Fraction(A) * q
    if Aq.denominator != 1:
        raise ValueError("A*q must be an integer cutoff")
    Aq = int(Aq)
    phi = euler_phi(q)
    with ctx.local():
        return 2 * mpfr(Aq) ** (1 - K) * (phi - 1) / (K * K * (Aq - 1))


def bound_E2(q: int, K: int, N: int, T: int, U, ctx: PrecisionContext) -> mpfr:
    """2 (phi-1) (K+T-2)^(T-2) q^T |B_T| / ((N-1) U N^(T-1) T!)."""
    with ctx.local():
        U = mpfr(U)
        if not U > 0:
            raise ValueError("U must be positive")
        phi = euler_phi(q)
        c = Fraction(2 * (phi - 1) * (K + T - 2) ** (T - 2) * q**T) * abs(bernoulli_number(T)) / math.factorial(T)
        return gmpy2.mpq(c.numerator, c.denominator) / ((N - 1) * U * mpfr(N) ** (T - 1))


def tail_bound(q_chars: int, P: int, K: int, m: int, ctx: PrecisionContext) -> mpfr:
    """Moebius truncation bound for sum_{k > K} mu(k)/k log L_P(chi^k, k m),
    summed over ``q_chars`` characters (|log L_P(psi, s)| <= 2 P^(1-s)/(s-1))."""
    k1 = K + 1
    with ctx.local():
        return 2 * q_chars * mpfr(P) ** (1 - m * k1) / (k1 * (m * k1 - 1) * (1 - mpfr(P) ** (-m)))


def certify_digits(value, total_bound, ctx: PrecisionContext) -> int:
    """Largest d with total_bound + 10 ulps < 10^-d, capped at target + guard."""
    with ctx.local():
        total_bound = mpfr(total_bound)
        if not total_bound > 0:
            raise ValueError("total bound must be positive")
        slack = 10 * abs(mpfr(value)) * mpfr(2) ** (1 - ctx.working_bits)
        x = total_bound + slack
        if x >= 1:
            return 0
        d = int(gmpy2.floor(-gmpy2.log10(x)))
        while d > 0 and mpfr(10) ** (-d) <= x:
            d -= 1
    return min(d, ctx.total_digits)


# -------------------------------------------------------- param selection


def _m_max(q: int, D: int) -> int:
    base = math.log(3) if q % 2 == 0 else math.log(2)
    return math.ceil((D + 10) * _LN10 / base)


def k_max(m: int, D: int, P: int) -> int:
    return max(2, math.ceil((D + 10) * _LN10 / (m * math.log(P))))


def _cutoff(q: int) -> int:
    return DEFAULT_CUTOFF if 2 * q <= DEFAULT_CUTOFF else 2 * q


def _min_K(q: int, P: int, D: int) -> int:
    K = 2
    while _log10_E1(q, P, K) >= -(D + 3) - math.log10(2):
        K += 1
    return K


def _ok(q: int, P: int, K: int, N: int, T: int, D: int) -> bool:
    e1 = _log10_E1(q, P, K)
    e2 = _log10_E2(q, K, N, T, 0.5)
    hi, lo = max(e1, e2), min(e1, e2)
    tot = hi + math.log10(1 + 10 ** max(lo - hi, -300.0)) if hi > -math.inf else hi
    return tot < -(D + 3)


def select_params(q: int, D: int = 100) -> Params:
    """Truncation schedule for modulus q and a D-digit target."""
    if q < 3:
        raise ValueError("q must be >= 3")
    if not 20 <= D <= 1000:
        raise ValueError("D must be in [20, 1000]")
    P = _cutoff(q)
    K = DEFAULT_K if D == 100 else _min_K(q, P, D)
    m_max = _m_max(q, D)
    if D == 100 and 3 <= q <= 10:
        return Params(q, P, K, (8400 // q + 1) * q, 58, m_max)
    if D == 100 and 90 <= q <= 100:
        return Params(q, P, K, (27720 // q + 1) * q, 88, m_max)
    if D == 100:
        # lockstep walk from the nearest published anchor
        if q < 90:
            N, T = (8400 // q + 1) * q, 58
        else:
            N, T = (27720 // q + 1) * q, 88
        while not _ok(q, P, K, N, T, D):
            N += q
            T += 2
        return Params(q, P, K, N, T, m_max)
    return _search_params(q, P, K, D, m_max)


def _smallest_N(q: int, P: int, K: int, T: int, D: int, hi_cap: int) -> Optional[int]:
    """Smallest multiple N >= 2q of q with _ok, by bisection; None above hi_cap."""
    lo, hi = 2, 2
    while not _ok(q, P, K, hi * q, T, D):
        lo = hi
        hi *= 2
        if hi * q > hi_cap:
            return None
    if lo == hi:
        return hi * q
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _ok(q, P, K, mid * q, T, D):
            hi = mid
        else:
            lo = mid
    return hi * q


def _search_params(q: int, P: int, K: int, D: int, m_max: int) -> Params:
    phi = euler_phi(q)
    best = None
    hi_cap = 10**8
    for T in range(2, 4 * D + 202, 2):
        N = _smallest_N(q, P, K, T, D, hi_cap)
        if N is None:
            continue
        cost = 2.0 * N * phi / q + T * phi * 4 + T * T * q * 0.01
        if best is None or cost < best[0]:
            best = (cost, N, T)
            hi_cap = min(hi_cap, int(cost * q / (2 * phi)) + q)
    if best is None:
        raise ValueError(f"no Euler-Maclaurin parameters reach {D} digits for q={q}")
    return Params(q, P, K, best[1], best[2], m_max)


# --------------------------------------------------------- global constants

_GLOBAL_CACHE: Dict[Tuple[str, int], mpfr] = {}
_GLOBAL_LOCK = threading.Lock()


def gamma_params(digits: int) -> Tuple[int, int]:
    N0 = max(10, digits // 2)
    target = -(digits + 10)
    for j in range(1, 10 * digits):
        # |B_2j| / (2j N0^2j) ~ 2 (2j)! / ((2 pi N0)^2j 2j)
        v = (math.log(2) + math.lgamma(2 * j + 1) - 2 * j * math.log(2 * math.pi * N0) - math.log(2 * j)) / _LN10
        if v < target:
            return N0, j - 1 if j > 1 else 1
    raise ValueError("gamma parameters did not converge")  # pragma: no cover


def compute_gamma(ctx: PrecisionContext, N0: Optional[int] = None, J: Optional[int] = None) -> mpfr:
    """Euler's constant from the Euler-Maclaurin expansion of the harmonic sum."""
    if N0 is None and J is None:
        key = ("gamma", ctx.working_bits)
        hit = _GLOBAL_CACHE.get(key)
        if hit is not None:
            return hit
    dN, dJ = gamma_params(ctx.total_digits)
    N0 = N0 or dN
    J = J or dJ
    with ctx.local():
        H = mpfr(0)
        for r in range(N0, 0, -1):
            H += 1 / mpfr(r)
        Nf = mpfr(N0)
        g = H - gmpy2.log(Nf) - 1 / (2 * Nf)
        inv2 = 1 / (Nf * Nf)
        pw = inv2
        for j in range(1, J + 1):
            b = bernoulli_number(2 * j)
            g += gmpy2.mpq(b.numerator, b.denominator * 2 * j) * pw
            pw *= inv2
    if N0 == dN and J == dJ:
        _GLOBAL_CACHE[("gamma", ctx.working_bits)] = g
    return g


def compute_meissel_mertens(ctx: PrecisionContext, P0: int = 1000) -> mpfr:
    """B = sum_p (log(1 - 1/p) + 1/p), via the trivial-character tail expansion."""
    key = ("B", ctx.working_bits, P0)
    hit = _GLOBAL_CACHE.get(key)
    if hit is not None:
        return hit
    D = ctx.total_digits
    ev = LEvaluator(1, P0, EmParams(2, 2), ctx)
    chi0 = trivial_character(1)
    with ctx.local():
        head = mpfr(0)
        for p in primes_upto(P0):
            x = 1 / mpfr(p)
            head += gmpy2.log1p(-x) + x
        tail = mpc(0)
        m = 2
        while (m - 1) * math.log2(P0) <= ctx.working_bits + 20:
            tail += ev.prime_tail_sum(chi0, m, k_max(m, D, P0)) / m
            m += 1
        value = head - tail.real
    _GLOBAL_CACHE[key] = value
    return value


# ------------------------------------------------------ per-modulus engine


class ModulusRun:
    """Per-character sums for one modulus, shared by the M, B and C pipelines."""

    def __init__(self, q: int, params: Params, ctx: PrecisionContext) -> None:
        if params.q != q:
            raise ValueError("params were selected for a different modulus")
        self.q, self.params, self.ctx = q, params, ctx
        self.D = ctx.target_digits
        self.group = build_group(q)
        self.phi = euler_phi(q)
        self.ev: LEvaluator = evaluator(q, params.P, params.em, ctx)
        self.assembly_M = TailAssembly(params.P, params.em)
        self.assembly_BC = TailAssembly(params.P, params.em)
        self._S1: Dict[Tuple, mpc] = {}
        self._W: Dict[Tuple, mpc] = {}
        self.residues = coprime_residues(q)

    # -- character sums
    def S1(self, chi: Character) -> mpc:
        """sum_{p > P} chi(p)/p through the K-truncated Moebius expansion."""
        v = self._S1.get(chi.key)
        if v is None:
            v = self.ev.prime_tail_sum(chi, 1, self.params.K, self.assembly_M)
            self._S1[chi.key] = v
        return v

    def head(self, chi: Character, m: int) -> mpc:
        return self.ev._char_dot(chi, self.ev.prime_power_sums(m))

    def W(self, chi: Character) -> mpc:
        """sum_{m = 2}^{m_max} (1/m) sum_p chi(p)/p^m (all primes)."""
        v = self._W.get(chi.key)
        if v is not None:
            return v
        P = self.params.P
        cut = self.ctx.working_bits + 20
        with self.ctx.local():
            acc = mpc(0)
            for m in range(2, self.params.m_max + 1):
                term = self.head(chi, m)
                if (m - 1) * math.log2(P) <= cut:
                    term += self.ev.prime_tail_sum(chi, m, k_max(m, self.D, P), self.assembly_BC)
                acc += term / m
        self._W[chi.key] = acc
        return acc

    def conj_value(self, chi: Character, a: int) -> mpc:
        t = chi.table[a % self.q]
        if t is None:
            return mpc(0)
        return roots_of_unity(chi.order, self.ctx)[(-t) % chi.order]

    def combine(self, values: Dict[Tuple, mpc], a: int) -> mpc:
        with self.ctx.local():
            acc = mpc(0)
            for chi in self.group.nonprincipal:
                acc += self.conj_value(chi, a) * values[chi.key]
            return acc

    def _real(self, z: mpc, what: str) -> mpfr:
        with self.ctx.local():
            lim = mpfr(10) ** (5 - self.D)
            if abs(z.imag) >= lim:
                raise NumericFault(f"{what}: imaginary residue {float(abs(z.imag)):.3g} exceeds threshold")
            return z.real

    # -- error bounds
    def U(self, assembly: TailAssembly) -> mpfr:
        with self.ctx.local():
            return assembly.U if assembly.U is not None else mpfr(1)

    def err_M(self) -> mpfr:
        p = self.params
        with self.ctx.local():
            e1 = bound_E1(self.q, p.A, p.K, self.ctx)
            e2 = bound_E2(self.q, p.K, p.N, p.T, self.U(self.assembly_M), self.ctx)
            return e1 + e2

    def err_W(self) -> mpfr:
        """Truncation error of W(chi), summed over nonprincipal characters."""
        p, D, ctx = self.params, self.D, self.ctx
        nchi = self.phi - 1
        cut = ctx.working_bits + 20
        with ctx.local():
            U = self.U(self.assembly_BC)
            tot = mpfr(0)
            for m in range(2, p.m_max + 1):
                if (m - 1) * math.log2(p.P) > cut:
                    break
                K = k_max(m, D, p.P)
                em_err = mpfr(0)
                for k in range(1, K + 1):
                    em_err += em_error_bound(self.q, k * m, p.em, ctx) / k
                tot += (tail_bound(nchi, p.P, K, m, ctx) + nchi * em_err / U) / m
            p0 = 3 if self.q % 2 == 0 else 2
            M1 = p.m_max + 1
            tot += 2 * nchi * mpfr(p0) ** (-M1) * (1 + mpfr(p0) / p.m_max) / M1
            return tot

    def _global_slack(self) -> mpfr:
        with self.ctx.local():
            return mpfr(10) ** (-self.ctx.total_digits)

    # -- the three constants
    def compute_M(self) -> List[ConstantRecord]:
        q, ctx, P = self.q, self.ctx, self.params.P
        gamma = compute_gamma(ctx)
        B = compute_meissel_mertens(ctx)
        S = {chi.key: self.S1(chi) for chi in self.group.nonprincipal}
        with ctx.local():
            inv = {p: 1 / mpfr(p) for p in primes_upto(P)}
            M_q = gamma + B - sum((inv[p] for p in prime_divisors(q)), mpfr(0))
            M_q -= sum((v for p, v in inv.items() if q % p), mpfr(0))
            by_class: Dict[int, mpfr] = {}
            for p, v in inv.items():
                by_class[p % q] = by_class.get(p % q, mpfr(0)) + v
            err = (self.err_M() + self._global_slack()) / self.phi
        out = []
        for a in self.residues:
            with ctx.local():
                z = self.combine(S, a)
                val = self._real(z, f"M({q},{a})")
                val = (self.phi * by_class.get(a, mpfr(0)) + M_q + val) / self.phi
            out.append(ConstantRecord(q, a, "M", val, err, certify_digits(val, err, ctx), self.params))
        return out

    def compute_B(self) -> List[ConstantRecord]:
        q, ctx = self.q, self.ctx
        B = compute_meissel_mertens(ctx)
        W = {chi.key: self.W(chi) for chi in self.group.nonprincipal}
        with ctx.local():
            Bq = B
            for p in prime_divisors(q):
                x = 1 / mpfr(p)
                Bq -= gmpy2.log1p(-x) + x
            err = (self.err_W() + self._global_slack()) / self.phi
        out = []
        for a in self.residues:
            with ctx.local():
                val = self._real(self.combine(W, a), f"B({q},{a})")
                val = (Bq - val) / self.phi
            out.append(ConstantRecord(q, a, "B", val, err, certify_digits(val, err, ctx), self.params))
        return out

    def compute_C(self) -> List[ConstantRecord]:
        q, ctx = self.q, self.ctx
        gamma = compute_gamma(ctx)
        with ctx.local():
            V = {chi.key: self.S1(chi) + self.head(chi, 1) + self.W(chi) for chi in self.group.nonprincipal}
            base = -gamma + gmpy2.log(mpfr(q) / self.phi)
            err_log = (self.err_M() + self.err_W() + self._global_slack()) / self.phi
        out = []
        for a in self.residues:
            with ctx.local():
                val = self._real(self.combine(V, a), f"C({q},{a})")
                logc = (base - val) / self.phi
                c = gmpy2.exp(logc)
                err = c * gmpy2.expm1(err_log)
            rec = ConstantRecord(q, a, "C", c, err, certify_digits(c, err, ctx), self.params, log_value=logc)
            out.append(rec)
        return out


def compute_M_all(q: int, params: Optional[Params] = None, ctx: Optional[PrecisionContext] = None) -> List[ConstantRecord]:
    ctx = ctx or PrecisionContext()
    params = params or select_params(q, ctx.target_digits)
    return ModulusRun(q, params, ctx).compute_M()


def compute_B_all(q: int, params: Optional[Params] = None, ctx: Optional[PrecisionContext] = None) -> List[ConstantRecord]:
    ctx = ctx or PrecisionContext()
    params = params or select_params(q, ctx.target_digits)
    return ModulusRun(q, params, ctx).compute_B()


def compute_C_all(q: int, params: Optional[Params] = None, ctx: Optional[PrecisionContext] = None) -> List[ConstantRecord]:
    ctx = ctx or PrecisionContext()
    params = params or select_params(q, ctx.target_digits)
    return ModulusRun(q, params, ctx).compute_C()


def compute_all(q: int, kinds=("M", "B", "C"), ctx: Optional[PrecisionContext] = None, params: Optional[Params] = None) -> List[ConstantRecord]:
    """Every requested kind for one modulus, sharing L-value caches."""
    ctx = ctx or PrecisionContext()
    params = params or select_params(q, ctx.target_digits)
    run = ModulusRun(q, params, ctx)
    out: List[ConstantRecord] = []
    for kind in kinds:
        out.extend({"M": run.compute_M, "B": run.compute_B, "C": run.compute_C}[kind]())
    return out
