"""Precision management and the few multiprecision primitives the rest of the
package shares (pi, principal log, cached roots of unity, truncating output).

Values are plain ``gmpy2.mpfr`` / ``gmpy2.mpc`` objects; a
:class:`PrecisionContext` decides the MPFR precision they are produced at.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple, Union

import gmpy2
from gmpy2 import mpc, mpfr

MpReal = mpfr
MpComplex = mpc

DEFAULT_GUARD_DIGITS = 20
_LOG2_10 = math.log2(10)


class DomainError(ValueError):
    """Argument outside the domain of a numeric operation."""


@dataclass(frozen=True)
class PrecisionContext:
    target_digits: int = 100
    guard_digits: int = DEFAULT_GUARD_DIGITS

    def __post_init__(self) -> None:
        if self.target_digits < 1 or self.guard_digits < 1:
            raise ValueError("target_digits and guard_digits must be positive")
        if self.working_bits < math.ceil(self.target_digits * _LOG2_10) + 32:
            raise ValueError("guard_digits too small: need at least 32 guard bits")

    @property
    def working_bits(self) -> int:
        return math.ceil((self.target_digits + self.guard_digits) * _LOG2_10)

    @property
    def total_digits(self) -> int:
        return self.target_digits + self.guard_digits

    def local(self, extra_bits: int = 0):
        """Context manager running MPFR at this context's precision."""
        return gmpy2.context(gmpy2.get_context(), precision=self.working_bits + extra_bits)

    def mpf(self, x) -> mpfr:
        if isinstance(x, Fraction):
            x = gmpy2.mpq(x.numerator, x.denominator)
        return mpfr(x, self.working_bits)

    def eps(self, slack_digits: int = 0) -> mpfr:
        """10^-(target - slack) as an mpfr; the usual test threshold."""
        with self.local():
            return mpfr(10) ** (slack_digits - self.target_digits)


def pi(ctx: PrecisionContext) -> mpfr:
    with ctx.local():
        return gmpy2.const_pi()


def complex_log(z: Union[mpc, mpfr, int]) -> mpc:
    """Principal logarithm, imaginary part in (-pi, pi]."""
    z = mpc(z)
    if z == 0:
        raise DomainError("log of zero")
    if z.imag == 0 and gmpy2.is_signed(z.imag):
        z = mpc(z.real, 0)
    return gmpy2.log(z)


_ROOT_CACHE: Dict[Tuple[int, int], List[mpc]] = {}
_ROOT_LOCK = threading.Lock()


def _build_roots(L: int) -> List[mpc]:
    two_pi = 2 * gmpy2.const_pi()
    table: List[mpc] = [mpc(0)] * L
    half = L // 2 if L % 2 == 0 else None
    for j in range(L):
        if half is not None and j >= half:
            # exact antipodal symmetry: zeta^(j + L/2) == -zeta^j bitwise
            table[j] = -table[j - half]
            continue
        if j == 0:
            table[j] = mpc(1, 0)
        elif 4 * j == L:
            table[j] = mpc(0, 1)
        elif 2 * j > L:
            table[j] = table[L - j].conjugate()
        else:
            s, c = gmpy2.sin_cos(two_pi * j / L)
            table[j] = mpc(c, s)
    return table


def roots_of_unity(L: int, ctx: PrecisionContext) -> List[mpc]:
    """Table [exp(2 pi i j / L) for j in range(L)], cached per (L, precision)."""
    if L < 1:
        raise ValueError("L must be positive")
    key = (L, ctx.working_bits)
    table = _ROOT_CACHE.get(key)
    if table is None:
        with _ROOT_LOCK:
            table = _ROOT_CACHE.get(key)
            if table is None:
                with ctx.local():
                    table = _build_roots(L)
                _ROOT_CACHE[key] = table
    return table


def root_of_unity(j: int, L: int, ctx: PrecisionContext) -> mpc:
    return roots_of_unity(L, ctx)[j % L]


def to_fraction(x: mpfr) -> Fraction:
    q = gmpy2.mpq(x)
    return Fraction(int(q.numerator), int(q.denominator))


def truncate_decimal(x, digits: int) -> str:
    """Decimal string of x cut (not rounded) after ``digits`` fractional digits."""
    if digits < 0:
        raise ValueError("digits must be non-negative")
    if isinstance(x, int):
        x = Fraction(x)
    elif not isinstance(x, Fraction):
        x = to_fraction(x if isinstance(x, mpfr) else mpfr(x))
    neg = x < 0
    scaled = abs(x) * 10**digits
    n = scaled.numerator // scaled.denominator
    ip, fp = divmod(n, 10**digits)
    body = f"{ip}.{fp:0{digits}d}" if digits else f"{ip}"
    return ("-" if neg else "") + body


def parse_decimal(s: str, ctx: PrecisionContext) -> mpfr:
    with ctx.local():
        return mpfr(s)
