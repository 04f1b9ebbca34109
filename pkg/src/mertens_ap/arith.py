"""Exact integer helpers: sieving, Moebius, totient, factorization, primitive roots."""

from __future__ import annotations

import math
from functools import lru_cache
from typing import List, Tuple

Factorization = List[Tuple[int, int]]


def sieve_primes(limit: int) -> List[int]:
    """Primes <= limit, ascending (plain bytearray sieve)."""
    if limit < 2:
        return []
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return [i for i, v in enumerate(flags) if v]


@lru_cache(maxsize=64)
def _cached_primes(limit: int) -> Tuple[int, ...]:
    return tuple(sieve_primes(limit))


def primes_upto(limit: int) -> Tuple[int, ...]:
    """Cached, immutable variant of :func:`sieve_primes`."""
    return _cached_primes(limit)


def prime_count(x: int) -> int:
    if x < 2:
        return 0
    return len(primes_upto(int(x)))


def factorize(n: int) -> Factorization:
    """Canonical factorization by trial division; n must be >= 2."""
    if n < 2:
        raise ValueError(f"factorize needs n >= 2, got {n}")
    out: Factorization = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def prime_divisors(n: int) -> List[int]:
    if n < 2:
        return []
    return [p for p, _ in factorize(n)]


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    if n == 1:
        return 1
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi is defined for n >= 1")
    result = n
    for p in prime_divisors(n):
        result -= result // p
    return result


def multiplicative_order(g: int, n: int) -> int:
    if math.gcd(g, n) != 1:
        raise ValueError(f"{g} is not a unit mod {n}")
    order, x = 1, g % n
    while x != 1 % n:
        x = x * g % n
        order += 1
    return order


def primitive_root(pk: int) -> int:
    """Smallest generator of (Z/pkZ)^* for an odd prime power pk."""
    if pk < 3 or pk % 2 == 0:
        raise ValueError(f"primitive_root needs an odd prime power, got {pk}")
    fac = factorize(pk)
    if len(fac) != 1:
        raise ValueError(f"{pk} is not a prime power")
    p, _ = fac[0]
    phi = euler_phi(pk)
    # order divisors to test: phi / r for each prime r | phi
    cofactors = [phi // r for r in prime_divisors(phi)]
    for g in range(2, pk):
        if g % p == 0:
            continue
        if all(pow(g, c, pk) != 1 for c in cofactors):
            return g
    raise ArithmeticError(f"no primitive root found mod {pk}")  # pragma: no cover


def coprime_residues(q: int) -> List[int]:
    return [a for a in range(1, q + 1) if math.gcd(a, q) == 1] if q > 1 else [1]
