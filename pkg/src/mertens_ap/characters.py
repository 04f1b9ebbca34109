"""Dirichlet characters mod q stored as exact root-of-unity exponent tables."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from gmpy2 import mpc

from .arith import factorize, primitive_root
from .mp import PrecisionContext, roots_of_unity


@dataclass(frozen=True)
class Component:
    modulus: int  # prime power p^e carrying this cyclic factor
    generator: int
    order: int


@dataclass(frozen=True, eq=False)
class Character:
    """chi(r) = exp(2 pi i table[r] / order), or 0 where table[r] is None."""

    q: int
    exponents: Tuple[int, ...]
    order: int
    table: Tuple[Optional[int], ...] = field(repr=False)
    orders: Tuple[int, ...] = field(repr=False, default=())

    @property
    def is_principal(self) -> bool:
        return self.order == 1

    @property
    def parity(self) -> int:
        t = self.table[(self.q - 1) % self.q]
        return 1 if t == 0 else -1

    @property
    def is_real(self) -> bool:
        return self.order <= 2

    @property
    def key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.q, self.exponents)

    def __eq__(self, other) -> bool:
        return isinstance(other, Character) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def exponent_at(self, r: int) -> Optional[int]:
        return self.table[r % self.q]

    def conductor(self) -> int:
        """Smallest f | q such that chi is trivial on units r = 1 (mod f)."""
        q = self.q
        for f in sorted(d for d in range(1, q + 1) if q % d == 0):
            if all(
                self.table[r] == 0
                for r in range(1, q, f)
                if self.table[r] is not None
            ):
                return f
        return q  # pragma: no cover


def _normalize(q: int, exps: Tuple[int, ...], orders: Tuple[int, ...], raw: List[Optional[int]], E: int) -> Character:
    g = E
    for t in raw:
        if t:
            g = math.gcd(g, t)
    L = E // g
    table = tuple(None if t is None else t // g for t in raw)
    return Character(q=q, exponents=exps, order=L, table=table, orders=orders)


def evaluate(chi: Character, r: int, ctx: PrecisionContext) -> mpc:
    t = chi.table[r % chi.q]
    if t is None:
        return mpc(0)
    return roots_of_unity(chi.order, ctx)[t]


def power(chi: Character, k: int) -> Character:
    if k < 0:
        raise ValueError("power needs k >= 0")
    L = chi.order
    raw = [None if t is None else (t * k) % L for t in chi.table]
    exps = tuple((e * k) % o for e, o in zip(chi.exponents, chi.orders)) if chi.orders else chi.exponents
    return _normalize(chi.q, exps, chi.orders, raw, L)


def conjugate(chi: Character) -> Character:
    return power(chi, chi.order - 1)


def trivial_character(q: int = 1) -> Character:
    """Principal character mod q (q = 1 gives the character that is 1 everywhere)."""
    table = tuple(0 if math.gcd(r, q) == 1 else None for r in range(q))
    return Character(q=q, exponents=(), order=1, table=table, orders=())


@dataclass(frozen=True, eq=False)
class CharacterGroup:
    q: int
    components: Tuple[Component, ...]
    characters: Tuple[Character, ...] = field(repr=False)
    _index: Dict[Tuple[int, ...], int] = field(repr=False, default_factory=dict)

    @property
    def exponent(self) -> int:
        return math.lcm(*(c.order for c in self.components)) if self.components else 1

    @property
    def principal(self) -> Character:
        return self.characters[0]

    @property
    def nonprincipal(self) -> Tuple[Character, ...]:
        return self.characters[1:]

    def index(self, chi: Character) -> int:
        return self._index[chi.exponents]

    def lookup(self, chi: Character) -> Character:
        """Canonical group member with the same exponent vector."""
        return self.characters[self._index[chi.exponents]]

    def __len__(self) -> int:
        return len(self.characters)


def _components(q: int) -> List[Component]:
    comps: List[Component] = []
    for p, e in factorize(q) if q >= 2 else []:
        pk = p**e
        if p == 2:
            if e == 2:
                comps.append(Component(4, 3, 2))
            elif e >= 3:
                comps.append(Component(pk, pk - 1, 2))
                comps.append(Component(pk, 5, 2 ** (e - 2)))
        else:
            comps.append(Component(pk, primitive_root(pk), pk // p * (p - 1)))
    # stable order by modulus; the two 2^e pieces keep (-1, 5) order
    comps.sort(key=lambda c: c.modulus)
    return comps


def _dlog_tables(comps: Sequence[Component]) -> List[Dict[int, int]]:
    tables: List[Dict[int, int]] = []
    i = 0
    while i < len(comps):
        c = comps[i]
        if c.modulus >= 8 and c.modulus % 2 == 0:
            m = c.modulus
            pow5 = {}
            x = 1
            for v in range(m // 4):
                pow5[x] = v
                x = x * 5 % m
            sign_t: Dict[int, int] = {}
            five_t: Dict[int, int] = {}
            for r in range(1, m, 2):
                u = 0 if r % 4 == 1 else 1
                sign_t[r] = u
                five_t[r] = pow5[r if u == 0 else (m - r) % m]
            tables.append(sign_t)
            tables.append(five_t)
            i += 2
            continue
        m = c.modulus
        t: Dict[int, int] = {}
        x = 1
        for v in range(c.order):
            t[x] = v
            x = x * c.generator % m
        tables.append(t)
        i += 1
    return tables


@lru_cache(maxsize=128)
def build_group(q: int) -> CharacterGroup:
    """All phi(q) characters mod q, principal first, then lexicographic by exponents."""
    if q < 3:
        raise ValueError(f"character groups are built for q >= 3, got {q}")
    comps = _components(q)
    dlogs = _dlog_tables(comps)
    orders = tuple(c.order for c in comps)
    E = math.lcm(*orders)
    # per unit r: tuple of logs in each component
    logs: List[Optional[Tuple[int, ...]]] = []
    for r in range(q):
        if math.gcd(r, q) != 1:
            logs.append(None)
            continue
        logs.append(tuple(dl[r % c.modulus] for dl, c in zip(dlogs, comps)))
    chars: List[Character] = []
    index: Dict[Tuple[int, ...], int] = {}
    scale = [E // o for o in orders]
    for exps in itertools.product(*(range(o) for o in orders)):
        raw: List[Optional[int]] = []
        for lg in logs:
            if lg is None:
                raw.append(None)
            else:
                raw.append(sum(e * l * s for e, l, s in zip(exps, lg, scale)) % E)
        index[exps] = len(chars)
        chars.append(_normalize(q, exps, orders, raw, E))
    return CharacterGroup(q=q, components=tuple(comps), characters=tuple(chars), _index=index)
