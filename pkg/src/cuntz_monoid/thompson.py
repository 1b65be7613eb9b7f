"""The Thompson group G_{n,1} as the group of units of C_n.

Elements are standard symbols whose domain and image codes are both
maximal.  The word problem is equality of standard symbols.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Union

from . import cuntz
from .cuntz import StandardSymbol, normalize
from .errors import AlphabetMismatch, NotAUnit
from .symbols import Symbol
from .words import caret_expand

DEFAULT_ORDER_CAP = 4096


@dataclass(frozen=True)
class GroupElement:
    repr: StandardSymbol

    def __post_init__(self):
        if not isinstance(self.repr, StandardSymbol):
            object.__setattr__(self, "repr", normalize(self.repr))
        if not cuntz.is_unit(self.repr):
            raise NotAUnit(f"{self.repr!r} is not a unit")

    @property
    def n(self) -> int:
        return self.repr.n

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return g_mul(self, other)

    def __invert__(self) -> "GroupElement":
        return g_inv(self)

    def __pow__(self, k: int) -> "GroupElement":
        return g_pow(self, k)


def _trusted(f: StandardSymbol) -> GroupElement:
    g = object.__new__(GroupElement)
    object.__setattr__(g, "repr", f)
    return g


def unit(f: Union[Symbol, StandardSymbol]) -> GroupElement:
    return GroupElement(normalize(f))


def g_identity(n: int = 2) -> GroupElement:
    return _trusted(cuntz.identity(n))


def g_mul(a: GroupElement, b: GroupElement) -> GroupElement:
    if a.n != b.n:
        raise AlphabetMismatch(f"arity {a.n} vs {b.n}")
    return _trusted(cuntz.cn_mul(a.repr, b.repr))


def g_inv(a: GroupElement) -> GroupElement:
    return _trusted(cuntz.cn_inv(a.repr))


def g_eq(a: GroupElement, b: GroupElement) -> bool:
    return a.repr == b.repr


def g_pow(a: GroupElement, k: int) -> GroupElement:
    if k < 0:
        a, k = g_inv(a), -k
    result = g_identity(a.n)
    while k:
        if k & 1:
            result = g_mul(result, a)
        a = g_mul(a, a)
        k >>= 1
    return result


def g_order(a: GroupElement, cap: int = DEFAULT_ORDER_CAP) -> Optional[int]:
    """Least ``k <= cap`` with ``a**k == 1``, or ``None`` if there is none."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    one = g_identity(a.n)
    p = a
    for k in range(1, cap + 1):
        if g_eq(p, one):
            return k
        p = g_mul(p, a)
    return None


def random_mpc(n: int, expansions: int, rng: random.Random) -> tuple:
    code = ("",)
    for _ in range(expansions):
        code = caret_expand(code, rng.randrange(len(code)), n)
    return tuple(sorted(code))


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_unit(size: int, seed=None, n: int = 2) -> GroupElement:
    """Random unit from two random maximal codes with ``1 + m(n-1) <= size`` leaves.

    ``m`` is the largest admissible number of caret expansions; the two codes
    are paired by a random permutation.  Deterministic for a given seed.
    """
    if size < 1:
        raise ValueError("size must be at least 1")
    rng = _rng(seed)
    m = (size - 1) // (n - 1)
    dom = random_mpc(n, m, rng)
    out = list(random_mpc(n, m, rng))
    rng.shuffle(out)
    return _trusted(normalize(Symbol._make(dom, out, n)))
