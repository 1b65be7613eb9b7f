"""Eventually periodic points of the Cantor space and the groupoid on them.

``EvPeriodicString(pre, per)`` is the infinite word ``pre per per per ...``
in canonical form: ``per`` is primitive and ``pre`` is as short as possible,
so equality of points is equality of fields.  Groupoid elements are triples
``(tgt, k, src)`` with ``tgt = x w``, ``src = y w`` and ``k = |x| - |y|``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .errors import NotComposable, PreconditionError
from .symbols import as_symbol, match
from .words import Word


def primitive_root(v: Word) -> Word:
    """Shortest ``r`` with ``v = r^k``, found with the KMP failure function."""
    m = len(v)
    fail = [0] * m
    k = 0
    for i in range(1, m):
        while k and v[i] != v[k]:
            k = fail[k - 1]
        if v[i] == v[k]:
            k += 1
        fail[i] = k
    p = m - fail[-1]
    return v[:p] if m % p == 0 else v


@dataclass(frozen=True)
class EvPeriodicString:
    pre: Word
    per: Word

    def __post_init__(self):
        if not self.per:
            raise PreconditionError("period must be non-empty")
        c = _canonical(self.pre, self.per)
        if c != (self.pre, self.per):
            raise PreconditionError(f"{self.pre}({self.per}) is not canonical; use eps_normalize")

    def letter(self, i: int) -> str:
        if i < len(self.pre):
            return self.pre[i]
        return self.per[(i - len(self.pre)) % len(self.per)]

    def prefix(self, k: int) -> Word:
        return "".join(self.letter(i) for i in range(k))

    def startswith(self, w: Word) -> bool:
        return all(self.letter(i) == c for i, c in enumerate(w))

    def drop(self, k: int) -> "EvPeriodicString":
        """The tail after removing the first ``k`` letters."""
        if k <= len(self.pre):
            return eps_normalize(self.pre[k:], self.per)
        r = (k - len(self.pre)) % len(self.per)
        return eps_normalize("", self.per[r:] + self.per[:r])

    def prepend(self, w: Word) -> "EvPeriodicString":
        return eps_normalize(w + self.pre, self.per)


def _canonical(u: Word, v: Word) -> tuple[Word, Word]:
    v = primitive_root(v)
    while u and u[-1] == v[-1]:
        u, v = u[:-1], v[-1] + v[:-1]
    return u, v


def eps_normalize(u: Word, v: Word) -> EvPeriodicString:
    if not v:
        raise PreconditionError("period must be non-empty")
    s = object.__new__(EvPeriodicString)
    pre, per = _canonical(u, v)
    object.__setattr__(s, "pre", pre)
    object.__setattr__(s, "per", per)
    return s


def eps_apply(f, s: EvPeriodicString) -> Optional[EvPeriodicString]:
    """Apply a symbol to an infinite word; ``None`` outside its domain."""
    inner = as_symbol(f)
    longest = max(map(len, inner.dom), default=0)
    i = match(inner, s.prefix(longest))
    if i is None:
        return None
    return s.drop(len(inner.dom[i])).prepend(inner.out[i])


def tail_equivalent(tgt: EvPeriodicString, src: EvPeriodicString, k: int) -> bool:
    """Whether ``tgt`` and ``src`` share a tail with ``tgt`` ahead by ``k`` letters."""
    start = max(len(tgt.pre), len(src.pre) + k, k)
    return any(tgt.drop(i) == src.drop(i - k) for i in range(start, start + len(tgt.per)))


@dataclass(frozen=True)
class GroupoidElement:
    tgt: EvPeriodicString
    k: int
    src: EvPeriodicString

    def __post_init__(self):
        if not tail_equivalent(self.tgt, self.src, self.k):
            raise PreconditionError(
                f"no common tail with index {self.k} between target and source"
            )

    def __mul__(self, other):
        return gp_compose(self, other)


def _trusted(tgt, k, src) -> GroupoidElement:
    g = object.__new__(GroupoidElement)
    object.__setattr__(g, "tgt", tgt)
    object.__setattr__(g, "k", k)
    object.__setattr__(g, "src", src)
    return g


def germ(x: Word, y: Word, w: EvPeriodicString) -> GroupoidElement:
    """The element ``(x w, |x| - |y|, y w)``."""
    return _trusted(w.prepend(x), len(x) - len(y), w.prepend(y))


def gp_unit(s: EvPeriodicString) -> GroupoidElement:
    return _trusted(s, 0, s)


def gp_compose(g1: GroupoidElement, g2: GroupoidElement) -> GroupoidElement:
    if g1.src != g2.tgt:
        raise NotComposable("source of the left factor differs from target of the right")
    return _trusted(g1.tgt, g1.k + g2.k, g2.src)


def gp_inverse(g: GroupoidElement) -> GroupoidElement:
    return _trusted(g.src, -g.k, g.tgt)


def in_basic_open(g: GroupoidElement, x: Word, y: Word) -> bool:
    """Membership in ``{(x w, |x| - |y|, y w)}``."""
    return (
        g.k == len(x) - len(y)
        and g.tgt.startswith(x)
        and g.src.startswith(y)
        and g.tgt.drop(len(x)) == g.src.drop(len(y))
    )


def germ_of_unit(u, s: EvPeriodicString) -> GroupoidElement:
    """Germ of a unit at ``s``: the matched pair ``x -> y`` gives ``(y w, |y|-|x|, x w)``."""
    inner = as_symbol(u)
    longest = max(map(len, inner.dom), default=0)
    i = match(inner, s.prefix(longest))
    if i is None:
        raise PreconditionError("stream lies outside the domain")
    x, y = inner.dom[i], inner.out[i]
    return germ(y, x, s.drop(len(x)))


def random_stream(n: int, max_pre: int, max_per: int, seed=None) -> EvPeriodicString:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    letters = "0123456789"[:n]
    pre = "".join(rng.choice(letters) for _ in range(rng.randint(0, max_pre)))
    per = "".join(rng.choice(letters) for _ in range(rng.randint(1, max_per)))
    return eps_normalize(pre, per)


def all_streams(n: int, max_pre: int, max_per: int) -> list[EvPeriodicString]:
    """Every distinct point ``u v^ω`` with ``|u| <= max_pre`` and ``1 <= |v| <= max_per``."""
    from .words import Alphabet

    a = Alphabet(n)
    seen = set()
    for lu in range(max_pre + 1):
        for u in a.words(lu):
            for lv in range(1, max_per + 1):
                for v in a.words(lv):
                    seen.add(eps_normalize(u, v))
    return sorted(seen, key=lambda s: (len(s.pre) + len(s.per), s.pre, s.per))
