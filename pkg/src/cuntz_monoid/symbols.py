"""Symbols ``(X/Y)``: finite joins of polycyclic elements.

A symbol pairs a prefix code ``dom = (x_1, ..., x_m)`` with a word list
``out = (y_1, ..., y_m)`` and acts by ``x_i u -> y_i u``.  Symbols with
arbitrary outputs form the restriction monoid of surjective morphisms
between finitely generated right ideals; those whose outputs form a prefix
code with distinct entries are the partial bijections and form an inverse
monoid.

Symbol equality is equality of the partial maps on finite words, so two
symbols listing the same pairs in different orders are equal.
"""

from __future__ import annotations

import os
from typing import Iterable, Optional, Sequence

from .errors import AlphabetMismatch, Incompatible, NotInjective, PreconditionError
from .words import Alphabet, Word, is_maximal_prefix_code, is_prefix_code, max_reduce, refines

ORACLE_DEPTH_ENV = "CUNTZ_MAX_DEPTH"


class Symbol:
    __slots__ = ("n", "dom", "out", "_index")

    def __init__(self, dom: Sequence[Word], out: Sequence[Word], n: int = 2):
        dom, out = tuple(dom), tuple(out)
        if len(dom) != len(out):
            raise ValueError(f"domain has {len(dom)} words but {len(out)} outputs")
        Alphabet(n).check(*dom, *out)
        if not is_prefix_code(dom):
            raise ValueError(f"domain {dom} is not a prefix code")
        self.n, self.dom, self.out = n, dom, out
        self._index = None

    @classmethod
    def _make(cls, dom, out, n):
        # Trusted constructor for results that are prefix codes by construction.
        self = object.__new__(cls)
        self.n, self.dom, self.out = n, tuple(dom), tuple(out)
        self._index = None
        return self

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Word, Word]], n: int = 2) -> "Symbol":
        pairs = list(pairs)
        return cls([p[0] for p in pairs], [p[1] for p in pairs], n)

    @property
    def pairs(self) -> tuple[tuple[Word, Word], ...]:
        return tuple(zip(self.dom, self.out))

    def sorted(self) -> "Symbol":
        """The same symbol with pairs in lexicographic order of domain word."""
        ps = sorted(zip(self.dom, self.out))
        return Symbol._make([p[0] for p in ps], [p[1] for p in ps], self.n)

    @property
    def index(self) -> dict:
        if self._index is None:
            self._index = {x: i for i, x in enumerate(self.dom)}
        return self._index

    def __len__(self):
        return len(self.dom)

    def is_zero(self) -> bool:
        return not self.dom

    def max_length(self) -> int:
        return max(map(len, self.dom + self.out), default=0)

    def _key(self):
        return (self.n, tuple(sorted(zip(self.dom, self.out))))

    def __eq__(self, other):
        if not isinstance(other, Symbol):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        from .notation import format_symbol

        return f"Symbol({format_symbol(self)!r}, n={self.n})"

    def __call__(self, w: Word):
        return act(self, w)

    def __mul__(self, other: "Symbol") -> "Symbol":
        return compose(self, other)


def as_symbol(obj) -> Symbol:
    """Underlying symbol of a symbol, standard symbol, unit or total element."""
    while not isinstance(obj, Symbol):
        if hasattr(obj, "inner"):
            obj = obj.inner
        elif hasattr(obj, "repr"):
            obj = obj.repr
        else:
            raise TypeError(f"no symbol underlies {obj!r}")
    return obj


def identity(n: int = 2) -> Symbol:
    return Symbol._make(("",), ("",), n)


def zero(n: int = 2) -> Symbol:
    return Symbol._make((), (), n)


def projection(code: Sequence[Word], n: int = 2) -> Symbol:
    return Symbol(code, code, n)


def _same_arity(f: Symbol, g: Symbol) -> None:
    if f.n != g.n:
        raise AlphabetMismatch(f"arity {f.n} vs {g.n}")


def match(f: Symbol, w: Word) -> Optional[int]:
    """Position of the unique domain word that is a prefix of ``w``."""
    index = f.index
    for k in range(len(w) + 1):
        i = index.get(w[:k])
        if i is not None:
            return i
    return None


def act(f: Symbol, w: Word) -> Optional[Word]:
    """Apply ``f`` to a finite word; ``None`` where ``f`` is undefined."""
    i = match(f, w)
    if i is None:
        return None
    return f.out[i] + w[len(f.dom[i]):]


def compose(f: Symbol, g: Symbol) -> Symbol:
    """The composite ``f ∘ g`` (``g`` acts first), sorted by domain word."""
    _same_arity(f, g)
    pairs = []
    for u, v in zip(g.dom, g.out):
        i = match(f, v)
        if i is not None:
            pairs.append((u, f.out[i] + v[len(f.dom[i]):]))
            continue
        for x, y in zip(f.dom, f.out):
            if x.startswith(v):
                pairs.append((u + x[len(v):], y))
    pairs.sort()
    return Symbol._make([p[0] for p in pairs], [p[1] for p in pairs], f.n)


def star(f: Symbol) -> Symbol:
    """The identity on the domain of ``f``."""
    return Symbol._make(f.dom, f.dom, f.n)


def is_injective(f: Symbol) -> bool:
    return is_prefix_code(f.out)


def invert(f: Symbol) -> Symbol:
    if not is_injective(f):
        raise NotInjective(f"outputs {f.out} are not a prefix code with distinct entries")
    return Symbol._make(f.out, f.dom, f.n)


def range_projection(f: Symbol) -> Symbol:
    """Identity on the image ideal, generated by ``max_reduce(out)``."""
    code = max_reduce(f.out)
    return Symbol._make(code, code, f.n)


def is_projection(f: Symbol) -> bool:
    return f.dom == f.out


def join(f: Symbol, g: Symbol) -> Symbol:
    """Union of two partial maps that agree wherever both are defined."""
    _same_arity(f, g)
    merged: dict[Word, Word] = {}
    for x, y in list(zip(f.dom, f.out)) + list(zip(g.dom, g.out)):
        if merged.get(x, y) != y:
            raise Incompatible(f"conflicting outputs at {x!r}: {merged[x]!r} vs {y!r}")
        merged[x] = y
    words = sorted(merged)
    keep = []
    for w in words:
        for k in range(len(w)):
            p = w[:k]
            if p in merged:
                if merged[p] + w[k:] != merged[w]:
                    raise Incompatible(
                        f"maps disagree on {w!r}: {merged[p] + w[k:]!r} vs {merged[w]!r}"
                    )
                break
        else:
            keep.append(w)
    return Symbol._make(keep, [merged[w] for w in keep], f.n)


def meet(f: Symbol, g: Symbol) -> Symbol:
    """Largest common restriction: keep refined pairs where the actions agree."""
    _same_arity(f, g)
    pairs = []
    for x in f.dom:
        for u in g.dom:
            if x.startswith(u):
                w = x
            elif u.startswith(x):
                w = u
            else:
                continue
            a = act(f, w)
            if a == act(g, w):
                pairs.append((w, a))
    pairs.sort()
    return Symbol._make([p[0] for p in pairs], [p[1] for p in pairs], f.n)


def leq(f: Symbol, g: Symbol) -> bool:
    """Natural partial order: ``f = g f*``."""
    _same_arity(f, g)
    return compose(g, star(f)) == f


def is_essential(f: Symbol) -> bool:
    """Both the domain code and the max-reduced image code are maximal."""
    if f.is_zero():
        return False
    return is_maximal_prefix_code(f.dom, f.n) and is_maximal_prefix_code(
        max_reduce(f.out), f.n
    )


def essential_in(f: Symbol, g: Symbol) -> bool:
    if not leq(f, g):
        raise PreconditionError("essential_in requires f <= g")
    return refines(f.dom, g.dom, f.n)


def preimage(f: Symbol, z: Word) -> tuple[Word, ...]:
    """Prefix code generating ``f^-1(z A*)``."""
    gens = []
    for x, y in zip(f.dom, f.out):
        if z.startswith(y):
            gens.append(x + z[len(y):])
        elif y.startswith(z):
            gens.append(x)
    return max_reduce(gens)


def oracle_depth(*symbols: Symbol) -> int:
    """Word length at which pointwise comparison decides equality.

    Defaults to the longest word occurring in any argument plus two;
    the ``CUNTZ_MAX_DEPTH`` environment variable overrides it.
    """
    env = os.environ.get(ORACLE_DEPTH_ENV)
    if env:
        return int(env)
    return max((s.max_length() for s in symbols), default=0) + 2


def agree_at_depth(f: Symbol, g: Symbol, depth: Optional[int] = None) -> bool:
    """Whether ``f`` and ``g`` act identically on every word of length ``depth``."""
    _same_arity(f, g)
    if depth is None:
        depth = oracle_depth(f, g)
    return all(act(f, w) == act(g, w) for w in Alphabet(f.n).words(depth))
