"""The n-ary Cantor algebra of total standard symbols.

``lambda_op`` glues ``n`` total maps side by side under the letters of a
caret; ``alpha_op(f, i)`` precomposes ``f`` with ``w -> a_i w``.  Terms are
kept in the weak normal form where α only occurs along leaves: a
:class:`Leaf` holds the α-path applied to the generator, and :class:`Lam`
is an n-ary λ node.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence, Union

from . import cuntz
from .cuntz import StandardSymbol, normalize
from .errors import AlphabetMismatch, PreconditionError
from .symbols import Symbol, as_symbol
from .words import Word, is_maximal_prefix_code, letter, quotient

_DIGITS = "0123456789"


@dataclass(frozen=True)
class TotalElement:
    repr: StandardSymbol

    def __post_init__(self):
        if not isinstance(self.repr, StandardSymbol):
            object.__setattr__(self, "repr", normalize(self.repr))
        if not is_maximal_prefix_code(self.repr.dom, self.repr.n):
            raise PreconditionError(f"{self.repr!r} is not total")

    @property
    def n(self) -> int:
        return self.repr.n


def _trusted(f: StandardSymbol) -> TotalElement:
    t = object.__new__(TotalElement)
    object.__setattr__(t, "repr", f)
    return t


def total(f) -> TotalElement:
    return TotalElement(normalize(f))


def t_identity(n: int = 2) -> TotalElement:
    return _trusted(cuntz.identity(n))


def t_mul(f: TotalElement, g: TotalElement) -> TotalElement:
    return _trusted(cuntz.cn_mul(f.repr, g.repr))


@dataclass(frozen=True)
class Leaf:
    path: Word = ""


@dataclass(frozen=True)
class Lam:
    args: tuple


CantorTerm = Union[Leaf, Lam]
GENERATOR = Leaf("")


def prefix_leaves(t: CantorTerm, a: str) -> CantorTerm:
    """Substitute ``α_a`` applied to the generator for the generator."""
    if isinstance(t, Leaf):
        return Leaf(a + t.path)
    return Lam(tuple(prefix_leaves(c, a) for c in t.args))


def alpha_term(t: CantorTerm, i) -> CantorTerm:
    """``(t)α_i`` kept in weak normal form: a λ node collapses to its i-th child."""
    a = letter(i)
    if isinstance(t, Lam):
        return t.args[int(a)]
    return Leaf(t.path + a)


def lambda_op(fs: Sequence[TotalElement]) -> TotalElement:
    fs = list(fs)
    if not fs:
        raise PreconditionError("lambda needs arguments")
    n = fs[0].n
    if len(fs) != n:
        raise PreconditionError(f"lambda takes exactly {n} arguments, got {len(fs)}")
    if any(f.n != n for f in fs):
        raise AlphabetMismatch("mixed arities in lambda")
    dom, out = [], []
    for i, f in enumerate(fs):
        dom.extend(_DIGITS[i] + x for x in f.repr.dom)
        out.extend(f.repr.out)
    return _trusted(normalize(Symbol._make(dom, out, n)))


def alpha_op(f: TotalElement, i) -> TotalElement:
    a = letter(i)
    if int(a) >= f.n:
        raise AlphabetMismatch(f"letter {a} outside the {f.n}-letter alphabet")
    inner = f.repr.inner
    if inner.dom == ("",):
        return _trusted(StandardSymbol(Symbol._make(("",), (inner.out[0] + a,), f.n)))
    dom = quotient(a, inner.dom)
    out = [y for x, y in zip(inner.dom, inner.out) if x[:1] == a]
    return _trusted(normalize(Symbol._make(dom, out, f.n)))


def eval_term(t: CantorTerm, x: TotalElement) -> TotalElement:
    if isinstance(t, Leaf):
        for a in t.path:
            x = alpha_op(x, a)
        return x
    return lambda_op([eval_term(c, x) for c in t.args])


def eval_raw(t: CantorTerm, x) -> Symbol:
    """Evaluate ``t`` at ``x`` without normalizing intermediate results.

    The domain of the result is exactly the λ-shape of ``t`` refined by the
    domain of ``x``, as one would write the element by hand.
    """
    x = as_symbol(x)
    n = x.n
    if isinstance(t, Leaf):
        for a in t.path:
            if x.dom == ("",):
                x = Symbol._make(("",), (x.out[0] + a,), n)
            else:
                out = [y for w, y in zip(x.dom, x.out) if w[:1] == a]
                x = Symbol._make(quotient(a, x.dom), out, n)
        return x
    if len(t.args) != n:
        raise PreconditionError(f"lambda takes exactly {n} arguments, got {len(t.args)}")
    dom, out = [], []
    for i, c in enumerate(t.args):
        f = eval_raw(c, x)
        dom.extend(_DIGITS[i] + w for w in f.dom)
        out.extend(f.out)
    return Symbol._make(dom, out, n)


def term_of(f: Union[TotalElement, StandardSymbol, Symbol]) -> CantorTerm:
    """An allowable λ-expression for ``f`` following its domain tree.

    Accepts a non-standard total symbol too; its term then follows that
    representative's finer domain code.
    """
    inner = as_symbol(f)
    if not is_maximal_prefix_code(inner.dom, inner.n):
        raise PreconditionError("term_of needs a total element")
    leaves = dict(zip(inner.dom, inner.out))
    n = inner.n

    def build(stem: Word) -> CantorTerm:
        if stem in leaves:
            return Leaf(leaves[stem])
        return Lam(tuple(build(stem + _DIGITS[a]) for a in range(n)))

    return build("")


def mpc_of_term(t: CantorTerm) -> tuple:
    """Leaf addresses of a λ-shape, in left-to-right order."""
    out = []

    def walk(node, addr):
        if isinstance(node, Leaf):
            out.append(addr)
        elif isinstance(node, Lam):
            for a, c in enumerate(node.args):
                walk(c, addr + _DIGITS[a])
        else:
            raise PreconditionError(f"not a λ-shape: {node!r}")

    walk(t, "")
    return tuple(out)


def random_total(n: int, expansions: int, max_out: int, seed=None) -> TotalElement:
    """Random total element: a random maximal code with random output words."""
    from .thompson import random_mpc

    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    dom = random_mpc(n, expansions, rng)
    out = [
        "".join(rng.choice(_DIGITS[:n]) for _ in range(rng.randint(0, max_out)))
        for _ in dom
    ]
    return _trusted(normalize(Symbol._make(dom, out, n)))


def random_term(n: int, depth: int, max_path: int, seed=None) -> CantorTerm:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)

    def build(d):
        if d == 0 or rng.random() < 0.4:
            k = rng.randint(0, max_path)
            return Leaf("".join(rng.choice(_DIGITS[:n]) for _ in range(k)))
        return Lam(tuple(build(d - 1) for _ in range(n)))

    return build(depth)
