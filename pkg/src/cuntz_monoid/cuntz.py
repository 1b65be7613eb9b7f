"""The Lenz congruence, standard symbols and the Boolean inverse monoid C_n.

Two symbols are Lenz-equivalent when one is reached from the other by
inserting and deleting carets, equivalently when they induce the same map
on right-infinite strings.  Each class has a unique representative that
admits no caret deletion; :func:`normalize` computes it, and every
operation on :class:`StandardSymbol` re-normalizes its result.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from . import symbols as sym
from .errors import Incompatible, NoCaret, NotIdempotent
from .polycyclic import ZERO, PnElement, idempotent, one
from .symbols import Symbol
from .words import Alphabet, Word, enumerate_mpc, is_maximal_prefix_code, is_prefix_code

_DIGITS = "0123456789"


@dataclass(frozen=True)
class StandardSymbol:
    """Canonical representative of a Lenz class; build it with :func:`normalize`."""

    inner: Symbol

    @property
    def n(self) -> int:
        return self.inner.n

    @property
    def dom(self):
        return self.inner.dom

    @property
    def out(self):
        return self.inner.out

    def __repr__(self):
        from .notation import format_symbol

        return f"StandardSymbol({format_symbol(self.inner)!r}, n={self.n})"

    def __mul__(self, other):
        return cn_mul(self, other)


def insert_caret(f: Symbol, at: int) -> Symbol:
    """Replace the pair at ``at`` by its ``n`` one-letter extensions."""
    if not 0 <= at < len(f):
        raise IndexError(f"caret position {at} out of range for {len(f)} pairs")
    x, y = f.dom[at], f.out[at]
    letters = _DIGITS[: f.n]
    dom = f.dom[:at] + tuple(x + a for a in letters) + f.dom[at + 1 :]
    out = f.out[:at] + tuple(y + a for a in letters) + f.out[at + 1 :]
    return Symbol._make(dom, out, f.n)


def _caret_at(dom, out, i: int, n: int) -> bool:
    if i + n > len(dom):
        return False
    x, y = dom[i], out[i]
    if not (x.endswith("0") and y.endswith("0")):
        return False
    xs, ys = x[:-1], y[:-1]
    return all(
        dom[i + k] == xs + _DIGITS[k] and out[i + k] == ys + _DIGITS[k] for k in range(n)
    )


def caret_positions(f: Symbol) -> list[int]:
    """Indices where a caret can be deleted, given the current pair order."""
    return [i for i in range(len(f)) if _caret_at(f.dom, f.out, i, f.n)]


def delete_caret(f: Symbol, stem_index: int) -> Symbol:
    if not _caret_at(f.dom, f.out, stem_index, f.n):
        raise NoCaret(f"no caret of {f.n} matching pairs at position {stem_index}")
    i, n = stem_index, f.n
    dom = f.dom[:i] + (f.dom[i][:-1],) + f.dom[i + n :]
    out = f.out[:i] + (f.out[i][:-1],) + f.out[i + n :]
    return Symbol._make(dom, out, n)


def normalize(f) -> StandardSymbol:
    """Sort pairs by domain word and delete carets until none remain.

    Deletions never overlap, so the fixed point does not depend on the order
    in which they are applied.  A stack pass suffices: after pushing a pair,
    the only new caret can end at the top of the stack.
    """
    if isinstance(f, StandardSymbol):
        return f
    n = f.n
    last = _DIGITS[n - 1]
    stack_d: list[Word] = []
    stack_o: list[Word] = []
    for x, y in sorted(zip(f.dom, f.out)):
        stack_d.append(x)
        stack_o.append(y)
        while (
            len(stack_d) >= n
            and stack_d[-1].endswith(last)
            and stack_o[-1].endswith(last)
            and _caret_at(stack_d, stack_o, len(stack_d) - n, n)
        ):
            xs, ys = stack_d[-n][:-1], stack_o[-n][:-1]
            del stack_d[-n:]
            del stack_o[-n:]
            stack_d.append(xs)
            stack_o.append(ys)
    return StandardSymbol(Symbol._make(stack_d, stack_o, n))


def lenz_equal(f, g) -> bool:
    return normalize(f) == normalize(g)


def _inner(f) -> Symbol:
    return f.inner if isinstance(f, StandardSymbol) else f


def identity(n: int = 2) -> StandardSymbol:
    return StandardSymbol(sym.identity(n))


def zero(n: int = 2) -> StandardSymbol:
    return StandardSymbol(sym.zero(n))


def cn_mul(f, g) -> StandardSymbol:
    return normalize(sym.compose(_inner(f), _inner(g)))


def cn_inv(f) -> StandardSymbol:
    return normalize(sym.invert(_inner(f)))


def cn_star(f) -> StandardSymbol:
    return normalize(sym.star(_inner(f)))


def cn_meet(f, g) -> StandardSymbol:
    return normalize(sym.meet(_inner(normalize(f)), _inner(normalize(g))))


def cn_join(f, g) -> StandardSymbol:
    """Join of compatible elements; raises :class:`Incompatible` otherwise."""
    j = sym.join(_inner(normalize(f)), _inner(normalize(g)))
    if not sym.is_injective(j):
        raise Incompatible("union of the two partial bijections is not injective")
    return normalize(j)


def cn_join_all(items: Iterable, n: int = 2) -> StandardSymbol:
    acc = zero(n)
    for f in items:
        acc = cn_join(acc, f)
    return acc


def cn_leq(f, g) -> bool:
    return cn_mul(g, cn_star(f)) == normalize(f)


def is_idempotent(f) -> bool:
    return sym.is_projection(_inner(normalize(f)))


def complement(e) -> StandardSymbol:
    """Boolean complement of an idempotent inside the identity."""
    e = normalize(e)
    if not is_idempotent(e):
        raise NotIdempotent(f"{e!r} is not an idempotent")
    depth = max(map(len, e.dom), default=0)
    present = set(e.dom)
    rest = [
        w
        for w in Alphabet(e.n).words(depth)
        if not any(w[:k] in present for k in range(len(w) + 1))
    ]
    return normalize(Symbol._make(rest, rest, e.n))


def is_unit(f) -> bool:
    f = _inner(f)
    return (
        bool(f.dom)
        and is_maximal_prefix_code(f.dom, f.n)
        and is_prefix_code(f.out)
        and is_maximal_prefix_code(f.out, f.n)
    )


def embed(f) -> StandardSymbol:
    """The canonical map from the polycyclic monoid into C_n."""
    if f is ZERO:
        raise ValueError("embed(ZERO) needs an arity; use zero(n)")
    return normalize(Symbol._make((f.src,), (f.out,), f.n))


def cover_to_join_check(
    theta: Callable[[PnElement], object],
    join: Callable[[object, object], object],
    unit: object,
    bottom: object,
    n: int = 2,
    depth: int = 2,
    max_leaves: int = 5,
) -> bool:
    """Check the cover-to-join property of ``theta`` on sampled tight covers.

    ``theta`` maps polycyclic elements into a Boolean inverse monoid whose
    join, identity and zero are supplied.  The covers tried are ``x Z`` for
    every word ``x`` of length at most ``depth`` and every maximal prefix
    code ``Z`` with at most ``max_leaves`` words.
    """

    def join_all(items):
        acc = bottom
        for item in items:
            acc = join(acc, item)
        return acc

    letters = _DIGITS[:n]
    if join_all(theta(idempotent(a, n)) for a in letters) != unit:
        return False
    codes = enumerate_mpc(n, max_leaves)
    for x in Alphabet(n).words_upto(depth):
        target = theta(idempotent(x, n))
        for code in codes:
            if join_all(theta(idempotent(x + z, n)) for z in code) != target:
                return False
    return theta(one(n)) == unit
