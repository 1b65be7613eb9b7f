"""The polycyclic inverse monoid on n generators.

A non-zero element ``PnElement(out, src, n)`` is the bijection
``src·u -> out·u`` between the principal right ideals generated by ``src``
and ``out``.  Products are composites of partial maps with the right-hand
factor applied first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import AlphabetMismatch, PreconditionError
from .words import Alphabet, Word, is_maximal_prefix_code, max_reduce


class _Zero:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()


@dataclass(frozen=True)
class PnElement:
    out: Word
    src: Word
    n: int = 2

    def __post_init__(self):
        Alphabet(self.n).check(self.out, self.src)

    def __call__(self, w: Word):
        if w.startswith(self.src):
            return self.out + w[len(self.src):]
        return None

    def __mul__(self, other):
        return pn_mul(self, other)


Pn = Union[PnElement, _Zero]


def one(n: int = 2) -> PnElement:
    return PnElement("", "", n)


def idempotent(x: Word, n: int = 2) -> PnElement:
    return PnElement(x, x, n)


def pn_mul(f: Pn, g: Pn) -> Pn:
    """The composite ``f ∘ g``: apply ``g`` first, then ``f``."""
    if f is ZERO or g is ZERO:
        return ZERO
    if f.n != g.n:
        raise AlphabetMismatch(f"arity {f.n} vs {g.n}")
    x, y = f.out, f.src
    u, v = g.out, g.src
    if u.startswith(y):
        return PnElement(x + u[len(y):], v, f.n)
    if y.startswith(u):
        return PnElement(x, v + y[len(u):], f.n)
    return ZERO


def pn_inv(f: Pn) -> Pn:
    if f is ZERO:
        return ZERO
    return PnElement(f.src, f.out, f.n)


def dom(f: Pn) -> Pn:
    return pn_mul(pn_inv(f), f)


def ran(f: Pn) -> Pn:
    return pn_mul(f, pn_inv(f))


def is_idempotent(f: Pn) -> bool:
    return f is ZERO or f.out == f.src


def pn_leq(f: Pn, g: Pn) -> bool:
    """Natural partial order: ``f = (u p, v p)`` where ``g = (u, v)``."""
    if f is ZERO:
        return True
    if g is ZERO:
        return False
    if not (f.out.startswith(g.out) and f.src.startswith(g.src)):
        return False
    return f.out[len(g.out):] == f.src[len(g.src):]


def pn_compatible(f: Pn, g: Pn) -> bool:
    return is_idempotent(pn_mul(pn_inv(f), g)) and is_idempotent(pn_mul(f, pn_inv(g)))


def pn_orthogonal(f: Pn, g: Pn) -> bool:
    return pn_mul(dom(f), dom(g)) is ZERO and pn_mul(ran(f), ran(g)) is ZERO


def is_orthogonal_set(elements: Sequence[Pn]) -> bool:
    return all(
        pn_orthogonal(a, b) for i, a in enumerate(elements) for b in elements[i + 1:]
    )


def orthogonal_idempotents(code: Sequence[Word], n: int = 2) -> list[PnElement]:
    """The idempotents ``x x^-1``; orthogonal exactly when ``code`` is a prefix code."""
    return [idempotent(x, n) for x in code]


def is_tight_cover(cover: Sequence[Word], x: Word, n: int = 2) -> bool:
    """Whether ``{c c^-1 : c in cover}`` is a tight cover of ``x x^-1``.

    Reduces to the identity: strip ``x`` and ask whether the max-reduced
    remainders form a maximal prefix code.
    """
    Alphabet(n).check(x, *cover)
    bad = [c for c in cover if not c.startswith(x)]
    if bad:
        raise PreconditionError(f"{bad} do not extend {x!r}")
    return is_maximal_prefix_code(max_reduce(c[len(x):] for c in cover), n)

