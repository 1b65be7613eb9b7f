"""Brute-force reference implementations and random generators.

Every oracle here works pointwise on finite words, independently of the
caret machinery, so it can be used to cross-check the fast algorithms.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Optional, Sequence

from .symbols import Symbol, act
from .words import Alphabet, Word, prefix_comparable


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def act_composite(f: Symbol, g: Symbol, w: Word) -> Optional[Word]:
    """``f(g(w))`` computed by two separate applications."""
    v = act(g, w)
    return None if v is None else act(f, v)


def compose_agrees(f: Symbol, g: Symbol, fg: Symbol, depth: int) -> bool:
    """Whether ``fg`` acts as ``f`` after ``g`` on every word up to ``depth``."""
    return all(
        act(fg, w) == act_composite(f, g, w) for w in Alphabet(f.n).words_upto(depth)
    )


def same_action(f: Symbol, g: Symbol, depth: Optional[int] = None) -> bool:
    """Agreement on all words of length exactly ``depth``.

    With ``depth`` at least the longest domain word of either symbol this
    decides equality of the induced maps on infinite strings.
    """
    if depth is None:
        depth = max(map(len, f.dom + g.dom), default=0)
    return all(act(f, w) == act(g, w) for w in Alphabet(f.n).words(depth))


def is_maximal_scan(code: Sequence[Word], n: int) -> bool:
    """Every word of the longest code length is comparable to a code word."""
    if not code:
        return False
    depth = max(map(len, code))
    return all(
        any(prefix_comparable(w, c) for c in code) for w in Alphabet(n).words(depth)
    )


def prefix_codes(n: int, max_len: int, max_size: int) -> Iterator[tuple[Word, ...]]:
    """All non-empty prefix codes of at most ``max_size`` words of length ``<= max_len``."""
    words = list(Alphabet(n).words_upto(max_len))
    for k in range(1, max_size + 1):
        for combo in itertools.combinations(words, k):
            if all(not prefix_comparable(a, b) for a, b in itertools.combinations(combo, 2)):
                yield combo


def tight_cover_scan(cover: Sequence[Word], x: Word, n: int) -> bool:
    """Every extension of ``x`` to the longest cover length meets some cover word."""
    if not cover:
        return False
    depth = max(map(len, cover)) - len(x)
    return all(
        any(prefix_comparable(x + z, c) for c in cover) for z in Alphabet(n).words(depth)
    )


def random_word(n: int, max_len: int, rng: random.Random, min_len: int = 0) -> Word:
    k = rng.randint(min_len, max_len)
    return "".join(rng.choice("0123456789"[:n]) for _ in range(k))


def random_prefix_code(n: int, max_len: int, max_size: int, rng: random.Random) -> list[Word]:
    code: list[Word] = []
    for _ in range(rng.randint(1, max_size)):
        w = random_word(n, max_len, rng)
        if all(not prefix_comparable(w, c) for c in code):
            code.append(w)
    return code


def random_symbol(n: int, max_len: int, max_pairs: int, seed=None) -> Symbol:
    """A symbol of the restriction monoid with arbitrary output words."""
    rng = _rng(seed)
    dom = random_prefix_code(n, max_len, max_pairs, rng)
    out = [random_word(n, max_len, rng) for _ in dom]
    return Symbol(dom, out, n)


def random_injective_symbol(n: int, max_len: int, max_pairs: int, seed=None) -> Symbol:
    """A partial bijection: outputs form a prefix code too."""
    rng = _rng(seed)
    dom = random_prefix_code(n, max_len, max_pairs, rng)
    out = random_prefix_code(n, max_len, len(dom) * 3, rng)
    k = min(len(dom), len(out))
    rng.shuffle(out)
    return Symbol(dom[:k], out[:k], n)


def random_idempotent(n: int, max_len: int, max_pairs: int, seed=None) -> Symbol:
    rng = _rng(seed)
    code = random_prefix_code(n, max_len, max_pairs, rng)
    if rng.random() < 0.1:
        code = []
    return Symbol(code, code, n)


def all_symbols(n: int, max_len: int, max_pairs: int) -> Iterator[Symbol]:
    """Every symbol with at most ``max_pairs`` pairs over words of length ``<= max_len``.

    Pairs are listed in domain order, so each partial map appears once.
    """
    words = list(Alphabet(n).words_upto(max_len))
    yield Symbol((), (), n)
    for dom in prefix_codes(n, max_len, max_pairs):
        dom = tuple(sorted(dom))
        for out in itertools.product(words, repeat=len(dom)):
            yield Symbol._make(dom, out, n)
