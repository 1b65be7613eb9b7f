"""Words and prefix codes over the alphabet {0, 1, ..., n-1}.

A word is a plain ``str`` of decimal digits, so ``"010"`` is the word with
letters 0, 1, 0 and ``""`` is the empty word.  Arity is capped at 10 so that
each letter is one character.  A prefix code is a tuple of words; order is
significant because symbols pair positions of two codes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import AlphabetMismatch, PreconditionError, ResourceLimit

Word = str
PrefixCode = tuple  # tuple[Word, ...]

EPSILON: Word = ""
MAX_ARITY = 10
DEFAULT_CAP = 200_000

_DIGITS = "0123456789"


@dataclass(frozen=True)
class Alphabet:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not 2 <= self.n <= MAX_ARITY:
            raise ValueError(f"arity must be an integer in [2, {MAX_ARITY}], got {self.n!r}")

    @property
    def letters(self) -> tuple[Word, ...]:
        return tuple(_DIGITS[: self.n])

    def words(self, length: int) -> Iterator[Word]:
        """All words of exactly ``length`` letters, in lexicographic order."""
        for t in itertools.product(self.letters, repeat=length):
            yield "".join(t)

    def words_upto(self, length: int) -> Iterator[Word]:
        for k in range(length + 1):
            yield from self.words(k)

    def contains(self, w: Word) -> bool:
        return all(c in _DIGITS[: self.n] for c in w)

    def check(self, *words: Word) -> None:
        for w in words:
            if not self.contains(w):
                raise AlphabetMismatch(f"word {w!r} is not over the {self.n}-letter alphabet")


def letter(a) -> Word:
    """Coerce an int or one-character string into a letter."""
    if isinstance(a, int):
        if not 0 <= a < MAX_ARITY:
            raise AlphabetMismatch(f"letter {a} out of range")
        return _DIGITS[a]
    if isinstance(a, str) and len(a) == 1 and a in _DIGITS:
        return a
    raise AlphabetMismatch(f"not a letter: {a!r}")


def is_prefix(p: Word, w: Word) -> bool:
    return w.startswith(p)


def prefix_comparable(x: Word, y: Word) -> bool:
    return x.startswith(y) or y.startswith(x)


def max_reduce(words: Iterable[Word]) -> PrefixCode:
    """Keep the words having no proper prefix in the input.

    Duplicates are dropped and first-occurrence order is kept.  The result
    generates the same right ideal as the input.
    """
    words = list(dict.fromkeys(words))
    present = set(words)
    out = []
    for w in words:
        if not any(w[:k] in present for k in range(len(w))):
            out.append(w)
    return tuple(out)


def is_prefix_code(words: Sequence[Word]) -> bool:
    if len(set(words)) != len(words):
        return False
    # After sorting, a word that is a prefix of another is also a prefix of
    # its immediate successor.
    s = sorted(words)
    return not any(s[i + 1].startswith(s[i]) for i in range(len(s) - 1))


def kraft_sum(code: Iterable[Word], n: int) -> Fraction:
    return sum((Fraction(1, n ** len(x)) for x in code), Fraction(0))


def _covers(code: frozenset, longest: int, stem: Word, n: int) -> bool:
    if stem in code:
        return True
    if len(stem) >= longest:
        return False
    return all(_covers(code, longest, stem + _DIGITS[a], n) for a in range(n))


def is_maximal_prefix_code(code: Sequence[Word], n: int) -> bool:
    """True iff every word of length ``max |x|`` has a prefix in ``code``.

    The empty code is not maximal.  Kraft equality is asserted as a
    cross-check whenever the code is maximal.
    """
    if not code:
        return False
    if not is_prefix_code(code):
        raise PreconditionError(f"{tuple(code)!r} is not a prefix code")
    Alphabet(n).check(*code)
    result = _covers(frozenset(code), max(map(len, code)), EPSILON, n)
    assert result == (kraft_sum(code, n) == 1), "Kraft cross-check failed"
    return result


def caret_expand(code: Sequence[Word], at: int, n: int) -> PrefixCode:
    if not 0 <= at < len(code):
        raise IndexError(f"caret position {at} out of range for code of size {len(code)}")
    x = code[at]
    return tuple(code[:at]) + tuple(x + _DIGITS[a] for a in range(n)) + tuple(code[at + 1 :])


def caret_reduce(code: Sequence[Word], stem: Word, n: int) -> PrefixCode:
    children = [stem + _DIGITS[a] for a in range(n)]
    missing = [c for c in children if c not in code]
    if missing:
        raise PreconditionError(f"cannot reduce caret at {stem!r}: missing {missing}")
    at = list(code).index(children[0])
    rest = [w for w in code if w not in children]
    rest.insert(sum(1 for w in code[:at] if w not in children), stem)
    return tuple(rest)


def reducible_stems(code: Sequence[Word], n: int) -> list[Word]:
    """Stems whose full caret of children lies in ``code``."""
    present = set(code)
    stems = {w[:-1] for w in code if w}
    return sorted(s for s in stems if all(s + _DIGITS[a] in present for a in range(n)))


def canonical(code: Iterable[Word]) -> PrefixCode:
    return tuple(sorted(code))


def enumerate_mpc(n: int, max_leaves: int, cap: int = DEFAULT_CAP) -> list[PrefixCode]:
    """All maximal prefix codes with at most ``max_leaves`` words.

    Generated breadth-first by caret expansion from the trivial code and
    returned in canonical (sorted) form, ordered by size then lexicographically.
    """
    if max_leaves < 1:
        raise PreconditionError("max_leaves must be at least 1")
    Alphabet(n)
    seen = {(EPSILON,)}
    frontier = [(EPSILON,)]
    while frontier:
        nxt = []
        for code in frontier:
            if len(code) + n - 1 > max_leaves:
                continue
            for i in range(len(code)):
                c = canonical(caret_expand(code, i, n))
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
                    if len(seen) > cap:
                        raise ResourceLimit(f"more than {cap} maximal prefix codes")
        frontier = nxt
    return sorted(seen, key=lambda c: (len(c), c))


def uniform_mpc(n: int, r: int, cap: int = DEFAULT_CAP) -> PrefixCode:
    if r < 0:
        raise PreconditionError("height must be non-negative")
    if n**r > cap:
        raise ResourceLimit(f"{n}**{r} words exceeds cap {cap}")
    return tuple(Alphabet(n).words(r))


def quotient(a, code: Sequence[Word]) -> PrefixCode:
    """The code ``{y : a y in code}``, order inherited."""
    a = letter(a)
    return tuple(w[1:] for w in code if w[:1] == a)


def prepend(a, code: Sequence[Word]) -> PrefixCode:
    a = letter(a)
    return tuple(a + w for w in code)


def refines(x_code: Sequence[Word], y_code: Sequence[Word], n: int) -> bool:
    """True iff ``x_code`` is reachable from ``y_code`` by caret expansions."""
    if not is_prefix_code(x_code) or not is_prefix_code(y_code):
        return False
    for x in x_code:
        if sum(1 for y in y_code if x.startswith(y)) != 1:
            return False
    for y in y_code:
        tails = [x[len(y) :] for x in x_code if x.startswith(y)]
        if not tails or not is_maximal_prefix_code(tails, n):
            return False
    return True
