"""Text and JSON forms for every serializable type.

Grammar summary::

    word         digits, or "e" for the empty word          010   e
    prefix code  {w,w,...}                                  {0,10,11}
    Pn element   out:src, or ZERO                           0:1
    symbol       {x:y, ...}; the zero symbol is {}          {00:1, 01:10, 1:0}
    stream       pre(period)                                01(10)   (0)
    germ         stream | k | stream                        (0) | 1 | (0)
    term         X | a<i>(term) | L(term, ..., term)        L(a0(X),a1(X))
"""

from __future__ import annotations

import json
import re
from typing import Any

from .errors import ParseError
from .words import Alphabet, Word

EMPTY_WORD_TEXT = "e"

_WORD_RE = re.compile(r"e|[0-9]+")


def format_word(w: Word) -> str:
    return w if w else EMPTY_WORD_TEXT


def parse_word(text: str, n: int = 2) -> Word:
    text = text.strip()
    if not _WORD_RE.fullmatch(text):
        raise ParseError(f"not a word: {text!r}")
    w = "" if text == EMPTY_WORD_TEXT else text
    if not Alphabet(n).contains(w):
        raise ParseError(f"word {text!r} uses letters outside the {n}-letter alphabet")
    return w


def _braced_items(text: str, what: str) -> list[str]:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ParseError(f"{what} must be enclosed in braces: {text!r}")
    body = text[1:-1].strip()
    if not body:
        return []
    return [item.strip() for item in body.split(",")]


def format_code(code) -> str:
    return "{" + ",".join(format_word(w) for w in code) + "}"


def parse_code(text: str, n: int = 2) -> tuple[Word, ...]:
    return tuple(parse_word(item, n) for item in _braced_items(text, "prefix code"))


def format_pn(f) -> str:
    from .polycyclic import ZERO

    if f is ZERO:
        return "ZERO"
    return f"{format_word(f.out)}:{format_word(f.src)}"


def parse_pn(text: str, n: int = 2):
    from .polycyclic import ZERO, PnElement

    text = text.strip()
    if text == "ZERO":
        return ZERO
    parts = text.split(":")
    if len(parts) != 2:
        raise ParseError(f"polycyclic element must look like out:src, got {text!r}")
    return PnElement(parse_word(parts[0], n), parse_word(parts[1], n), n)


def format_symbol(f) -> str:
    from .symbols import as_symbol

    inner = as_symbol(f)
    return "{" + ",".join(f"{format_word(x)}:{format_word(y)}" for x, y in inner.pairs) + "}"


def parse_symbol(text: str, n: int = 2):
    from .symbols import Symbol

    pairs = []
    for item in _braced_items(text, "symbol"):
        parts = item.split(":")
        if len(parts) != 2:
            raise ParseError(f"symbol entry must look like x:y, got {item!r}")
        pairs.append((parse_word(parts[0], n), parse_word(parts[1], n)))
    try:
        return Symbol.from_pairs(pairs, n)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def symbol_to_json(f) -> dict[str, Any]:
    from .symbols import as_symbol

    inner = as_symbol(f)
    return {
        "n": inner.n,
        "pairs": [[format_word(x), format_word(y)] for x, y in inner.pairs],
    }


def symbol_from_json(data) -> Any:
    from .symbols import Symbol

    if isinstance(data, str):
        data = json.loads(data)
    try:
        n = int(data["n"])
        pairs = [(parse_word(x, n), parse_word(y, n)) for x, y in data["pairs"]]
        return Symbol.from_pairs(pairs, n)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed symbol object: {exc}") from exc


_STREAM_RE = re.compile(r"([0-9]*)\(([0-9]+)\)")


def format_stream(s) -> str:
    return f"{s.pre}({s.per})"


def parse_stream(text: str, n: int = 2):
    from .streams import eps_normalize

    m = _STREAM_RE.fullmatch(text.strip())
    if not m:
        raise ParseError(f"stream must look like pre(period), got {text!r}")
    pre, per = m.groups()
    if not Alphabet(n).contains(pre + per):
        raise ParseError(f"stream {text!r} uses letters outside the {n}-letter alphabet")
    return eps_normalize(pre, per)


def format_germ(g) -> str:
    return f"{format_stream(g.tgt)} | {g.k} | {format_stream(g.src)}"


def parse_germ(text: str, n: int = 2):
    from .streams import GroupoidElement

    parts = text.split("|")
    if len(parts) != 3:
        raise ParseError(f"groupoid element must look like tgt | k | src, got {text!r}")
    try:
        k = int(parts[1])
    except ValueError as exc:
        raise ParseError(f"bad index {parts[1]!r}") from exc
    try:
        return GroupoidElement(parse_stream(parts[0], n), k, parse_stream(parts[2], n))
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_term(t) -> str:
    from .cantor import Lam, Leaf

    if isinstance(t, Leaf):
        s = "X"
        for a in reversed(t.path):
            s = f"a{a}({s})"
        return s
    if isinstance(t, Lam):
        return "L(" + ",".join(format_term(c) for c in t.args) + ")"
    raise TypeError(f"not a term: {t!r}")


_TOKEN_RE = re.compile(r"\s*(?:(X)|a([0-9])\(|(L)\(|(,)|(\)))")


def parse_term(text: str, n: int = 2):
    """Parse the term grammar.

    ``a<i>(t)`` means ``t`` with ``α_i`` applied at the generator first, so
    the α-letters along a leaf read outside-in spell its output word.
    """
    from .cantor import Lam, Leaf, prefix_leaves

    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected input at {pos}: {text[pos:pos + 10]!r}")
        tokens.append(m)
        pos = m.end()
    i = 0

    def expect_close():
        nonlocal i
        if i >= len(tokens) or tokens[i].group(5) is None:
            raise ParseError("expected ')'")
        i += 1

    def term():
        nonlocal i
        if i >= len(tokens):
            raise ParseError("unexpected end of term")
        tok = tokens[i]
        i += 1
        if tok.group(1):
            return Leaf("")
        if tok.group(2) is not None:
            a = int(tok.group(2))
            if a >= n:
                raise ParseError(f"a{a} is outside the {n}-letter alphabet")
            inner = term()
            expect_close()
            return prefix_leaves(inner, str(a))
        if tok.group(3):
            args = [term()]
            while i < len(tokens) and tokens[i].group(4):
                i += 1
                args.append(term())
            expect_close()
            if len(args) != n:
                raise ParseError(f"L takes exactly {n} arguments, got {len(args)}")
            return Lam(tuple(args))
        raise ParseError("expected X, a<i>( or L(")

    result = term()
    if i != len(tokens):
        raise ParseError("trailing input after term")
    return result
