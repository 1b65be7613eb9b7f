"""Command-line calculator.

Exit status is 0 on success, 1 when an algebraic precondition fails and 2
when the input cannot be parsed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from . import cantor, cuntz, notation, selftest, streams, symbols, thompson, words
from .errors import AlgebraError, ParseError
from .polycyclic import is_tight_cover
from .symbols import Symbol


class Output:
    """Pairs a human-readable rendering with its JSON form."""

    def __init__(self, text: str, data: Any):
        self.text, self.data = text, data


def _sym_out(f) -> Output:
    return Output(notation.format_symbol(f), notation.symbol_to_json(f))


def _bool_out(b: bool) -> Output:
    return Output("true" if b else "false", {"result": b})


def _stream_out(s) -> Output:
    if s is None:
        return Output("undefined", None)
    return Output(notation.format_stream(s), {"pre": s.pre, "per": s.per})


def _germ_out(g) -> Output:
    data = {
        "tgt": notation.format_stream(g.tgt),
        "k": g.k,
        "src": notation.format_stream(g.src),
    }
    return Output(notation.format_germ(g), data)


def _symbol(args, text: str):
    f = notation.parse_symbol(text, args.n)
    return f if args.no_normalize else cuntz.normalize(f)


def _raw(args, text: str) -> Symbol:
    return notation.parse_symbol(text, args.n)


def _binary(args, raw_op, cn_op) -> Output:
    a, b = (_symbol(args, s) for s in args.symbols)
    return _sym_out(raw_op(a, b) if args.no_normalize else cn_op(a, b))


def cmd_mul(args) -> Output:
    items = [_symbol(args, s) for s in args.symbols]
    acc = items[0]
    for f in items[1:]:
        acc = symbols.compose(acc, f) if args.no_normalize else cuntz.cn_mul(acc, f)
    return _sym_out(acc)


def cmd_inv(args) -> Output:
    f = _symbol(args, args.symbol)
    return _sym_out(symbols.invert(f) if args.no_normalize else cuntz.cn_inv(f))


def cmd_star(args) -> Output:
    f = _symbol(args, args.symbol)
    return _sym_out(symbols.star(f) if args.no_normalize else cuntz.cn_star(f))


def cmd_meet(args) -> Output:
    return _binary(args, symbols.meet, cuntz.cn_meet)


def cmd_join(args) -> Output:
    return _binary(args, symbols.join, cuntz.cn_join)


def cmd_complement(args) -> Output:
    return _sym_out(cuntz.complement(_raw(args, args.symbol)))


def cmd_normalize(args) -> Output:
    return _sym_out(cuntz.normalize(_raw(args, args.symbol)))


def cmd_eq(args) -> Output:
    a, b = (_raw(args, s) for s in args.symbols)
    return _bool_out(a == b if args.no_normalize else cuntz.lenz_equal(a, b))


def cmd_is_unit(args) -> Output:
    return _bool_out(cuntz.is_unit(_symbol(args, args.symbol)))


def cmd_order(args) -> Output:
    g = thompson.unit(_raw(args, args.symbol))
    k = thompson.g_order(g, args.cap)
    text = str(k) if k is not None else f"none (exceeds {args.cap})"
    return Output(text, {"order": k, "cap": args.cap})


def cmd_apply(args) -> Output:
    f = _raw(args, args.symbol)
    if "(" in args.point:
        return _stream_out(streams.eps_apply(f, notation.parse_stream(args.point, args.n)))
    w = symbols.act(f, notation.parse_word(args.point, args.n))
    if w is None:
        return Output("undefined", None)
    return Output(notation.format_word(w), {"word": notation.format_word(w)})


def cmd_enumerate_mpc(args) -> Output:
    codes = words.enumerate_mpc(args.n, args.leaves)
    text = "\n".join(notation.format_code(c) for c in codes)
    return Output(text, [[notation.format_word(w) for w in c] for c in codes])


def cmd_refines(args) -> Output:
    x = notation.parse_code(args.finer, args.n)
    y = notation.parse_code(args.coarser, args.n)
    return _bool_out(words.refines(x, y, args.n))


def cmd_tight_cover(args) -> Output:
    x = notation.parse_word(args.word, args.n)
    cover = notation.parse_code(args.cover, args.n)
    return _bool_out(is_tight_cover(cover, x, args.n))


def cmd_eval_term(args) -> Output:
    t = notation.parse_term(args.term, args.n)
    x = cantor.t_identity(args.n) if args.at is None else cantor.total(_raw(args, args.at))
    if args.standard:
        return _sym_out(cantor.eval_term(t, x))
    return _sym_out(cantor.eval_raw(t, x))


def cmd_term_of(args) -> Output:
    f = _symbol(args, args.symbol)
    text = notation.format_term(cantor.term_of(f))
    return Output(text, {"term": text})


def cmd_germ(args) -> Output:
    u = _raw(args, args.symbol)
    s = notation.parse_stream(args.stream, args.n)
    return _germ_out(streams.germ_of_unit(u, s))


def cmd_gp_compose(args) -> Output:
    g1, g2 = (notation.parse_germ(s, args.n) for s in args.germs)
    return _germ_out(streams.gp_compose(g1, g2))


def cmd_selftest(args) -> Output:
    results = selftest.run(args.seed, args.count)
    lines = [f"{name}: {ok}/{total}" for name, (ok, total) in results.items()]
    data = {name: {"passed": ok, "total": total} for name, (ok, total) in results.items()}
    out = Output("\n".join(lines), data)
    out.failed = any(ok != total for ok, total in results.values())
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, default=2, choices=range(2, 11), metavar="N",
                        help="alphabet size, 2..10 (default 2)")
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--no-normalize", action="store_true",
                        help="operate on symbols as written, without Lenz normal forms")

    parser = argparse.ArgumentParser(prog="cuntz", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, help_text, *positionals, nargs=None):
        p = sub.add_parser(name, parents=[common], help=help_text)
        for pos in positionals:
            p.add_argument(pos, nargs=nargs)
        p.set_defaults(func=func)
        return p

    verb("mul", cmd_mul, "product of symbols, left to right", "symbols", nargs="+")
    verb("inv", cmd_inv, "inverse of a partial bijection", "symbol")
    verb("star", cmd_star, "identity on the domain", "symbol")
    verb("meet", cmd_meet, "largest common restriction", "symbols", nargs=2)
    verb("join", cmd_join, "join of compatible elements", "symbols", nargs=2)
    verb("complement", cmd_complement, "Boolean complement of an idempotent", "symbol")
    verb("normalize", cmd_normalize, "standard symbol of a Lenz class", "symbol")
    verb("eq", cmd_eq, "equality of elements", "symbols", nargs=2)
    verb("is-unit", cmd_is_unit, "membership in the group of units", "symbol")
    verb("order", cmd_order, "order of a unit", "symbol").add_argument(
        "--cap", type=int, default=thompson.DEFAULT_ORDER_CAP)
    verb("apply", cmd_apply, "apply a symbol to a word or a stream pre(period)",
         "symbol", "point")
    verb("enumerate-mpc", cmd_enumerate_mpc, "maximal prefix codes").add_argument(
        "--leaves", type=int, default=5, help="largest code size")
    verb("refines", cmd_refines, "whether FINER is a caret refinement of COARSER",
         "finer", "coarser")
    verb("tight-cover", cmd_tight_cover, "whether COVER is a tight cover of WORD",
         "word", "cover")
    p = verb("eval-term", cmd_eval_term, "evaluate a Cantor-algebra term", "term")
    p.add_argument("--at", help="total symbol substituted for X (default identity)")
    p.add_argument("--standard", action="store_true", help="print the standard symbol")
    verb("term-of", cmd_term_of, "a term evaluating to a total symbol", "symbol")
    verb("germ", cmd_germ, "germ of a unit at a stream", "symbol", "stream")
    verb("gp-compose", cmd_gp_compose, "compose groupoid elements", "germs", nargs=2)
    p = verb("selftest", cmd_selftest, "run the seeded invariant suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200, help="samples per family")
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=stderr)
        return 2
    except AlgebraError as exc:
        print(f"{type(exc).__name__}: {exc}", file=stderr)
        return 1
    if args.json:
        print(json.dumps(out.data), file=stdout)
    else:
        print(out.text, file=stdout)
    return 1 if getattr(out, "failed", False) else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
