"""Seeded invariant checks, grouped by family.

Each family returns ``(passed, total)``.  Results depend only on the seed
and the per-family sample count.
"""

from __future__ import annotations

import random
from typing import Callable

from . import cantor, cuntz, notation, oracles, streams, symbols, thompson
from .cuntz import complement, normalize
from .symbols import Symbol
from .words import Alphabet, caret_reduce, enumerate_mpc, reducible_stems

Family = Callable[[random.Random, int], tuple[int, int]]


def caret_walk(f: Symbol, steps: int, rng: random.Random) -> Symbol:
    """Random sequence of caret insertions and deletions starting at ``f``."""
    for _ in range(steps):
        f = f.sorted()
        spots = cuntz.caret_positions(f)
        if spots and (not len(f) or rng.random() < 0.5):
            f = cuntz.delete_caret(f, rng.choice(spots))
        elif len(f):
            f = cuntz.insert_caret(f, rng.randrange(len(f)))
    return f


def _compose_oracle(rng, count):
    ok = 0
    for _ in range(count):
        n = rng.choice((2, 3))
        f = oracles.random_symbol(n, 4, 4, rng)
        g = oracles.random_symbol(n, 4, 4, rng)
        depth = max(f.max_length(), g.max_length()) + 2
        ok += oracles.compose_agrees(f, g, symbols.compose(f, g), depth)
    return ok, count


def _caret_walks(rng, count):
    ok = 0
    for _ in range(count):
        f = oracles.random_injective_symbol(rng.choice((2, 3)), 3, 4, rng)
        g = caret_walk(f, rng.randint(0, 20), rng)
        ok += normalize(g) == normalize(f) and oracles.same_action(f, g)
    return ok, count


def _mpc_counts(rng, count):
    codes = enumerate_mpc(2, 5)
    sizes = [sum(1 for c in codes if len(c) == k) for k in range(1, 6)]
    checks = [sizes == [1, 1, 2, 5, 14]]
    for code in codes:
        while code != ("",):
            code = caret_reduce(code, reducible_stems(code, 2)[0], 2)
        checks.append(True)
    return sum(checks), len(checks)


def _boolean_laws(rng, count):
    ok = 0
    for _ in range(count):
        n = rng.choice((2, 3))
        e, f, g = (normalize(oracles.random_idempotent(n, 3, 4, rng)) for _ in range(3))
        one, zero = cuntz.identity(n), cuntz.zero(n)
        meet, join = cuntz.cn_meet, cuntz.cn_join
        laws = [
            meet(e, f) == meet(f, e),
            join(e, f) == join(f, e),
            meet(meet(e, f), g) == meet(e, meet(f, g)),
            join(join(e, f), g) == join(e, join(f, g)),
            meet(e, join(f, g)) == join(meet(e, f), meet(e, g)),
            join(e, meet(f, g)) == meet(join(e, f), join(e, g)),
            meet(e, complement(e)) == zero,
            join(e, complement(e)) == one,
            complement(join(e, f)) == meet(complement(e), complement(f)),
        ]
        ok += all(laws)
    return ok, count


def _group_axioms(rng, count):
    ok = 0
    for _ in range(count):
        n = rng.choice((2, 3))
        a, b, c = (thompson.random_unit(7, rng, n) for _ in range(3))
        one = thompson.g_identity(n)
        laws = [
            (a * b) * c == a * (b * c),
            a * ~a == one,
            ~a * a == one,
            a * one == a,
            thompson.g_eq(a, b)
            == oracles.same_action(a.repr.inner, b.repr.inner),
        ]
        ok += all(laws)
    return ok, count


def _cantor_laws(rng, count):
    ok = 0
    for _ in range(count):
        n = rng.choice((2, 3))
        x = cantor.random_total(n, 3, 3, rng)
        xs = [cantor.random_total(n, 2, 3, rng) for _ in range(n)]
        lam = cantor.lambda_op(xs)
        ca1 = cantor.lambda_op([cantor.alpha_op(x, i) for i in range(n)]) == x
        ca2 = all(cantor.alpha_op(lam, i) == xs[i] for i in range(n))
        ok += ca1 and ca2
    return ok, count


def _freeness(rng, count):
    ok = 0
    for _ in range(count):
        n = rng.choice((2, 3))
        t = cantor.random_term(n, 3, 3, rng)
        x = cantor.random_total(n, 3, 3, rng)
        g = cantor.total(thompson.random_unit(5, rng, n).repr)
        one = cantor.t_identity(n)
        free = cantor.eval_term(t, x) == cantor.t_mul(x, cantor.eval_term(t, one))
        i = rng.randrange(n)
        commutes = cantor.t_mul(g, cantor.alpha_op(x, i)) == cantor.alpha_op(
            cantor.t_mul(g, x), i
        )
        ok += free and commutes
    return ok, count


def _groupoid(rng, count):
    ok = 0
    for _ in range(count):
        u = thompson.random_unit(7, rng)
        v = thompson.random_unit(7, rng)
        s = streams.random_stream(2, 4, 4, rng)
        gv = streams.germ_of_unit(v, s)
        gu = streams.germ_of_unit(u, streams.eps_apply(v, s))
        guv = streams.germ_of_unit(u * v, s)
        laws = [
            streams.gp_compose(gu, gv) == guv,
            guv.k == gu.k + gv.k,
            streams.gp_compose(gv, streams.gp_inverse(gv)) == streams.gp_unit(gv.tgt),
            streams.gp_compose(streams.gp_inverse(gv), gv) == streams.gp_unit(gv.src),
        ]
        ok += all(laws)
    return ok, count


def _restriction(rng, count):
    ok = 0
    for _ in range(count):
        n = rng.choice((2, 3))
        a = oracles.random_symbol(n, 3, 4, rng)
        b = oracles.random_symbol(n, 3, 4, rng)
        st, comp = symbols.star, symbols.compose
        laws = [
            st(st(a)) == st(a),
            comp(a, st(a)) == a,
            st(comp(st(a), b)) == st(comp(a, b)),
            comp(st(a), b) == comp(b, st(comp(a, b))),
        ]
        ok += all(laws)
    return ok, count


def _tight_covers(rng, count):
    from .polycyclic import is_tight_cover

    ok = total = 0
    for x in Alphabet(2).words_upto(2):
        ext = [w for w in Alphabet(2).words_upto(3) if w.startswith(x)]
        for _ in range(count):
            cover = [w for w in ext if rng.random() < 0.4]
            total += 1
            ok += is_tight_cover(cover, x, 2) == oracles.tight_cover_scan(cover, x, 2)
    return ok, total


def _round_trip(rng, count):
    ok = 0
    for _ in range(count):
        n = rng.choice((2, 3))
        f = oracles.random_symbol(n, 3, 4, rng)
        s = streams.random_stream(n, 3, 3, rng)
        t = cantor.random_term(n, 2, 2, rng)
        checks = [
            notation.parse_symbol(notation.format_symbol(f), n) == f,
            notation.symbol_from_json(notation.symbol_to_json(f)) == f,
            notation.parse_stream(notation.format_stream(s), n) == s,
            notation.parse_term(notation.format_term(t), n) == t,
        ]
        ok += all(checks)
    return ok, count


FAMILIES: dict[str, Family] = {
    "compose-oracle": _compose_oracle,
    "caret-walks": _caret_walks,
    "mpc-structure": _mpc_counts,
    "boolean-laws": _boolean_laws,
    "group-axioms": _group_axioms,
    "cantor-laws": _cantor_laws,
    "freeness": _freeness,
    "groupoid": _groupoid,
    "restriction-axioms": _restriction,
    "tight-covers": _tight_covers,
    "round-trip": _round_trip,
}


def run(seed: int = 0, count: int = 100) -> dict[str, tuple[int, int]]:
    """Run every family with its own generator derived from ``seed``."""
    return {
        name: fam(random.Random(f"{seed}:{name}"), count) for name, fam in FAMILIES.items()
    }
