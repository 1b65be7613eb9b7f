import random

import pytest

from cuntz_monoid.cuntz import normalize
from cuntz_monoid.errors import NotComposable, PreconditionError
from cuntz_monoid.notation import parse_symbol
from cuntz_monoid.oracles import random_injective_symbol, random_symbol
from cuntz_monoid.selftest import caret_walk
from cuntz_monoid.streams import (
    EvPeriodicString,
    GroupoidElement,
    all_streams,
    eps_apply,
    eps_normalize,
    germ,
    germ_of_unit,
    gp_compose,
    gp_inverse,
    gp_unit,
    in_basic_open,
    primitive_root,
    random_stream,
    tail_equivalent,
)
from cuntz_monoid.symbols import compose
from cuntz_monoid.thompson import g_identity, random_unit, unit
from cuntz_monoid.words import enumerate_mpc, is_maximal_prefix_code

E = eps_normalize
STREAMS = all_streams(2, 4, 4)


def expand(pre, per, k=24):
    return (pre + per * k)[:k]


def test_primitive_root():
    assert primitive_root("0101") == "01"
    assert primitive_root("010") == "010"
    assert primitive_root("111") == "1"


def test_normalize_examples():
    assert E("", "0101") == E("", "01")
    assert (E("", "0101").pre, E("", "0101").per) == ("", "01")
    s = E("0", "10")
    assert (s.pre, s.per) == ("", "01")
    assert expand("0", "10") == expand("", "01")
    s = E("1", "0")
    assert (s.pre, s.per) == ("1", "0")
    with pytest.raises(PreconditionError):
        E("0", "")


def test_constructor_demands_canonical_form():
    with pytest.raises(PreconditionError):
        EvPeriodicString("0", "10")
    assert EvPeriodicString("1", "0") == E("1", "0")


def test_canonical_form_is_unique():
    rng = random.Random(0)
    for _ in range(2000):
        pre = "".join(rng.choice("01") for _ in range(rng.randint(0, 5)))
        per = "".join(rng.choice("01") for _ in range(rng.randint(1, 5)))
        s = E(pre, per)
        assert s.prefix(30) == expand(pre, per, 30)
        pre2 = "".join(rng.choice("01") for _ in range(rng.randint(0, 5)))
        per2 = "".join(rng.choice("01") for _ in range(rng.randint(1, 5)))
        same = expand(pre, per, 60) == expand(pre2, per2, 60)
        assert (E(pre2, per2) == s) == same


def test_apply_examples():
    swap = parse_symbol("{0:1,1:0}")
    assert eps_apply(swap, E("", "01")) == E("1", "10")
    assert E("11", "01") == E("1", "10")
    s = E("0", "1")
    assert eps_apply(parse_symbol("{e:e}"), s) == s
    u = parse_symbol("{0:00,10:01,11:1}")
    assert eps_apply(u, E("", "1")) == E("", "1")
    assert eps_apply(parse_symbol("{0:1}"), E("", "1")) is None


def test_apply_matches_prefix_oracle():
    rng = random.Random(1)
    for _ in range(300):
        f = random_symbol(2, 3, 4, rng)
        s = random_stream(2, 4, 4, rng)
        r = eps_apply(f, s)
        w = s.prefix(20)
        i = next((k for k, x in enumerate(f.dom) if w.startswith(x)), None)
        if i is None:
            assert r is None
        else:
            expected = f.out[i] + w[len(f.dom[i]):]
            assert r.prefix(len(expected)) == expected


def test_apply_respects_composition():
    rng = random.Random(2)
    for _ in range(300):
        f, g = random_symbol(2, 3, 4, rng), random_symbol(2, 3, 4, rng)
        s = random_stream(2, 4, 4, rng)
        inner = eps_apply(g, s)
        outer = None if inner is None else eps_apply(f, inner)
        assert eps_apply(compose(f, g), s) == outer


def test_compose_examples():
    z = E("", "0")
    g = GroupoidElement(z, 1, z)
    assert gp_compose(g, gp_inverse(g)) == gp_unit(z)
    assert gp_compose(GroupoidElement(z, 1, z), GroupoidElement(z, -1, z)) == GroupoidElement(z, 0, z)
    with pytest.raises(NotComposable):
        gp_compose(gp_unit(z), gp_unit(E("", "1")))


def test_inverse_examples():
    z = E("", "0")
    assert gp_inverse(gp_unit(z)) == gp_unit(z)
    h = GroupoidElement(E("", "01"), 2, E("", "01"))
    assert gp_inverse(h) == GroupoidElement(E("", "01"), -2, E("", "01"))
    assert gp_inverse(gp_inverse(h)) == h


def test_groupoid_element_validation():
    with pytest.raises(PreconditionError):
        GroupoidElement(E("", "1"), 0, E("", "0"))
    with pytest.raises(PreconditionError):
        GroupoidElement(E("", "01"), 3, E("", "0"))
    # 0^ω = 0·0^ω and 1·0^ω = 1·0^ω share a tail with equal prefix lengths
    assert GroupoidElement(E("", "0"), 0, E("1", "0")).k == 0
    assert tail_equivalent(E("0", "1"), E("", "1"), 1)
    # on a periodic tail the index is only pinned down modulo the period
    assert tail_equivalent(E("0", "1"), E("", "1"), 0)
    assert not tail_equivalent(E("0", "1"), E("", "01"), 0)
    assert tail_equivalent(E("", "01"), E("", "01"), 2)
    assert not tail_equivalent(E("", "01"), E("", "01"), 1)


def test_basic_open_examples():
    z = E("", "0")
    assert in_basic_open(gp_unit(z), "", "")
    w = E("", "1")
    g = germ("0", "", w)
    assert g == GroupoidElement(E("0", "1"), 1, w)
    assert in_basic_open(g, "0", "")
    assert not in_basic_open(g, "1", "")


def test_germ_of_unit_examples():
    s = E("01", "1")
    assert germ_of_unit(g_identity(), s) == gp_unit(s)
    g = germ_of_unit(unit(parse_symbol("{0:1,1:0}")), E("", "0"))
    assert g.k == 0 and g.tgt == E("1", "0")
    g = germ_of_unit(unit(parse_symbol("{0:00,10:01,11:1}")), E("", "0"))
    assert g.k == 1
    with pytest.raises(PreconditionError):
        germ_of_unit(parse_symbol("{0:0}"), E("", "1"))


def test_groupoid_laws_random():
    rng = random.Random(3)
    for _ in range(300):
        s = random_stream(2, 4, 4, rng)
        u, v, w = (random_unit(7, rng) for _ in range(3))
        a = germ_of_unit(v, s)
        b = germ_of_unit(u, eps_apply(v, s))
        c = germ_of_unit(w, eps_apply(u * v, s))
        assert gp_compose(gp_compose(c, b), a) == gp_compose(c, gp_compose(b, a))
        assert gp_compose(b, a) == germ_of_unit(u * v, s)
        assert gp_compose(b, a).k == a.k + b.k
        assert gp_compose(gp_compose(a, gp_inverse(a)), a) == a
        assert gp_compose(gp_unit(a.tgt), a) == a == gp_compose(a, gp_unit(a.src))


def test_lenz_equal_symbols_agree_on_streams():
    rng = random.Random(4)
    for _ in range(40):
        f = random_injective_symbol(2, 3, 4, rng)
        g = caret_walk(f, rng.randint(1, 8), rng)
        h = normalize(f)
        for s in STREAMS:
            assert eps_apply(f, s) == eps_apply(g, s) == eps_apply(h, s)


def test_streams_separate_inequivalent_symbols():
    rng = random.Random(5)
    for _ in range(200):
        f = random_injective_symbol(2, 3, 4, rng)
        g = random_injective_symbol(2, 3, 4, rng)
        if normalize(f) != normalize(g):
            assert any(eps_apply(f, s) != eps_apply(g, s) for s in STREAMS)


def test_maximal_codes_catch_every_stream():
    for code in enumerate_mpc(2, 5):
        for s in STREAMS[:200]:
            assert any(s.startswith(x) for x in code)


def test_non_maximal_codes_miss_some_stream():
    for code in (("0",), ("0", "10"), ("00", "01", "10")):
        assert not is_maximal_prefix_code(code, 2)
        assert any(not any(s.startswith(x) for x in code) for s in STREAMS)


def test_all_streams_distinct():
    assert len(STREAMS) == len(set(STREAMS))
    prefixes = {s.prefix(16) for s in STREAMS}
    assert len(prefixes) == len(STREAMS)
