from fractions import Fraction
import itertools

import pytest
from hypothesis import given, settings, strategies as st

from cuntz_monoid.errors import PreconditionError, ResourceLimit
from cuntz_monoid.oracles import is_maximal_scan, prefix_codes
from cuntz_monoid.words import (
    Alphabet,
    caret_expand,
    caret_reduce,
    enumerate_mpc,
    is_maximal_prefix_code,
    is_prefix,
    is_prefix_code,
    kraft_sum,
    max_reduce,
    prefix_comparable,
    prepend,
    quotient,
    refines,
    uniform_mpc,
)


def ideal_at_depth(words, depth, n=2):
    """Words of length ``depth`` lying in the right ideal generated by ``words``."""
    return {w for w in Alphabet(n).words(depth) if any(w.startswith(x) for x in words)}


def test_is_prefix():
    assert is_prefix("", "0110")
    assert is_prefix("0", "01")
    assert not is_prefix("01", "0")


def test_prefix_comparable():
    assert prefix_comparable("0", "01")
    assert not prefix_comparable("0", "1")
    assert prefix_comparable("10", "1")


def test_max_reduce_examples():
    assert max_reduce(["0", "01", "1"]) == ("0", "1")
    assert max_reduce(["", "0", "11"]) == ("",)
    assert max_reduce(["010", "01", "0110"]) == ("01",)
    # same right ideal, checked pointwise
    assert ideal_at_depth(["010", "01", "0110"], 5) == ideal_at_depth(["01"], 5)


def test_max_reduce_keeps_first_occurrence_order():
    assert max_reduce(["1", "00", "1", "001"]) == ("1", "00")


def test_is_prefix_code():
    assert is_prefix_code(["0", "10", "11"])
    assert not is_prefix_code(["0", "01"])
    assert is_prefix_code([])
    assert not is_prefix_code(["0", "0"])


def test_is_maximal_prefix_code_examples():
    assert is_maximal_prefix_code(["0", "10", "11"], 2)
    assert is_maximal_prefix_code([""], 2)
    assert not is_maximal_prefix_code(["0", "10"], 2)
    assert not is_maximal_prefix_code([], 2)
    assert is_maximal_prefix_code(["0", "1", "2"], 3)
    assert not is_maximal_prefix_code(["0", "1"], 3)


def test_is_maximal_rejects_non_code():
    with pytest.raises(PreconditionError):
        is_maximal_prefix_code(["0", "01"], 2)


def test_caret_expand_examples():
    assert caret_expand([""], 0, 2) == ("0", "1")
    assert caret_expand(["0", "1"], 1, 2) == ("0", "10", "11")
    assert caret_expand(["0", "1"], 0, 2) == ("00", "01", "1")
    with pytest.raises(IndexError):
        caret_expand(["0", "1"], 2, 2)


def test_caret_reduce_examples():
    assert caret_reduce(["0", "10", "11"], "1", 2) == ("0", "1")
    assert caret_reduce(["0", "1"], "", 2) == ("",)
    with pytest.raises(PreconditionError):
        caret_reduce(["00", "01", "1"], "1", 2)


def test_enumerate_mpc_examples():
    assert set(enumerate_mpc(2, 3)) == {("",), ("0", "1"), ("00", "01", "1"), ("0", "10", "11")}
    assert enumerate_mpc(2, 1) == [("",)]
    codes = enumerate_mpc(2, 5)
    assert [sum(1 for c in codes if len(c) == k) for k in range(1, 6)] == [1, 1, 2, 5, 14]


def test_enumerate_mpc_cap():
    with pytest.raises(ResourceLimit):
        enumerate_mpc(2, 9, cap=10)


def test_enumerate_mpc_matches_brute_force():
    enumerated = set(enumerate_mpc(2, 5))
    scanned = {tuple(sorted(c)) for c in prefix_codes(2, 4, 5) if is_maximal_scan(c, 2)}
    assert enumerated == scanned


def test_enumerate_mpc_ternary():
    # leaf counts 1, 3, 5, 7 for n = 3 follow the ternary Catalan numbers 1, 1, 3, 12
    codes = enumerate_mpc(3, 7)
    assert [sum(1 for c in codes if len(c) == k) for k in (1, 3, 5, 7)] == [1, 1, 3, 12]


def test_uniform_mpc():
    assert uniform_mpc(2, 0) == ("",)
    assert uniform_mpc(2, 2) == ("00", "01", "10", "11")
    assert uniform_mpc(3, 1) == ("0", "1", "2")
    with pytest.raises(ResourceLimit):
        uniform_mpc(2, 30)


def test_quotient_and_prepend():
    assert quotient(0, ["00", "01", "1"]) == ("0", "1")
    assert quotient(1, ["00", "01", "1"]) == ("",)
    assert quotient(2, ["00", "01", "1"]) == ()
    assert prepend(0, [""]) == ("0",)
    assert prepend(1, ["0", "1"]) == ("10", "11")
    joined = prepend(0, [""]) + prepend(1, ["0", "1"])
    assert joined == ("0", "10", "11") and is_prefix_code(joined)


def test_refines_examples():
    assert refines(["00", "01", "1"], ["0", "1"], 2)
    assert refines(["0", "10", "11"], ["0", "10", "11"], 2)
    assert not refines(["0", "1"], ["00", "01", "1"], 2)
    assert not refines(["00", "1"], ["0", "1"], 2)


def test_kraft_sum_exact():
    for code in enumerate_mpc(2, 6):
        assert kraft_sum(code, 2) == 1
    assert kraft_sum(["0", "10"], 2) == Fraction(3, 4)


def test_non_maximal_codes_have_kraft_sum_below_one():
    for code in prefix_codes(2, 3, 4):
        if not is_maximal_scan(code, 2):
            assert kraft_sum(code, 2) < 1


def test_maximality_agrees_with_scan():
    for n, max_len, size in ((2, 3, 5), (3, 2, 4)):
        for code in prefix_codes(n, max_len, size):
            assert is_maximal_prefix_code(code, n) == is_maximal_scan(code, n)


def test_refines_transitive_on_small_codes():
    codes = enumerate_mpc(2, 5)
    rel = {(x, y) for x, y in itertools.product(codes, repeat=2) if refines(x, y, 2)}
    for (x, y), (y2, z) in itertools.product(rel, repeat=2):
        if y == y2:
            assert (x, z) in rel


def test_uniform_codes_refine_downwards():
    for r in range(4):
        for s in range(r + 1):
            assert refines(uniform_mpc(2, r), uniform_mpc(2, s), 2)


def test_alphabet_bounds():
    with pytest.raises(ValueError):
        Alphabet(1)
    with pytest.raises(ValueError):
        Alphabet(11)
    assert len(list(Alphabet(3).words(2))) == 9
    assert len(list(Alphabet(2).words_upto(3))) == 15


words2 = st.text(alphabet="01", max_size=5)


@settings(max_examples=200, deadline=None)
@given(st.lists(words2, max_size=6))
def test_max_reduce_is_a_prefix_code_generating_the_same_ideal(ws):
    m = max_reduce(ws)
    assert is_prefix_code(m)
    assert max_reduce(m) == m
    assert ideal_at_depth(ws, 6) == ideal_at_depth(m, 6)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_caret_reduce_undoes_caret_expand(data):
    code = data.draw(st.sampled_from(enumerate_mpc(2, 6)))
    at = data.draw(st.integers(0, len(code) - 1))
    expanded = caret_expand(code, at, 2)
    assert is_maximal_prefix_code(expanded, 2)
    assert caret_reduce(expanded, code[at], 2) == tuple(code)
    assert refines(expanded, code, 2)
