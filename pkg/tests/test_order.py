from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from maxcode.automata import enumerate_upto
from maxcode.order import (
    Check,
    RadixOrder,
    compare,
    lang_below,
    verify_finite_outputs,
    verify_input_altering,
    verify_input_decreasing,
    word_pos,
)
from maxcode.transducer import Transducer, identity

A = "01"


def test_positions():
    assert [word_pos(w, A) for w in ("", "0", "1", "00", "01", "10", "11", "000")] == list(range(8))
    order = RadixOrder("abc")
    assert order.pos("a") == 1 and order.pos("aa") == 4
    assert order.word_at(4) == "aa"
    with pytest.raises(ValueError):
        order.word_at(-1)


def test_compare():
    assert compare("1", "00", A) == -1
    assert compare("01", "01", A) == 0
    assert compare("10", "01", A) == 1
    assert compare("1", "0", "10") == -1


def test_lang_below_examples():
    assert enumerate_upto(lang_below("00", A), 4) == ["", "0", "1"]
    assert enumerate_upto(lang_below("", A), 4) == []
    assert enumerate_upto(lang_below("10", A), 4) == ["", "0", "1", "00", "01"]


def test_words_upto_is_radix_sorted():
    assert list(RadixOrder(A).words_upto(3)) == oracles.all_words(A, 3)


@settings(max_examples=200, deadline=None)
@given(st.text(alphabet="012", max_size=5))
def test_pos_word_at_roundtrip(w):
    order = RadixOrder("012")
    assert order.word_at(order.pos(w)) == w
    assert enumerate_upto(order.lang_below(w), len(w)) == [
        u for u in oracles.all_words("012", len(w)) if oracles.radix_key("012")(u) < oracles.radix_key("012")(w)
    ]
    assert len(enumerate_upto(order.lang_below(w), len(w))) == order.pos(w)


@settings(max_examples=200, deadline=None)
@given(st.text(alphabet=A, max_size=6), st.text(alphabet=A, max_size=6))
def test_compare_matches_oracle(u, v):
    assert (compare(u, v, A) < 0) == oracles.radix_less(u, v)
    assert compare(u, v, A) == -compare(v, u, A)


def test_check_truthiness():
    assert Check(True) and not Check(False, "")
    assert Check(False, "").witness == ""


def test_identity_is_not_altering():
    assert verify_input_altering(identity(A), 3).witness == ""


def test_finite_outputs():
    # eps-input loop emitting 0 makes every image infinite
    t = Transducer.build(A, [(0, "", "0", 0), (0, "0", "0", 0), (0, "1", "1", 0)], [0], [0])
    assert verify_finite_outputs(t, 3).witness == ""
    assert not verify_input_decreasing(t, 3)


def test_finite_outputs_pass(dsub1):
    assert verify_finite_outputs(dsub1, 4)
