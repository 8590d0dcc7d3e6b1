from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from maxcode.automata import enumerate_upto, equals, from_words, regex_parse, sigma_star
from maxcode.errors import AlphabetError
from maxcode.transducer import (
    Transducer,
    apply_lang,
    apply_word,
    compose,
    domain,
    identity,
    invert,
    power,
    restrict,
    t_union,
)

A = "01"
radix = oracles.radix_key(A)


def listed(lang, n=6):
    return enumerate_upto(lang, n)


def expect(ws):
    return sorted(ws, key=radix)


# -- examples ------------------------------------------------------------------


def test_build_splits_word_labels():
    t = Transducer.build(A, [("s", "10", "0", "f")], ["s"], ["f"])
    assert t.num_states == 3
    assert sorted(t.transitions) == [(0, "1", "0", 1), (1, "0", "", 2)]
    assert listed(t("10")) == ["0"]


def test_build_trims_useless_states():
    t = Transducer.build(A, [("a", "0", "0", "b"), ("c", "1", "1", "b"), ("a", "1", "1", "d")], ["a"], ["b"])
    assert t.num_states == 2
    assert t.initial == {0} and t.final == {1}


def test_invert_tsub1(tsub1):
    assert listed(invert(tsub1)("10")) == ["00", "11"]


def test_union_prefix_suffix(px, sx):
    assert listed(t_union(px, sx)("01")) == ["", "0", "1"]


def test_compose_examples(px, sx, dsub1):
    assert listed(compose(dsub1, dsub1)("11")) == ["00"]
    assert listed(compose(px, px)("001")) == ["", "0"]
    assert listed(compose(px, sx)("01")) == [""]


def test_power_examples(dsub1, px):
    assert listed(power(invert(dsub1), 2)("00")) == ["11"]
    assert listed(power(dsub1, -2)("00")) == ["11"]
    with pytest.raises(ValueError):
        power(px, 0)


def test_apply_lang_examples(px, dsub1):
    assert listed(apply_lang(px, from_words(["001", "10"], A))) == ["", "0", "1", "00"]
    assert listed(apply_lang(dsub1, from_words(["11"], A))) == ["01", "10"]


def test_restrict(tsub1):
    out = restrict(tsub1, from_words(["00", "01"], A), side="output")
    assert listed(out("11")) == ["01"]
    assert listed(out("10")) == ["00"]
    inp = restrict(tsub1, from_words(["11"], A), side="input")
    assert listed(inp("11")) == ["01", "10"]
    assert listed(inp("10")) == []
    with pytest.raises(ValueError):
        restrict(tsub1, sigma_star(A), side="both")


def test_domain_and_identity(px):
    assert equals(domain(px), regex_parse("(0+1)(0+1)*", A))
    assert listed(identity(A)("010")) == ["010"]


def test_alphabet_checks(px):
    with pytest.raises(AlphabetError):
        apply_lang(px, sigma_star("ab"))
    with pytest.raises(AlphabetError):
        Transducer.build(A, [(0, "2", "0", 1)], [0], [1])


def test_build_is_deterministic():
    edges = [("x", "01", "1", "y"), ("y", "1", "", "x"), ("x", "", "0", "x")]
    one = Transducer.build(A, edges, ["x"], ["x", "y"])
    two = Transducer.build(A, list(reversed(edges)), ["x"], ["y", "x"])
    assert one == two


# -- randomized checks against a direct path search on the raw edge list ---------------


def raw_relation(edges, initial, final, x, bound):
    """All outputs of length <= bound for input x, by searching the unnormalized edges."""
    seen = set()
    stack = [(q, 0, "") for q in initial]
    out = set()
    while stack:
        conf = stack.pop()
        if conf in seen:
            continue
        seen.add(conf)
        q, i, y = conf
        if q in final and i == len(x):
            out.add(y)
        for p, a, b, r in edges:
            if p == q and x.startswith(a, i) and len(y) + len(b) <= bound:
                stack.append((r, i + len(a), y + b))
    return out


labels = st.text(alphabet=A, max_size=2)
state = st.integers(0, 2)
edge = st.tuples(state, labels, labels, state)
raw_transducers = st.tuples(
    st.lists(edge, max_size=6),
    st.frozensets(state, min_size=1),
    st.frozensets(state),
)
# no edge shrinks its input, so outputs are never shorter than inputs
growing = st.tuples(
    st.lists(edge.filter(lambda e: len(e[2]) >= len(e[1])), max_size=6),
    st.frozensets(state, min_size=1),
    st.frozensets(state),
)

BOUND = 4


def build(raw):
    edges, initial, final = raw
    return Transducer.build(A, edges, sorted(initial), sorted(final), states=range(3))


@settings(max_examples=200, deadline=None)
@given(raw_transducers)
def test_apply_word_matches_path_search(raw):
    t = build(raw)
    for x in oracles.all_words(A, 3):
        assert listed(apply_word(t, x), BOUND) == expect(raw_relation(*raw, x, BOUND))


@settings(max_examples=200, deadline=None)
@given(raw_transducers)
def test_invert_swaps_pairs(raw):
    t = build(raw)
    inv = invert(t)
    pairs = {(x, y) for x in oracles.all_words(A, 3) for y in raw_relation(*raw, x, 3)}
    inv_pairs = {(x, y) for y in oracles.all_words(A, 3) for x in listed(apply_word(inv, y), 3)}
    assert pairs == inv_pairs


@settings(max_examples=200, deadline=None)
@given(raw_transducers, raw_transducers)
def test_union_is_pointwise(r1, r2):
    u = t_union(build(r1), build(r2))
    for x in oracles.all_words(A, 3):
        want = raw_relation(*r1, x, BOUND) | raw_relation(*r2, x, BOUND)
        assert listed(apply_word(u, x), BOUND) == expect(want)


@settings(max_examples=200, deadline=None)
@given(raw_transducers, growing)
def test_compose_matches_relational_composition(r1, r2):
    c = compose(build(r1), build(r2))
    for x in oracles.all_words(A, 3):
        # r2 never shortens, so middle words longer than BOUND cannot contribute
        middle = raw_relation(*r1, x, BOUND)
        want = set().union(*(raw_relation(*r2, y, BOUND) for y in middle)) if middle else set()
        assert listed(apply_word(c, x), BOUND) == expect(want)


@settings(max_examples=200, deadline=None)
@given(raw_transducers, st.frozensets(st.text(alphabet=A, max_size=3), max_size=4))
def test_apply_lang_is_union_of_images(raw, xs):
    t = build(raw)
    want = set().union(*(raw_relation(*raw, x, BOUND) for x in xs)) if xs else set()
    assert listed(apply_lang(t, from_words(xs, A)), BOUND) == expect(want)


@settings(max_examples=200, deadline=None)
@given(raw_transducers, st.frozensets(st.text(alphabet=A, max_size=3), max_size=4))
def test_restrict_output(raw, ys):
    r = restrict(build(raw), from_words(ys, A), side="output")
    for x in oracles.all_words(A, 3):
        assert listed(apply_word(r, x), BOUND) == expect(raw_relation(*raw, x, BOUND) & ys)
