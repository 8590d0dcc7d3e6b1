from __future__ import annotations

import logging

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from maxcode.automata import equals, from_words, regex_parse, sigma_length, sigma_star, sigma_upto, words
from maxcode.errors import AlphabetError, NotIndependentError, UniverseError
from maxcode.operators import (
    PropertyInstance,
    embed,
    extract_independent,
    extract_then_embed,
    ind,
    is_independent,
    is_maximal,
    maximality_gap,
    mu,
    mu_iterate,
    sigma,
)
from maxcode.stdprops import make_bifix, make_did2, make_dsub, make_fig1, make_prefix, make_suffix, make_tsub
from maxcode.transducer import apply_word, t_union

A = "01"


def W(*ws):
    return from_words(ws, A)


def test_ind_examples(px_dsub1):
    p = PropertyInstance(px_dsub1)
    assert equals(ind(p, W("1")), regex_parse("1+0(0+1)(0+1)*", A))
    assert equals(ind(p, W("1", "00")), regex_parse("1+00+01(0+1)(0+1)*", A))


def test_mu_of_empty_bifix(bx):
    assert words(mu(PropertyInstance(bx), W())) == [""]


def test_is_maximal_examples(bx):
    p = PropertyInstance(bx)
    assert is_maximal(p, W(""))
    result = is_maximal(p, W("001"))
    assert not result and result.witness == "10"
    with pytest.raises(NotIndependentError):
        is_maximal(p, W("0", "01"))


def test_is_independent_examples(px, bx):
    p = PropertyInstance(px)
    assert is_independent(p, W("00", "01", "1"))
    assert not is_independent(p, W("0", "01"))
    assert is_independent(PropertyInstance(bx), regex_parse("(0+1)^4", A))
    with pytest.raises(ValueError):
        is_independent(p, W("0"), via="sideways")


def test_extract_independent(px):
    p = PropertyInstance(px)
    assert words(extract_independent(p, W("0", "01", "011", "1"))) == ["0", "1"]
    trace = extract_then_embed(px, W("0", "01", "011", "1", "10"))
    assert trace.converged
    assert words(trace.final) == ["0", "1"]


def test_sigma_is_restricted_inverse(px):
    p = PropertyInstance(px, sigma_upto(A, 3))
    s = sigma(p, W("01"))
    # extensions of 0 inside ind({01}); 010 and 011 extend 01 and are gone
    assert words(apply_word(s, "0")) == ["00", "01", "000", "001"]


def test_seed_outside_universe(dsub1):
    p = PropertyInstance(dsub1, sigma_length(A, 3))
    with pytest.raises(UniverseError):
        mu_iterate(p, W("01"))


def test_alphabet_mismatch(px):
    with pytest.raises(AlphabetError):
        PropertyInstance(px, sigma_star("ab"))
    with pytest.raises(AlphabetError):
        ind(PropertyInstance(px), sigma_star("ab"))


def test_cap_validation(px):
    with pytest.raises(ValueError):
        mu_iterate(PropertyInstance(px), W("0"), cap=0)


def test_non_independent_seed_is_flagged(px, caplog):
    with caplog.at_level(logging.WARNING, logger="maxcode.operators"):
        trace = mu_iterate(PropertyInstance(px), W("0", "01"), cap=3)
    assert not trace.seed_independent
    assert "not independent" in caplog.text


def test_trace_bookkeeping(bx):
    trace = embed(bx, W("001"))
    assert trace.status == "converged at 2"
    assert len(trace.iterates) == 4 and len(trace.diffs) == 3
    assert equals(trace.iterates[2], trace.iterates[3])
    assert words(trace.diffs[0]) == ["10", "11", "000"]
    capped = embed(bx, W("001"), cap=1)
    assert capped.status == "cap reached (1)"
    assert capped.final is capped.iterates[-1]


def test_counterexample_witness(tsub1):
    p = PropertyInstance(tsub1, sigma_length(A, 4))
    assert is_maximal(p, W("0000")).witness == "0011"


# -- randomized comparison with the set oracle on bounded universes ----------------

RELATIONS = {
    "px": (make_prefix(A), oracles.prefixes),
    "sx": (make_suffix(A), oracles.suffixes),
    "bx": (make_bifix(A), oracles.bifixes),
    "tsub1": (make_tsub(1, A), lambda x: oracles.subs(x, 1)),
    "dsub1": (make_dsub(1, A), lambda x: oracles.dsubs(x, 1)),
    "dsub2": (make_dsub(2, A), lambda x: oracles.dsubs(x, 2)),
    "did2": (make_did2(A), oracles.did2),
    "fig1": (make_fig1(A), lambda x: oracles.fig1(x, 6)),
    "px|dsub1": (
        t_union(make_prefix(A), make_dsub(1, A)),
        oracles.union(oracles.prefixes, lambda x: oracles.dsubs(x, 1)),
    ),
}

UNIVERSES = {
    "upto4": (sigma_upto(A, 4), oracles.all_words(A, 4)),
    "len4": (sigma_length(A, 4), oracles.words_of_length(A, 4)),
}

names = st.sampled_from(sorted(RELATIONS))
universes = st.sampled_from(sorted(UNIVERSES))
subsets = st.frozensets(st.text(alphabet=A, max_size=4), max_size=6)


@settings(max_examples=200, deadline=None)
@given(names, universes, subsets)
def test_ind_and_mu_match_oracle(name, uname, xs):
    t, rel = RELATIONS[name]
    m, explicit = UNIVERSES[uname]
    xs = {x for x in xs if x in set(explicit)}
    p = PropertyInstance(t, m)
    assert set(words(ind(p, W(*xs)))) == oracles.ind(rel, explicit, xs)
    assert set(words(mu(p, W(*xs)))) == oracles.mu(rel, explicit, xs)


@settings(max_examples=200, deadline=None)
@given(names, universes, subsets)
def test_maximality_matches_oracle(name, uname, xs):
    t, rel = RELATIONS[name]
    m, explicit = UNIVERSES[uname]
    xs = {x for x in xs if x in set(explicit)}
    p = PropertyInstance(t, m)
    lang = W(*xs)
    assert is_independent(p, lang) == oracles.is_independent(rel, xs)
    gap = oracles.maximal_gap(rel, explicit, xs)
    assert set(words(maximality_gap(p, lang))) == gap
    if oracles.is_independent(rel, xs):
        result = is_maximal(p, lang)
        assert result.ok == (not gap)
        if gap:
            assert result.witness == min(gap, key=oracles.radix_key(A))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(["px", "sx", "bx", "dsub1", "dsub2", "did2", "px|dsub1"]), subsets)
def test_fixed_point_is_maximal_for_decreasing(name, xs):
    t, rel = RELATIONS[name]
    p = PropertyInstance(t, sigma_upto(A, 4))
    seed = extract_independent(p, W(*xs))
    trace = mu_iterate(p, seed)
    assert trace.converged
    assert is_maximal(p, trace.final)
    assert set(words(seed)) <= set(words(trace.final))
