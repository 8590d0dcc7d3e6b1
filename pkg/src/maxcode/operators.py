"""Independence, maximality and the max-min embedding operator.

A :class:`PropertyInstance` fixes an input-altering transducer ``t`` and a
universe ``M``.  A language ``L`` is *t-independent* when ``t(L)`` and ``L``
are disjoint, and *maximal* when no word of ``M`` can be added to it without
losing independence.

Starting from an independent seed, :func:`mu_iterate` applies

    ind(X) = M - (t(X) | t^-1(X))
    mu(X)  = ind(X) - t^-1(ind(X))

until two consecutive iterates coincide.  For input-decreasing transducers the
fixed point, when reached, is a maximal independent language containing the
seed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property

from maxcode import automata as fa
from maxcode.automata import Alphabet, Dfa, Lang
from maxcode.errors import AlphabetError, NotIndependentError, UniverseError
from maxcode.order import Check
from maxcode.transducer import Transducer, apply_lang, invert, restrict, t_union

log = logging.getLogger(__name__)

DEFAULT_MAX_ITER = 64


@dataclass(frozen=True)
class PropertyInstance:
    """A transducer together with the universe relative to which maximality is meant."""

    t: Transducer
    universe: Dfa
    budget: int | None = None

    def __init__(self, t: Transducer, universe: Lang | None = None, budget: int | None = None) -> None:
        if universe is None:
            universe = fa.sigma_star(t.alphabet)
        if universe.alphabet != t.alphabet:
            raise AlphabetError(f"universe alphabet {universe.alphabet} differs from {t.alphabet}")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "universe", fa.determinize_minimize(universe, budget))
        object.__setattr__(self, "budget", budget)

    @property
    def alphabet(self) -> Alphabet:
        return self.t.alphabet

    @cached_property
    def inverse(self) -> Transducer:
        return invert(self.t)

    def image(self, lang: Lang) -> Dfa:
        """``t(L)``, minimized."""
        return fa.determinize_minimize(apply_lang(self.t, self._check(lang)), self.budget)

    def preimage(self, lang: Lang) -> Dfa:
        """``t^-1(L)``, minimized."""
        return fa.determinize_minimize(apply_lang(self.inverse, self._check(lang)), self.budget)

    def _check(self, lang: Lang) -> Lang:
        if lang.alphabet != self.alphabet:
            raise AlphabetError(f"language alphabet {lang.alphabet} differs from {self.alphabet}")
        return lang


def ind(p: PropertyInstance, x: Lang) -> Dfa:
    """Words of the universe that are in ``x`` or unrelated to every word of ``x``."""
    related = fa.union(p.image(x), p.preimage(x), p.budget)
    return fa.difference(p.universe, related, p.budget)


def mu(p: PropertyInstance, x: Lang) -> Dfa:
    """The max-min operator: ``ind(x)`` minus the words that map into ``ind(x)``."""
    i = ind(p, x)
    return fa.difference(i, p.preimage(i), p.budget)


def sigma(p: PropertyInstance, x: Lang) -> Transducer:
    """``t^-1`` restricted to outputs in ``ind(x)``; exposed for tests."""
    return restrict(p.inverse, ind(p, x), "output")


def is_independent(p: PropertyInstance, lang: Lang, via: str = "t") -> bool:
    """True iff ``t(L)`` and ``L`` are disjoint.

    ``via`` selects the equivalent test to run: ``"t"``, ``"inverse"``
    (``t^-1(L)`` against ``L``) or ``"both"`` (``(t | t^-1)(L)`` against ``L``).
    """
    p._check(lang)
    if via == "t":
        t = p.t
    elif via == "inverse":
        t = p.inverse
    elif via == "both":
        t = t_union(p.t, p.inverse)
    else:
        raise ValueError(f"via must be 't', 'inverse' or 'both', not {via!r}")
    return fa.is_empty(fa.intersection(apply_lang(t, lang), lang, p.budget))


def maximality_gap(p: PropertyInstance, lang: Lang) -> Dfa:
    """``M - (L | t(L) | t^-1(L))``: the words that could still be added to ``L``."""
    covered = fa.union(fa.union(lang, p.image(lang), p.budget), p.preimage(lang), p.budget)
    return fa.difference(p.universe, covered, p.budget)


def is_maximal(p: PropertyInstance, lang: Lang) -> Check:
    """Decide maximality of an independent ``L``.

    On failure the witness is the radix-smallest word that can be added to
    ``L`` without breaking independence.
    """
    if not is_independent(p, lang):
        raise NotIndependentError("maximality is only defined for independent languages")
    witness = fa.radix_min(maximality_gap(p, lang))
    return Check(True) if witness is None else Check(False, witness)


def extract_independent(p: PropertyInstance, lang: Lang) -> Dfa:
    """``L - t^-1(L)``, which is always t-independent."""
    return fa.difference(lang, p.preimage(lang), p.budget)


@dataclass
class EmbedTrace:
    """Iterates ``mu^0 L, mu^1 L, ...`` of one embedding run.

    ``converged_at`` is the first ``i`` with ``mu^i L == mu^(i+1) L`` (both
    iterates are kept), or ``None`` when ``cap`` iterations ran out.
    """

    iterates: list[Dfa]
    cap: int
    converged_at: int | None = None
    seed_independent: bool = True
    diffs: list[Dfa] = field(default_factory=list)

    @property
    def converged(self) -> bool:
        return self.converged_at is not None

    @property
    def final(self) -> Dfa:
        """The fixed point if converged, otherwise the last computed iterate."""
        if self.converged_at is not None:
            return self.iterates[self.converged_at]
        return self.iterates[-1]

    @property
    def status(self) -> str:
        if self.converged_at is not None:
            return f"converged at {self.converged_at}"
        return f"cap reached ({self.cap})"


def mu_iterate(p: PropertyInstance, seed: Lang, cap: int = DEFAULT_MAX_ITER) -> EmbedTrace:
    """Iterate the max-min operator from ``seed`` for at most ``cap`` steps.

    Raises :class:`UniverseError` if the seed is not inside the universe.  A
    seed that is not independent is accepted (the operators are defined on
    any language) but flagged in ``seed_independent``; the maximality
    guarantee does not apply then.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    current = fa.determinize_minimize(p._check(seed), p.budget)
    if not fa.is_subset(current, p.universe, p.budget):
        raise UniverseError("seed language is not a subset of the universe")
    independent = is_independent(p, current)
    if not independent:
        log.warning("seed is not independent; the embedding guarantees do not apply")
    trace = EmbedTrace([current], cap, seed_independent=independent)
    for i in range(1, cap + 1):
        nxt = mu(p, current)
        trace.iterates.append(nxt)
        trace.diffs.append(fa.difference(nxt, current, p.budget))
        if fa.equals(nxt, current, p.budget):
            trace.converged_at = i - 1
            break
        current = nxt
    return trace


def embed(t: Transducer, seed: Lang, universe: Lang | None = None, cap: int = DEFAULT_MAX_ITER) -> EmbedTrace:
    return mu_iterate(PropertyInstance(t, universe), seed, cap)


def extract_then_embed(t: Transducer, lang: Lang, cap: int = DEFAULT_MAX_ITER) -> EmbedTrace:
    """Find a maximal independent subset of ``lang``.

    First keeps ``X = L - t^-1(L)`` (independent), then embeds ``X`` with the
    universe set to ``L`` itself.
    """
    p = PropertyInstance(t, lang)
    return mu_iterate(p, extract_independent(p, lang), cap)
