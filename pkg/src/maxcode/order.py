"""Radix (quasi-lexicographic) order and bounded checks on transducers.

Shorter words come first; words of equal length compare lexicographically by
alphabet order.  The transducer checks here only look at inputs up to a
length bound: the unbounded questions are not decidable in general.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Any, Iterator

from maxcode.automata import (
    Alphabet,
    Nfa,
    difference,
    empty_language,
    is_empty,
    is_finite,
    radix_min,
)
from maxcode.transducer import Transducer, apply_lang, apply_word

DEFAULT_VERIFY_BOUND = 8


@dataclass(frozen=True)
class Check:
    """Outcome of a decision that can fail with a witness.

    Truthy iff ``ok``.  ``witness`` is ``None`` on success; note that a
    witness may itself be the empty word.
    """

    ok: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok


PASS = Check(True)


@dataclass(frozen=True)
class RadixOrder:
    alphabet: Alphabet

    def __init__(self, alphabet: Alphabet | str) -> None:
        object.__setattr__(self, "alphabet", Alphabet.of(alphabet))

    @property
    def q(self) -> int:
        return len(self.alphabet)

    def key(self, word: str) -> tuple[int, tuple[int, ...]]:
        """Sort key: ``sorted(ws, key=order.key)`` lists words in radix order."""
        index = self.alphabet.index
        return (len(word), tuple(index[c] for c in word))

    def compare(self, u: str, v: str) -> int:
        """-1, 0 or 1 as ``u`` precedes, equals or follows ``v``."""
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def less(self, u: str, v: str) -> bool:
        return self.key(u) < self.key(v)

    def pos(self, word: str) -> int:
        """Zero-based position of ``word`` in the order."""
        q = self.q
        value = 0
        for c in word:
            value = value * q + self.alphabet.index[c]
        # Number of words shorter than |word|: 1 + q + ... + q^(n-1).
        shorter = sum(q**i for i in range(len(word)))
        return shorter + value

    def word_at(self, position: int) -> str:
        """Inverse of :meth:`pos`."""
        if position < 0:
            raise ValueError("position must be nonnegative")
        q, n = self.q, 0
        while position >= q**n:
            position -= q**n
            n += 1
        digits = []
        for _ in range(n):
            position, r = divmod(position, q)
            digits.append(self.alphabet.symbols[r])
        return "".join(reversed(digits))

    def words_upto(self, n: int) -> Iterator[str]:
        """Every word of length at most ``n``, in radix order."""
        for length in range(n + 1):
            for t in product(self.alphabet.symbols, repeat=length):
                yield "".join(t)

    def lang_below(self, word: str) -> Nfa:
        """Automaton for ``{y : y precedes word}``."""
        alphabet = self.alphabet
        self.alphabet.check_word(word)
        n = len(word)
        if n == 0:
            return empty_language(alphabet).to_nfa()
        # Shorter words: states 0..n-1 count length, all accepting.
        # Same length and smaller: tight states follow ``word``; the first
        # smaller symbol leaves to the "below" chain b_j, accepting at length n.
        trans = set()
        for i in range(n - 1):
            for a in alphabet:
                trans.add((i, a, i + 1))
        tight = [n + i for i in range(n)]  # tight[i]: read word[:i]
        below = [2 * n + j for j in range(n + 1)]  # below[j]: read j symbols, already smaller
        index = alphabet.index
        for i, c in enumerate(word):
            if i + 1 < n:
                trans.add((tight[i], c, tight[i + 1]))
            for a in alphabet:
                if index[a] < index[c]:
                    trans.add((tight[i], a, below[i + 1]))
        for j in range(1, n):
            for a in alphabet:
                trans.add((below[j], a, below[j + 1]))
        return Nfa(
            alphabet,
            3 * n + 1,
            frozenset(trans),
            frozenset([0, tight[0]]),
            frozenset(list(range(n)) + [below[n]]),
        )


def compare(u: str, v: str, alphabet: Alphabet | str) -> int:
    return RadixOrder(alphabet).compare(u, v)


def word_pos(word: str, alphabet: Alphabet | str) -> int:
    return RadixOrder(alphabet).pos(word)


def lang_below(word: str, alphabet: Alphabet | str) -> Nfa:
    return RadixOrder(alphabet).lang_below(word)


def verify_input_altering(t: Transducer, n: int = DEFAULT_VERIFY_BOUND) -> Check:
    """Check ``w not in t(w)`` for every ``|w| <= n``; witness is the smallest failing ``w``."""
    for w in RadixOrder(t.alphabet).words_upto(n):
        if apply_word(t, w).accepts(w):
            return Check(False, w)
    return PASS


def verify_input_decreasing(t: Transducer, n: int = DEFAULT_VERIFY_BOUND) -> Check:
    """Check that every output is radix-smaller than its input, for ``|x| <= n``.

    The witness is the pair ``(x, y)`` with ``x`` smallest and then ``y``
    smallest such that ``y`` is in ``t(x)`` but does not precede ``x``.
    """
    order = RadixOrder(t.alphabet)
    for x in order.words_upto(n):
        bad = difference(apply_word(t, x), order.lang_below(x))
        y = radix_min(bad)
        if y is not None:
            return Check(False, (x, y))
    return PASS


def verify_transitive(t: Transducer, n: int = DEFAULT_VERIFY_BOUND) -> Check:
    """Check ``t(t(x)) <= t(x)`` for every ``|x| <= n``."""
    for x in RadixOrder(t.alphabet).words_upto(n):
        once = apply_word(t, x)
        twice = apply_lang(t, once)
        if not is_empty(difference(twice, once)):
            return Check(False, x)
    return PASS


def verify_finite_outputs(t: Transducer, n: int = DEFAULT_VERIFY_BOUND) -> Check:
    """Check that ``t(x)`` is a finite language for every ``|x| <= n``."""
    for x in RadixOrder(t.alphabet).words_upto(n):
        if not is_finite(apply_word(t, x)):
            return Check(False, x)
    return PASS

