"""Finite transducers over a single alphabet.

A :class:`Transducer` realizes a relation ``rel(t)`` on words; ``t(x)`` is the
set of outputs on input ``x``.  Every transition carries at most one symbol
on each side, and every public operation returns a trimmed transducer with
deterministic state numbering.

Composition follows the order of application: ``compose(t, s)(x) == s(t(x))``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable

from maxcode.automata import (
    EPS,
    Alphabet,
    Lang,
    Nfa,
    determinize,
    determinize_minimize,
    from_words,
    sigma_star,
)
from maxcode.errors import AlphabetError, MaxcodeError

Transition = tuple[int, str, str, int]


@dataclass(frozen=True)
class Transducer:
    alphabet: Alphabet
    num_states: int
    transitions: frozenset[Transition]
    initial: frozenset[int]
    final: frozenset[int]

    def __post_init__(self) -> None:
        n = self.num_states
        for p, a, b, q in self.transitions:
            if not (0 <= p < n and 0 <= q < n):
                raise MaxcodeError(f"transition {(p, a, b, q)} refers to an undeclared state")
            for label in (a, b):
                if label != EPS and label not in self.alphabet:
                    raise AlphabetError(f"label {label!r} is not a symbol of {self.alphabet}")
        if any(not 0 <= q < n for q in self.initial | self.final):
            raise MaxcodeError("initial/final states must be declared states")

    @classmethod
    def build(
        cls,
        alphabet: Alphabet | str,
        transitions: Iterable[tuple[Hashable, str, str, Hashable]],
        initial: Iterable[Hashable],
        final: Iterable[Hashable],
        states: Iterable[Hashable] = (),
    ) -> Transducer:
        """Normalize and trim a transducer given with arbitrary state names.

        Labels may be words.  A label ``xy/uv`` becomes a chain ``x/u, y/v``
        through fresh states; when one side is longer, its surplus symbols are
        paired with the empty word.
        """
        alphabet = Alphabet.of(alphabet)
        names: dict[Hashable, int] = {}

        def sid(name: Hashable) -> int:
            return names.setdefault(name, len(names))

        for name in list(initial) + list(states):
            sid(name)
        raw = [(sid(p), alphabet.check_word(a), alphabet.check_word(b), sid(q)) for p, a, b, q in transitions]
        init = frozenset(sid(q) for q in initial)
        fin = frozenset(sid(q) for q in final)
        count = len(names)
        trans = set()
        for p, a, b, q in raw:
            steps = max(len(a), len(b), 1)
            chain = [p] + [count + i for i in range(steps - 1)] + [q]
            count += steps - 1
            for i in range(steps):
                trans.add((chain[i], a[i] if i < len(a) else EPS, b[i] if i < len(b) else EPS, chain[i + 1]))
        return _trim(alphabet, count, trans, init, fin)

    @cached_property
    def outgoing(self) -> list[list[Transition]]:
        out: list[list[Transition]] = [[] for _ in range(self.num_states)]
        for t in sorted(self.transitions, key=self._order_key):
            out[t[0]].append(t)
        return out

    @cached_property
    def by_input(self) -> list[dict[str, list[Transition]]]:
        out: list[dict[str, list[Transition]]] = [{} for _ in range(self.num_states)]
        for t in sorted(self.transitions, key=self._order_key):
            out[t[0]].setdefault(t[1], []).append(t)
        return out

    def _order_key(self, t: Transition) -> tuple[int, int, int, int]:
        index = self.alphabet.index
        return (t[0], index.get(t[1], -1), index.get(t[2], -1), t[3])

    def __call__(self, word: str) -> Nfa:
        return apply_word(self, word)


def _trim(alphabet: Alphabet, n: int, trans: set[Transition], initial: frozenset[int], final: frozenset[int]) -> Transducer:
    """Drop useless states and renumber breadth-first from the initial states."""
    succ: dict[int, list[Transition]] = {}
    pred: dict[int, list[int]] = {}
    for t in trans:
        succ.setdefault(t[0], []).append(t)
        pred.setdefault(t[3], []).append(t[0])
    reach = set(initial)
    stack = list(initial)
    while stack:
        p = stack.pop()
        for t in succ.get(p, ()):
            if t[3] not in reach:
                reach.add(t[3])
                stack.append(t[3])
    alive = final & reach
    stack = list(alive)
    alive = set(alive)
    while stack:
        q = stack.pop()
        for p in pred.get(q, ()):
            if p in reach and p not in alive:
                alive.add(p)
                stack.append(p)
    index = alphabet.index

    def key(t: Transition) -> tuple[int, int, int]:
        return (index.get(t[1], -1), index.get(t[2], -1), t[3])

    number: dict[int, int] = {}
    queue = deque()
    for q in sorted(initial & alive):
        number[q] = len(number)
        queue.append(q)
    new_trans = set()
    while queue:
        p = queue.popleft()
        for t in sorted(succ.get(p, ()), key=key):
            q = t[3]
            if q not in alive:
                continue
            if q not in number:
                number[q] = len(number)
                queue.append(q)
            new_trans.add((number[p], t[1], t[2], number[q]))
    return Transducer(
        alphabet,
        len(number),
        frozenset(new_trans),
        frozenset(number[q] for q in initial if q in number),
        frozenset(number[q] for q in final if q in number),
    )


def _check_same(t: Transducer, other: Transducer | Lang) -> None:
    if t.alphabet != other.alphabet:
        raise AlphabetError(f"alphabet mismatch: {t.alphabet} vs {other.alphabet}")


def identity(alphabet: Alphabet | str) -> Transducer:
    """The identity relation on all words (useful as a non-altering example)."""
    alphabet = Alphabet.of(alphabet)
    return Transducer.build(alphabet, [(0, a, a, 0) for a in alphabet], [0], [0])


# ---------------------------------------------------------------------------
# Algebra


def invert(t: Transducer) -> Transducer:
    """Swap input and output labels; realizes the inverse relation."""
    trans = {(p, b, a, q) for p, a, b, q in t.transitions}
    return _trim(t.alphabet, t.num_states, trans, t.initial, t.final)


def t_union(t: Transducer, s: Transducer) -> Transducer:
    """Disjoint union; realizes ``rel(t) | rel(s)``."""
    _check_same(t, s)
    k = t.num_states
    trans = set(t.transitions) | {(p + k, a, b, q + k) for p, a, b, q in s.transitions}
    return _trim(
        t.alphabet,
        k + s.num_states,
        trans,
        t.initial | {q + k for q in s.initial},
        t.final | {q + k for q in s.final},
    )


def union_all(transducers: Iterable[Transducer]) -> Transducer:
    it = iter(transducers)
    result = next(it)
    for t in it:
        result = t_union(result, t)
    return result


def compose(t: Transducer, s: Transducer) -> Transducer:
    """Relation composition, ``{(x, z) : (x, y) in rel(t), (y, z) in rel(s)}``.

    Product states pair a state of ``t`` with one of ``s``.  When ``t`` emits
    nothing it moves alone; when ``s`` reads nothing it moves alone.
    """
    _check_same(t, s)
    index: dict[tuple[int, int], int] = {}
    order: list[tuple[int, int]] = []

    def sid(pair: tuple[int, int]) -> int:
        j = index.get(pair)
        if j is None:
            j = index[pair] = len(order)
            order.append(pair)
        return j

    initial = frozenset(sid((p, q)) for p in sorted(t.initial) for q in sorted(s.initial))
    trans = set()
    i = 0
    while i < len(order):
        p, q = order[i]
        for _, a, b, p2 in t.outgoing[p]:
            if b == EPS:
                trans.add((i, a, EPS, sid((p2, q))))
                continue
            for _, _, c, q2 in s.by_input[q].get(b, ()):
                trans.add((i, a, c, sid((p2, q2))))
        for _, _, c, q2 in s.by_input[q].get(EPS, ()):
            trans.add((i, EPS, c, sid((p, q2))))
        i += 1
    final = frozenset(j for j, (p, q) in enumerate(order) if p in t.final and q in s.final)
    return _trim(t.alphabet, len(order), trans, initial, final)


def power(t: Transducer, i: int) -> Transducer:
    """``i``-fold self-composition, ``i >= 1``.  Negative powers invert first."""
    if i == 0:
        raise ValueError("power must be nonzero")
    if i < 0:
        return power(invert(t), -i)
    result = t
    for _ in range(i - 1):
        result = compose(result, t)
    return result


def restrict(t: Transducer, lang: Lang, side: str = "output") -> Transducer:
    """Keep the pairs whose output (or input) word belongs to ``lang``."""
    _check_same(t, lang)
    if side not in ("output", "input"):
        raise ValueError(f"side must be 'output' or 'input', not {side!r}")
    d = determinize_minimize(lang)
    col = 2 if side == "output" else 1
    sym = t.alphabet.index
    index: dict[tuple[int, int], int] = {}
    order: list[tuple[int, int]] = []

    def sid(pair: tuple[int, int]) -> int:
        j = index.get(pair)
        if j is None:
            j = index[pair] = len(order)
            order.append(pair)
        return j

    initial = frozenset(sid((p, d.initial)) for p in sorted(t.initial))
    trans = set()
    i = 0
    while i < len(order):
        p, q = order[i]
        for tr in t.outgoing[p]:
            label = tr[col]
            q2 = q if label == EPS else d.delta[q][sym[label]]
            if q2 >= 0:
                trans.add((i, tr[1], tr[2], sid((tr[3], q2))))
        i += 1
    final = frozenset(j for j, (p, q) in enumerate(order) if p in t.final and q in d.final)
    return _trim(t.alphabet, len(order), trans, initial, final)


# ---------------------------------------------------------------------------
# Application


def apply_lang(t: Transducer, lang: Lang) -> Nfa:
    """Nfa for the image ``t(L) = union of t(x) over x in L``."""
    _check_same(t, lang)
    d = determinize(lang)
    sym = t.alphabet.index
    index: dict[tuple[int, int], int] = {}
    order: list[tuple[int, int]] = []

    def sid(pair: tuple[int, int]) -> int:
        j = index.get(pair)
        if j is None:
            j = index[pair] = len(order)
            order.append(pair)
        return j

    initial = frozenset(sid((p, d.initial)) for p in sorted(t.initial))
    trans = set()
    i = 0
    while i < len(order):
        p, q = order[i]
        for _, a, b, p2 in t.outgoing[p]:
            q2 = q if a == EPS else d.delta[q][sym[a]]
            if q2 >= 0:
                trans.add((i, b, sid((p2, q2))))
        i += 1
    final = frozenset(j for j, (p, q) in enumerate(order) if p in t.final and q in d.final)
    return Nfa(t.alphabet, len(order), frozenset(trans), initial, final)


def apply_word(t: Transducer, word: str) -> Nfa:
    """Nfa for ``t(word)``; it may be infinite when epsilon-input loops emit output."""
    return apply_lang(t, from_words([t.alphabet.check_word(word)], t.alphabet))


def domain(t: Transducer) -> Nfa:
    """Nfa for the set of inputs that have at least one output."""
    return apply_lang(invert(t), sigma_star(t.alphabet))
