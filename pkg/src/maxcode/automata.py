"""Regular languages as finite automata.

Every set of words the rest of the package manipulates (seed languages,
universes, iterates of the embedding operator) is carried as an :class:`Nfa`
or a :class:`Dfa`.  Functions here accept either kind interchangeably.

Words are plain ``str`` values whose characters are alphabet symbols; the
empty word is ``""``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator, Union

from maxcode.errors import AlphabetError, MaxcodeError, StateBudgetExceeded

EPS = ""
EPS_TEXT = "@"

# '@', '/', '#' belong to the file formats, the rest to the regex and CLI syntax.
RESERVED = frozenset("@/#+*()^,:")

DEFAULT_STATE_BUDGET = 100_000


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of single-character symbols.

    The listed order is the symbol order used for radix comparison and for
    canonical state numbering.
    """

    symbols: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.symbols:
            raise AlphabetError("alphabet must be nonempty")
        seen = set()
        for s in self.symbols:
            if not isinstance(s, str) or len(s) != 1:
                raise AlphabetError(f"alphabet symbols must be single characters, got {s!r}")
            if s.isspace() or not s.isprintable() or s in RESERVED:
                raise AlphabetError(f"reserved or unprintable character {s!r} cannot be a symbol")
            if s in seen:
                raise AlphabetError(f"duplicate symbol {s!r}")
            seen.add(s)

    @classmethod
    def of(cls, spec: Alphabet | str | Iterable[str]) -> Alphabet:
        """Build an alphabet from ``"01"``, ``"0 1"`` or an iterable of symbols."""
        if isinstance(spec, Alphabet):
            return spec
        if isinstance(spec, str):
            return cls(tuple(c for c in spec if not c.isspace()))
        return cls(tuple(spec))

    @cached_property
    def index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.symbols)}

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self.index

    def __str__(self) -> str:
        return "".join(self.symbols)

    def check_word(self, word: str) -> str:
        for c in word:
            if c not in self.index:
                raise AlphabetError(f"symbol {c!r} of word {word!r} is not in alphabet {self}")
        return word


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic automaton with epsilon moves.

    States are ``0 .. num_states - 1``; a transition is ``(p, label, q)`` where
    ``label`` is an alphabet symbol or ``EPS``.
    """

    alphabet: Alphabet
    num_states: int
    transitions: frozenset[tuple[int, str, int]]
    initial: frozenset[int]
    final: frozenset[int]

    def __post_init__(self) -> None:
        n = self.num_states
        for p, a, q in self.transitions:
            if not (0 <= p < n and 0 <= q < n):
                raise MaxcodeError(f"transition {(p, a, q)} refers to an undeclared state")
            if a != EPS and a not in self.alphabet:
                raise AlphabetError(f"transition label {a!r} is not in alphabet {self.alphabet}")
        if any(not 0 <= q < n for q in self.initial | self.final):
            raise MaxcodeError("initial/final states must be declared states")

    @cached_property
    def successors(self) -> list[dict[str, list[int]]]:
        succ: list[dict[str, list[int]]] = [{} for _ in range(self.num_states)]
        for p, a, q in sorted(self.transitions):
            succ[p].setdefault(a, []).append(q)
        return succ

    @cached_property
    def eps_closures(self) -> list[frozenset[int]]:
        succ = self.successors
        out = []
        for q in range(self.num_states):
            seen = {q}
            stack = [q]
            while stack:
                p = stack.pop()
                for r in succ[p].get(EPS, ()):
                    if r not in seen:
                        seen.add(r)
                        stack.append(r)
            out.append(frozenset(seen))
        return out

    def closure(self, states: Iterable[int]) -> frozenset[int]:
        result: set[int] = set()
        for q in states:
            result |= self.eps_closures[q]
        return frozenset(result)

    def accepts(self, word: str) -> bool:
        current = self.closure(self.initial)
        succ = self.successors
        for c in word:
            nxt = set()
            for p in current:
                nxt.update(succ[p].get(c, ()))
            if not nxt:
                return False
            current = self.closure(nxt)
        return not current.isdisjoint(self.final)


@dataclass(frozen=True, eq=False)
class Dfa:
    """Partial deterministic automaton.

    ``delta[q][i]`` is the successor of state ``q`` on the ``i``-th alphabet
    symbol, or ``-1`` when the move is undefined (implicit dead state).
    ``minimal`` marks automata produced by :func:`minimize`; those are trim and
    numbered breadth-first in symbol order, so two minimal automata accept the
    same language iff their ``delta``/``final`` coincide.
    """

    alphabet: Alphabet
    delta: tuple[tuple[int, ...], ...]
    initial: int
    final: frozenset[int]
    minimal: bool = False

    @property
    def num_states(self) -> int:
        return len(self.delta)

    def accepts(self, word: str) -> bool:
        q = self.initial
        index = self.alphabet.index
        for c in word:
            i = index.get(c)
            if i is None:
                return False
            q = self.delta[q][i]
            if q < 0:
                return False
        return q in self.final

    def signature(self) -> tuple:
        """Structural key; equal for isomorphic minimal automata."""
        return (self.alphabet.symbols, self.delta, self.initial, tuple(sorted(self.final)))

    def to_nfa(self) -> Nfa:
        symbols = self.alphabet.symbols
        trans = frozenset(
            (q, symbols[i], r) for q, row in enumerate(self.delta) for i, r in enumerate(row) if r >= 0
        )
        return Nfa(self.alphabet, self.num_states, trans, frozenset([self.initial]), self.final)


Lang = Union[Nfa, Dfa]


def as_nfa(a: Lang) -> Nfa:
    return a.to_nfa() if isinstance(a, Dfa) else a


def _same_alphabet(a: Lang, b: Lang) -> Alphabet:
    if a.alphabet != b.alphabet:
        raise AlphabetError(f"alphabet mismatch: {a.alphabet} vs {b.alphabet}")
    return a.alphabet


def _budget(budget: int | None) -> int:
    return DEFAULT_STATE_BUDGET if budget is None else budget


# ---------------------------------------------------------------------------
# Construction


def from_words(words: Iterable[str], alphabet: Alphabet | str) -> Nfa:
    """Automaton (a trie) accepting exactly the given finite set of words."""
    alphabet = Alphabet.of(alphabet)
    children: list[dict[str, int]] = [{}]
    final = set()
    for w in sorted(set(words)):
        alphabet.check_word(w)
        q = 0
        for c in w:
            nxt = children[q].get(c)
            if nxt is None:
                nxt = len(children)
                children[q][c] = nxt
                children.append({})
            q = nxt
        final.add(q)
    trans = frozenset((q, c, r) for q, kids in enumerate(children) for c, r in kids.items())
    return Nfa(alphabet, len(children), trans, frozenset([0]), frozenset(final))


def empty_language(alphabet: Alphabet | str) -> Dfa:
    alphabet = Alphabet.of(alphabet)
    return Dfa(alphabet, ((-1,) * len(alphabet),), 0, frozenset(), minimal=True)


def sigma_star(alphabet: Alphabet | str) -> Dfa:
    """All words over the alphabet."""
    alphabet = Alphabet.of(alphabet)
    return Dfa(alphabet, ((0,) * len(alphabet),), 0, frozenset([0]), minimal=True)


def sigma_length(alphabet: Alphabet | str, n: int) -> Dfa:
    """All words of length exactly ``n``."""
    alphabet = Alphabet.of(alphabet)
    k = len(alphabet)
    delta = tuple((i + 1,) * k for i in range(n)) + ((-1,) * k,)
    return Dfa(alphabet, delta, 0, frozenset([n]), minimal=True)


def sigma_upto(alphabet: Alphabet | str, n: int) -> Dfa:
    """All words of length at most ``n``."""
    alphabet = Alphabet.of(alphabet)
    k = len(alphabet)
    delta = tuple((i + 1,) * k for i in range(n)) + ((-1,) * k,)
    return Dfa(alphabet, delta, 0, frozenset(range(n + 1)), minimal=True)


def regex_parse(src: str, alphabet: Alphabet | str) -> Nfa:
    """Parse a regular expression (see :mod:`maxcode.regex`) into an Nfa."""
    from maxcode.regex import parse

    return parse(src, Alphabet.of(alphabet))


# ---------------------------------------------------------------------------
# Determinization and minimization


def determinize(a: Lang, budget: int | None = None) -> Dfa:
    """Subset construction; the result is accessible but not minimized."""
    if isinstance(a, Dfa):
        return a
    limit = _budget(budget)
    succ = a.successors
    symbols = a.alphabet.symbols
    start = a.closure(a.initial)
    index = {start: 0}
    order = [start]
    rows = []
    i = 0
    while i < len(order):
        subset = order[i]
        row = []
        for c in symbols:
            targets: set[int] = set()
            for p in subset:
                targets.update(succ[p].get(c, ()))
            if not targets:
                row.append(-1)
                continue
            nxt = a.closure(targets)
            j = index.get(nxt)
            if j is None:
                j = len(order)
                if j >= limit:
                    raise StateBudgetExceeded(f"determinization exceeded {limit} states")
                index[nxt] = j
                order.append(nxt)
            row.append(j)
        rows.append(tuple(row))
        i += 1
    final = frozenset(j for j, s in enumerate(order) if not s.isdisjoint(a.final))
    return Dfa(a.alphabet, tuple(rows), 0, final)


def _useful_states(d: Dfa) -> set[int]:
    """States that are reachable from the initial state and can reach a final one."""
    reach = {d.initial}
    stack = [d.initial]
    while stack:
        q = stack.pop()
        for r in d.delta[q]:
            if r >= 0 and r not in reach:
                reach.add(r)
                stack.append(r)
    preds: dict[int, list[int]] = {}
    for q in reach:
        for r in d.delta[q]:
            if r >= 0:
                preds.setdefault(r, []).append(q)
    alive = {q for q in reach if q in d.final}
    stack = list(alive)
    while stack:
        q = stack.pop()
        for p in preds.get(q, ()):
            if p not in alive:
                alive.add(p)
                stack.append(p)
    return alive


def minimize(d: Dfa) -> Dfa:
    """Canonical minimal trim Dfa, states numbered breadth-first in symbol order."""
    if d.minimal:
        return d
    useful = _useful_states(d)
    if d.initial not in useful:
        return empty_language(d.alphabet)
    states = sorted(useful)
    block = {q: int(q in d.final) for q in states}
    count = len(set(block.values()))
    while True:
        sigs: dict[tuple, int] = {}
        new_block = {}
        for q in states:
            key = (block[q],) + tuple(block[r] if r in useful else -1 for r in d.delta[q])
            new_block[q] = sigs.setdefault(key, len(sigs))
        block = new_block
        if len(sigs) == count:
            break
        count = len(sigs)
    rep: dict[int, int] = {}
    for q in states:
        rep.setdefault(block[q], q)
    start = block[d.initial]
    number = {start: 0}
    queue = deque([start])
    rows = []
    final = set()
    while queue:
        b = queue.popleft()
        q = rep[b]
        if q in d.final:
            final.add(number[b])
        row = []
        for r in d.delta[q]:
            if r < 0 or r not in useful:
                row.append(-1)
                continue
            target = block[r]
            if target not in number:
                number[target] = len(number)
                queue.append(target)
            row.append(number[target])
        rows.append(tuple(row))
    return Dfa(d.alphabet, tuple(rows), 0, frozenset(final), minimal=True)


def determinize_minimize(a: Lang, budget: int | None = None) -> Dfa:
    return minimize(determinize(a, budget))


# ---------------------------------------------------------------------------
# Boolean algebra


def _product(a: Dfa, b: Dfa, accept: Callable[[bool, bool], bool], budget: int | None) -> Dfa:
    limit = _budget(budget)
    k = len(a.alphabet)
    start = (a.initial, b.initial)
    index = {start: 0}
    order = [start]
    rows = []
    i = 0
    while i < len(order):
        p, q = order[i]
        row = []
        for s in range(k):
            p2 = a.delta[p][s] if p >= 0 else -1
            q2 = b.delta[q][s] if q >= 0 else -1
            if p2 < 0 and q2 < 0:
                row.append(-1)
                continue
            key = (p2, q2)
            j = index.get(key)
            if j is None:
                j = len(order)
                if j >= limit:
                    raise StateBudgetExceeded(f"product construction exceeded {limit} states")
                index[key] = j
                order.append(key)
            row.append(j)
        rows.append(tuple(row))
        i += 1
    final = frozenset(j for j, (p, q) in enumerate(order) if accept(p in a.final, q in b.final))
    return Dfa(a.alphabet, tuple(rows), 0, final)


_OPS: dict[str, Callable[[bool, bool], bool]] = {
    "union": lambda x, y: x or y,
    "intersection": lambda x, y: x and y,
    "difference": lambda x, y: x and not y,
    "symmetric_difference": lambda x, y: x != y,
}


def boolean_combine(a: Lang, b: Lang, op: str, budget: int | None = None) -> Dfa:
    """``op`` is one of ``union``, ``intersection``, ``difference``, ``symmetric_difference``."""
    _same_alphabet(a, b)
    try:
        accept = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown boolean operation {op!r}") from None
    return minimize(_product(determinize(a, budget), determinize(b, budget), accept, budget))


def union(a: Lang, b: Lang, budget: int | None = None) -> Dfa:
    return boolean_combine(a, b, "union", budget)


def intersection(a: Lang, b: Lang, budget: int | None = None) -> Dfa:
    return boolean_combine(a, b, "intersection", budget)


def difference(a: Lang, b: Lang, budget: int | None = None) -> Dfa:
    return boolean_combine(a, b, "difference", budget)


def union_all(langs: Iterable[Lang], alphabet: Alphabet | str, budget: int | None = None) -> Dfa:
    result: Dfa = empty_language(alphabet)
    for lang in langs:
        result = union(result, lang, budget)
    return result


def complement(a: Lang, budget: int | None = None) -> Dfa:
    d = determinize(a, budget)
    sink = d.num_states
    rows = tuple(tuple(sink if r < 0 else r for r in row) for row in d.delta)
    rows += ((sink,) * len(d.alphabet),)
    final = frozenset(range(sink + 1)) - d.final
    return minimize(Dfa(d.alphabet, rows, d.initial, final))


# ---------------------------------------------------------------------------
# Queries


def is_empty(a: Lang) -> bool:
    if isinstance(a, Dfa):
        return a.initial not in _useful_states(a)
    seen = set(a.closure(a.initial))
    stack = list(seen)
    succ = a.successors
    while stack:
        q = stack.pop()
        if q in a.final:
            return False
        for targets in succ[q].values():
            for r in targets:
                if r not in seen:
                    seen.add(r)
                    stack.append(r)
    return True


def equals(a: Lang, b: Lang, budget: int | None = None) -> bool:
    """Language equality via emptiness of the symmetric difference."""
    _same_alphabet(a, b)
    da, db = determinize(a, budget), determinize(b, budget)
    return is_empty(_product(da, db, _OPS["symmetric_difference"], budget))


def is_subset(a: Lang, b: Lang, budget: int | None = None) -> bool:
    _same_alphabet(a, b)
    return is_empty(_product(determinize(a, budget), determinize(b, budget), _OPS["difference"], budget))


def contains(a: Lang, word: str) -> bool:
    return a.accepts(word)


def _exact_coreach(d: Dfa, n: int) -> list[set[int]]:
    """``out[r]`` holds the states from which some word of length exactly r is accepted."""
    out = [set(d.final)]
    for _ in range(n):
        prev = out[-1]
        out.append({q for q, row in enumerate(d.delta) if any(r in prev for r in row if r >= 0)})
    return out


def _words_of_length(d: Dfa, length: int, coreach: list[set[int]]) -> Iterator[str]:
    symbols = d.alphabet.symbols

    def walk(q: int, remaining: int, prefix: str) -> Iterator[str]:
        if remaining == 0:
            yield prefix
            return
        for i, r in enumerate(d.delta[q]):
            if r >= 0 and r in coreach[remaining - 1]:
                yield from walk(r, remaining - 1, prefix + symbols[i])

    if d.initial in coreach[length]:
        yield from walk(d.initial, length, "")


def enumerate_upto(a: Lang, n: int) -> list[str]:
    """All accepted words of length at most ``n``, in radix order."""
    if n < 0:
        raise ValueError("length bound must be nonnegative")
    d = determinize_minimize(a)
    coreach = _exact_coreach(d, n)
    words: list[str] = []
    for length in range(n + 1):
        words.extend(_words_of_length(d, length, coreach))
    return words


def radix_min(a: Lang) -> str | None:
    """The radix-smallest accepted word, or ``None`` for the empty language."""
    d = determinize_minimize(a)
    if not d.final:
        return None
    # Shortest accepted length by BFS; a trim Dfa always has one.
    dist = {d.initial: 0}
    queue = deque([d.initial])
    shortest = None
    while queue:
        q = queue.popleft()
        if q in d.final:
            shortest = dist[q]
            break
        for r in d.delta[q]:
            if r >= 0 and r not in dist:
                dist[r] = dist[q] + 1
                queue.append(r)
    assert shortest is not None
    return next(_words_of_length(d, shortest, _exact_coreach(d, shortest)))


def is_finite(a: Lang) -> bool:
    d = determinize_minimize(a)
    if not d.final:
        return True
    color = [0] * d.num_states
    stack = [(d.initial, iter(d.delta[d.initial]))]
    color[d.initial] = 1
    while stack:
        q, it = stack[-1]
        for r in it:
            if r < 0:
                continue
            if color[r] == 1:
                return False
            if color[r] == 0:
                color[r] = 1
                stack.append((r, iter(d.delta[r])))
                break
        else:
            color[q] = 2
            stack.pop()
    return True


def words(a: Lang) -> list[str]:
    """All words of a finite language, in radix order."""
    d = determinize_minimize(a)
    if not is_finite(d):
        raise MaxcodeError("language is infinite")
    # A trim acyclic Dfa has no accepted word longer than its state count.
    return enumerate_upto(d, d.num_states)
