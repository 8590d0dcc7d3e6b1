"""Regular expressions in the notation used for codes over small alphabets.

Grammar (whitespace is ignored)::

    expr   := term ('+' term)*
    term   := factor factor*              # juxtaposition is concatenation
    factor := atom ('*' | '^' DIGITS)*
    atom   := SYMBOL | '@' | '(' expr ')'

``+`` is union, ``@`` is the empty word and ``x^n`` is ``n``-fold
concatenation.  There is no literal for the empty language.
"""

from __future__ import annotations

from maxcode.automata import EPS, Alphabet, Nfa
from maxcode.errors import AlphabetError, ParseError


class _Builder:
    """Thompson construction: every fragment is a (start, end) pair of states."""

    def __init__(self) -> None:
        self.count = 0
        self.trans: set[tuple[int, str, int]] = set()

    def state(self) -> int:
        self.count += 1
        return self.count - 1

    def edge(self, p: int, label: str, q: int) -> None:
        self.trans.add((p, label, q))

    def symbol(self, label: str) -> tuple[int, int]:
        s, e = self.state(), self.state()
        self.edge(s, label, e)
        return s, e

    def concat(self, frags: list[tuple[int, int]]) -> tuple[int, int]:
        for (_, e1), (s2, _) in zip(frags, frags[1:]):
            self.edge(e1, EPS, s2)
        return frags[0][0], frags[-1][1]

    def union(self, frags: list[tuple[int, int]]) -> tuple[int, int]:
        s, e = self.state(), self.state()
        for fs, fe in frags:
            self.edge(s, EPS, fs)
            self.edge(fe, EPS, e)
        return s, e

    def star(self, frag: tuple[int, int]) -> tuple[int, int]:
        s, e = self.state(), self.state()
        fs, fe = frag
        self.edge(s, EPS, fs)
        self.edge(fe, EPS, fs)
        self.edge(fe, EPS, e)
        self.edge(s, EPS, e)
        return s, e


class _Parser:
    def __init__(self, src: str, alphabet: Alphabet) -> None:
        self.src = src
        self.alphabet = alphabet
        self.pos = 0
        self.b = _Builder()

    def peek(self) -> str | None:
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1
        return self.src[self.pos] if self.pos < len(self.src) else None

    def error(self, message: str) -> ParseError:
        return ParseError(message, position=self.pos)

    def parse(self) -> Nfa:
        # Build an AST first so that repetition can re-instantiate sub-automata.
        tree = self.expr()
        if self.peek() is not None:
            raise self.error(f"unexpected {self.src[self.pos]!r}")
        start, end = self.build(tree)
        return Nfa(self.alphabet, self.b.count, frozenset(self.b.trans), frozenset([start]), frozenset([end]))

    def expr(self) -> tuple:
        terms = [self.term()]
        while self.peek() == "+":
            self.pos += 1
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else ("union", terms)

    def term(self) -> tuple:
        factors = []
        while (c := self.peek()) is not None and c not in "+)":
            factors.append(self.factor())
        if not factors:
            raise self.error("expected a symbol, '@' or '('")
        return factors[0] if len(factors) == 1 else ("concat", factors)

    def factor(self) -> tuple:
        node = self.atom()
        while (c := self.peek()) in ("*", "^"):
            self.pos += 1
            if c == "*":
                node = ("star", node)
                continue
            self.peek()
            digits_at = self.pos
            while self.pos < len(self.src) and self.src[self.pos].isdigit():
                self.pos += 1
            if digits_at == self.pos:
                raise self.error("expected a decimal exponent after '^'")
            node = ("power", node, int(self.src[digits_at : self.pos]))
        return node

    def atom(self) -> tuple:
        c = self.peek()
        if c == "(":
            self.pos += 1
            node = self.expr()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.pos += 1
            return node
        if c == "@":
            self.pos += 1
            return ("eps",)
        if c in ("*", "^"):
            raise self.error(f"operator {c!r} has no operand")
        assert c is not None
        if c not in self.alphabet:
            raise AlphabetError(f"symbol {c!r} at position {self.pos} is not in alphabet {self.alphabet}")
        self.pos += 1
        return ("sym", c)

    def build(self, node: tuple) -> tuple[int, int]:
        b = self.b
        kind = node[0]
        if kind == "sym":
            return b.symbol(node[1])
        if kind == "eps":
            return b.symbol(EPS)
        if kind == "union":
            return b.union([self.build(n) for n in node[1]])
        if kind == "concat":
            return b.concat([self.build(n) for n in node[1]])
        if kind == "star":
            return b.star(self.build(node[1]))
        _, sub, n = node
        if n == 0:
            return b.symbol(EPS)
        return b.concat([self.build(sub) for _ in range(n)])


def parse(src: str, alphabet: Alphabet | str) -> Nfa:
    """Parse ``src`` into an Nfa over ``alphabet``.

    >>> from maxcode.automata import enumerate_upto
    >>> enumerate_upto(parse("(0+1)^2", "01"), 3)
    ['00', '01', '10', '11']
    """
    return _Parser(src, Alphabet.of(alphabet)).parse()
