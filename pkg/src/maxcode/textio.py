"""Plain-text formats for automata, transducers, word lists and language specs.

Automaton / transducer files hold one ``key: value`` item per line; ``#``
starts a comment::

    alphabet: 0 1
    states: q0 q1
    initial: q0
    final: q1
    trans: q0 0 q0          # automaton: one symbol or @
    trans: q0 10/0 q1       # transducer: in/out, each a word or @

Word lists have one word per line, ``@`` alone standing for the empty word.
"""

from __future__ import annotations

from pathlib import Path

from maxcode import automata as fa
from maxcode.automata import EPS, EPS_TEXT, Alphabet, Dfa, Lang, Nfa
from maxcode.errors import AlphabetError, MaxcodeError, ParseError
from maxcode.transducer import Transducer

_KEYS = ("alphabet", "states", "initial", "final", "trans")


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _items(text: str) -> tuple[Alphabet, dict[str, list[str]], list[tuple[int, list[str]]]]:
    header: dict[str, list[str]] = {}
    trans: list[tuple[int, list[str]]] = []
    for lineno, line in _lines(text):
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in _KEYS:
            raise ParseError(f"expected one of {', '.join(k + ':' for k in _KEYS)}", line=lineno)
        fields = rest.split()
        if key == "trans":
            trans.append((lineno, fields))
        else:
            header.setdefault(key, []).extend(fields)
    if "alphabet" not in header:
        raise ParseError("missing 'alphabet:' line")
    return Alphabet.of("".join(header["alphabet"])), header, trans


def _word(token: str, alphabet: Alphabet, lineno: int | None = None) -> str:
    if token == EPS_TEXT:
        return EPS
    try:
        return alphabet.check_word(token)
    except AlphabetError as exc:
        if lineno is None:
            raise
        raise AlphabetError(f"{exc} (line {lineno})") from None


def parse_automaton(text: str) -> Nfa:
    alphabet, header, trans = _items(text)
    names: dict[str, int] = {}

    def sid(name: str) -> int:
        return names.setdefault(name, len(names))

    for name in header.get("states", []):
        sid(name)
    initial = frozenset(sid(n) for n in header.get("initial", []))
    final = frozenset(sid(n) for n in header.get("final", []))
    edges = set()
    for lineno, fields in trans:
        if len(fields) != 3:
            raise ParseError("automaton transition must be 'trans: SRC LABEL DST'", line=lineno)
        src, label, dst = fields
        label = _word(label, alphabet, lineno)
        if len(label) > 1:
            raise ParseError(f"automaton label {label!r} must be one symbol or @", line=lineno)
        edges.add((sid(src), label, sid(dst)))
    return Nfa(alphabet, len(names), frozenset(edges), initial, final)


def load_normalize(text: str) -> Transducer:
    """Parse a transducer file, splitting word labels and trimming."""
    alphabet, header, trans = _items(text)
    edges = []
    for lineno, fields in trans:
        if len(fields) != 3 or fields[1].count("/") != 1:
            raise ParseError("transducer transition must be 'trans: SRC IN/OUT DST'", line=lineno)
        src, label, dst = fields
        a, b = label.split("/")
        edges.append((src, _word(a, alphabet, lineno), _word(b, alphabet, lineno), dst))
    return Transducer.build(
        alphabet, edges, header.get("initial", []), header.get("final", []), header.get("states", [])
    )


parse_transducer = load_normalize


def format_word(label: str) -> str:
    return label if label else EPS_TEXT


def format_automaton(a: Lang) -> str:
    """Text form of a language.  A Dfa is written as-is; an Nfa is minimized first."""
    d = a if isinstance(a, Dfa) else fa.determinize_minimize(a)
    symbols = d.alphabet.symbols
    lines = [
        f"alphabet: {' '.join(symbols)}",
        f"states: {' '.join(f'q{i}' for i in range(d.num_states))}",
        f"initial: q{d.initial}",
        f"final: {' '.join(f'q{i}' for i in sorted(d.final))}".rstrip(),
    ]
    for q, row in enumerate(d.delta):
        for i, r in enumerate(row):
            if r >= 0:
                lines.append(f"trans: q{q} {symbols[i]} q{r}")
    return "\n".join(lines) + "\n"


def format_transducer(t: Transducer) -> str:
    index = t.alphabet.index
    lines = [
        f"alphabet: {' '.join(t.alphabet.symbols)}",
        f"states: {' '.join(str(i) for i in range(t.num_states))}",
        f"initial: {' '.join(str(i) for i in sorted(t.initial))}".rstrip(),
        f"final: {' '.join(str(i) for i in sorted(t.final))}".rstrip(),
    ]
    for p, a, b, q in sorted(t.transitions, key=lambda e: (e[0], index.get(e[1], -1), index.get(e[2], -1), e[3])):
        lines.append(f"trans: {p} {format_word(a)}/{format_word(b)} {q}")
    return "\n".join(lines) + "\n"


def format_words(words) -> str:
    return "".join(f"{format_word(w)}\n" for w in words)


def parse_words(text: str, alphabet: Alphabet | str) -> Nfa:
    alphabet = Alphabet.of(alphabet)
    return fa.from_words([_word(line, alphabet, lineno) for lineno, line in _lines(text)], alphabet)


def read_transducer(path: str | Path) -> Transducer:
    return load_normalize(Path(path).read_text())


def looks_like_automaton(text: str) -> bool:
    for _, line in _lines(text):
        return line.startswith("alphabet:")
    return False


def load_language(spec: str, alphabet: Alphabet | str | None = None) -> Lang:
    """Parse a language given as ``re:<regex>``, ``words:<w1,w2,...>`` or ``file:<path>``.

    ``file:`` accepts an automaton file (recognized by its ``alphabet:``
    header) or a word list.  Regexes and word lists need ``alphabet``.
    """
    kind, sep, body = spec.partition(":")
    if not sep or kind not in ("re", "words", "file"):
        raise MaxcodeError(f"language spec must start with re:, words: or file:, got {spec!r}")
    if kind == "file":
        path = Path(body)
        if not path.is_file():
            raise MaxcodeError(f"no such file: {body}")
        text = path.read_text()
        if looks_like_automaton(text):
            lang = parse_automaton(text)
            if alphabet is not None and lang.alphabet != Alphabet.of(alphabet):
                raise AlphabetError(f"{body}: alphabet {lang.alphabet} differs from {Alphabet.of(alphabet)}")
            return lang
        if alphabet is None:
            raise MaxcodeError("an alphabet is needed to read a word list")
        return parse_words(text, alphabet)
    if alphabet is None:
        raise MaxcodeError(f"an alphabet is needed to read {kind}: languages")
    alphabet = Alphabet.of(alphabet)
    if kind == "re":
        return fa.regex_parse(body, alphabet)
    items = [w.strip() for w in body.split(",")] if body.strip() else []
    return fa.from_words([_word(w, alphabet) for w in items], alphabet)
