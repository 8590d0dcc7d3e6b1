"""Transducers describing standard code properties.

Naming follows the usual shorthand: ``px`` prefix, ``sx`` suffix, ``bx``
bifix, ``tsub`` substitution detection, ``dsub`` its order-decreasing form,
``did2`` two insertion/deletion errors.  Every constructor returns a trimmed
transducer with stable state numbering.
"""

from __future__ import annotations

from maxcode.automata import EPS, Alphabet
from maxcode.errors import AlphabetError
from maxcode.transducer import Transducer, t_union


def _copy(alphabet: Alphabet, p, q=None) -> list:
    q = p if q is None else q
    return [(p, a, a, q) for a in alphabet]


def _erase(alphabet: Alphabet, p, q) -> list:
    return [(p, a, EPS, q) for a in alphabet]


def _change(alphabet: Alphabet, p, q) -> list:
    return [(p, a, b, q) for a in alphabet for b in alphabet if a != b]


def make_prefix(alphabet: Alphabet | str) -> Transducer:
    """On input ``x``, output every proper prefix of ``x``."""
    alphabet = Alphabet.of(alphabet)
    trans = _copy(alphabet, 0) + _erase(alphabet, 0, 1) + _erase(alphabet, 1, 1)
    return Transducer.build(alphabet, trans, [0], [1])


def make_suffix(alphabet: Alphabet | str) -> Transducer:
    """On input ``x``, output every proper suffix of ``x``."""
    alphabet = Alphabet.of(alphabet)
    trans = _erase(alphabet, 0, 0) + _erase(alphabet, 0, 1) + _copy(alphabet, 1)
    return Transducer.build(alphabet, trans, [0], [1])


def make_bifix(alphabet: Alphabet | str) -> Transducer:
    return t_union(make_prefix(alphabet), make_suffix(alphabet))


def make_tsub(k: int, alphabet: Alphabet | str) -> Transducer:
    """Between 1 and ``k`` positions replaced by a different symbol.

    Input-altering but not input-decreasing: symbols may go up or down.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    alphabet = Alphabet.of(alphabet)
    trans = []
    for i in range(k + 1):
        trans += _copy(alphabet, i)
        if i < k:
            trans += _change(alphabet, i, i + 1)
    return Transducer.build(alphabet, trans, [0], range(1, k + 1))


def make_dsub(k: int, alphabet: Alphabet | str) -> Transducer:
    """Order-decreasing substitutions: up to ``k`` of them, the first one lowering a symbol.

    The first substituted position replaces a symbol with a strictly smaller
    one (alphabet order), so every output precedes its input in radix order.
    Up to ``k - 1`` arbitrary substitutions may follow at later positions.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    alphabet = Alphabet.of(alphabet)
    index = alphabet.index
    trans = _copy(alphabet, 0)
    trans += [(0, a, b, 1) for a in alphabet for b in alphabet if index[b] < index[a]]
    for i in range(1, k + 1):
        trans += _copy(alphabet, i)
        if i < k:
            trans += _change(alphabet, i, i + 1)
    return Transducer.build(alphabet, trans, [0], range(1, k + 1))


def _require_binary(alphabet: Alphabet | str, what: str) -> Alphabet:
    alphabet = Alphabet.of(alphabet)
    if alphabet.symbols != ("0", "1"):
        raise AlphabetError(f"{what} is only defined over the binary alphabet 01, got {alphabet}")
    return alphabet


def make_did2(alphabet: Alphabet | str = "01") -> Transducer:
    """Up to two insertion/deletion errors, arranged so each output is radix-smaller.

    Three branches share the final state ``3``:

    * ``0 -> 1 -> 3``: one or two deletions;
    * ``0' -> 1' -> ...``: a deleted ``1`` followed by an inserted ``0`` or an
      unchanged ``0`` and a later insertion;
    * ``0'' -> 1'' -> ...``: an inserted ``0`` followed by a deleted ``1`` or
      an unchanged ``1`` and a later deletion.
    """
    ab = _require_binary(alphabet, "did2")
    trans = (
        _copy(ab, "0")
        + _erase(ab, "0", "1")
        + _copy(ab, "1")
        + _erase(ab, "1", "3")
        + _copy(ab, "0'")
        + [("0'", "1", EPS, "1'"), ("1'", EPS, "0", "3"), ("1'", "0", "0", "2'")]
        + _copy(ab, "2'")
        + [("2'", EPS, a, "3") for a in ab]  # compensating insertion, not a second deletion
        + _copy(ab, "0''")
        + [("0''", EPS, "0", "1''"), ("1''", "1", EPS, "3"), ("1''", "1", "1", "2''")]
        + _copy(ab, "2''")
        + _erase(ab, "2''", "3")
        + _copy(ab, "3")
    )
    return Transducer.build(ab, trans, ["0", "0'", "0''"], ["1", "3"])


def make_fig1(alphabet: Alphabet | str = "01") -> Transducer:
    """Three-state transducer that is transitive (its square is empty) but
    neither length-decreasing nor length-increasing.

    On input ``0^a 1 w`` it outputs ``0^a`` followed by the zeros of ``w``
    and then any number of extra zeros; inputs without a ``1`` have no output.
    """
    _require_binary(alphabet, "fig1")
    trans = [
        (0, "0", "0", 0),
        (0, "1", EPS, 1),
        (1, "1", EPS, 1),
        (1, "0", "0", 1),
        (1, EPS, "0", 2),
        (2, EPS, "0", 2),
    ]
    return Transducer.build("01", trans, [0], [1, 2])


BUILDERS = {
    "px": lambda alphabet, k=None: make_prefix(alphabet),
    "sx": lambda alphabet, k=None: make_suffix(alphabet),
    "bx": lambda alphabet, k=None: make_bifix(alphabet),
    "tsub": lambda alphabet, k=1: make_tsub(k, alphabet),
    "dsub": lambda alphabet, k=1: make_dsub(k, alphabet),
    "did2": lambda alphabet, k=None: make_did2(alphabet),
    "fig1": lambda alphabet, k=None: make_fig1(alphabet),
}
