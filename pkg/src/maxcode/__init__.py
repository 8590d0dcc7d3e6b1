"""Maximal embeddings of independent regular languages.

Code properties (prefix, bifix, error-detecting, ...) are described by
transducers; :func:`maxcode.operators.mu_iterate` embeds an independent
regular language into a maximal one.
"""

from maxcode.automata import (
    Alphabet,
    Dfa,
    Nfa,
    boolean_combine,
    complement,
    contains,
    determinize_minimize,
    enumerate_upto,
    equals,
    from_words,
    is_empty,
    regex_parse,
    sigma_length,
    sigma_star,
    sigma_upto,
    words,
)
from maxcode.errors import MaxcodeError
from maxcode.operators import (
    EmbedTrace,
    PropertyInstance,
    embed,
    extract_independent,
    extract_then_embed,
    ind,
    is_independent,
    is_maximal,
    mu,
    mu_iterate,
)
from maxcode.order import RadixOrder, verify_input_altering, verify_input_decreasing, verify_transitive
from maxcode.stdprops import make_bifix, make_did2, make_dsub, make_fig1, make_prefix, make_suffix, make_tsub
from maxcode.transducer import Transducer, apply_lang, apply_word, compose, invert, power, restrict, t_union

__version__ = "0.1.0"
