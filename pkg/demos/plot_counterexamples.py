"""
Why the order matters
=====================

If the transducer can map a word to a larger one, a single max-min step may
stall at a language that is not maximal.  Substitution errors in both
directions show it on 4-bit words.
"""

from maxcode import (
    PropertyInstance,
    from_words,
    is_maximal,
    make_tsub,
    mu,
    sigma_length,
    verify_input_decreasing,
    words,
)

tsub1 = make_tsub(1, "01")
check = verify_input_decreasing(tsub1, 4)
print("decreasing?", bool(check), "witness:", check.witness)

p = PropertyInstance(tsub1, sigma_length("01", 4))
seed = from_words(["0000"], "01")
print("mu(seed) =", words(mu(p, seed)))
print("maximal?", is_maximal(p, seed))  # 0011 could still be added

# %%
# A transitive transducer avoids the problem without being decreasing: here
# t(t(x)) is always empty, so one step reaches a maximal language.

from maxcode import make_fig1, verify_transitive

t = make_fig1("01")
print("transitive up to length 6:", bool(verify_transitive(t, 6)))
p = PropertyInstance(t)
print("maximal:", bool(is_maximal(p, mu(p, from_words(["0101"], "01")))))
