"""
Growing a bifix code
====================

A bifix code has no word that is a proper prefix or a proper suffix of
another.  Start from the single word 001 and let the max-min operator add
words until nothing changes.
"""

from maxcode import PropertyInstance, enumerate_upto, from_words, is_maximal, make_bifix, mu_iterate

bx = make_bifix("01")
p = PropertyInstance(bx)  # universe: every binary word

trace = mu_iterate(p, from_words(["001"], "01"))
print(trace.status)

# each iterate is a regular language; list its short words
for i, lang in enumerate(trace.iterates):
    print(i, enumerate_upto(lang, 5))

# the fixed point is infinite (01*0 followed by one more symbol, plus 10 and 11)
# and no binary word can join it without breaking the bifix property
print("maximal:", bool(is_maximal(p, trace.final)))

# %%
# A block code is trivially bifix.  One step turns (0+1)^3 0 into all of (0+1)^4.

from maxcode import equals, mu, regex_parse

block = mu(p, regex_parse("(0+1)^3 0", "01"))
print("(0+1)^4:", equals(block, regex_parse("(0+1)^4", "01")))
