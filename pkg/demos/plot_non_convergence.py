"""
When the iteration does not stop
================================

Combining the prefix property with one decreasing substitution over all
binary words, the embedding of {1} adds one new word per step: 00, 010,
0110, ...  A finite universe makes it terminate.
"""

from maxcode import PropertyInstance, from_words, make_dsub, make_prefix, mu_iterate, sigma_upto, t_union, words

t = t_union(make_prefix("01"), make_dsub(1, "01"))
seed = from_words(["1"], "01")

trace = mu_iterate(PropertyInstance(t), seed, cap=6)
print(trace.status)
for lang in trace.iterates:
    print(words(lang))

# bounded by length 6, the same seed settles after a few steps
bounded = mu_iterate(PropertyInstance(t, sigma_upto("01", 6)), from_words(["111"], "01"))
print(bounded.status, words(bounded.final))
