"""
Error-detecting block codes
===========================

Restricting the universe to words of one length gives classical block codes.
With one order-decreasing substitution the embedding of 01111 recovers the
even-weight code; with two, 1111111 grows into a 16-word code of minimum
distance 3.
"""

from itertools import combinations

from maxcode import PropertyInstance, from_words, make_dsub, mu_iterate, sigma_length, words

p1 = PropertyInstance(make_dsub(1, "01"), sigma_length("01", 5))
t1 = mu_iterate(p1, from_words(["01111"], "01"))
print(t1.status)
parity = words(t1.final)
print(len(parity), "words, all of even weight:", all(w.count("1") % 2 == 0 for w in parity))

p2 = PropertyInstance(make_dsub(2, "01"), sigma_length("01", 7))
t2 = mu_iterate(p2, from_words(["1111111"], "01"))
code = words(t2.final)
print(t2.status, len(code), "codewords")


def distance(u, v):
    return sum(a != b for a, b in zip(u, v))


print("minimum distance:", min(distance(u, v) for u, v in combinations(code, 2)))

# %%
# Insertions and deletions are handled the same way, provided the transducer
# only ever outputs words that come earlier in radix order.

from maxcode import make_did2

p3 = PropertyInstance(make_did2("01"), sigma_length("01", 6))
t3 = mu_iterate(p3, from_words(["001011"], "01"))
print(t3.status)
print(words(t3.final))
