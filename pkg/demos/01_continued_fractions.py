"""Twist words, their fractions, and which ones give tau-tangles.

A twist word a1,...,an describes the 2-string part of a rational tangle
box by box.  Its value is the continued fraction [a1,...,an,0], and only
the class mod Z matters for the tangle.
"""
from fractions import Fraction

from hbk import cf_eval, cf_expand, endpoint_pairing, is_one_over_n, modz_normalize
from hbk.tangle import joins_disk_to_ends

for word in ([3], [2, 2], [1, 1, 1], [2], []):
    r = cf_eval(word)
    c = modz_normalize(r)
    n = is_one_over_n(c)
    ok = joins_disk_to_ends(endpoint_pairing(word)) and not c.is_integral
    print(f"{str(word):12} -> {str(r):5} class {str(c):4}"
          f"  1/n: {str(n):5} usable: {ok}")

# The canonical word for a fraction, and back again.
for r in (Fraction(2, 5), Fraction(-7, 9), Fraction(13, 5)):
    w = cf_expand(r)
    print(f"{r} expands to [{w}] which evaluates to {cf_eval(w)}")

# [2] pairs the two disk points with each other, so 1/2 is not a tau-tangle.
print(sorted(sorted(p) for p in endpoint_pairing([2])))
