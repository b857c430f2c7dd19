"""
Checking a partial-fraction split at random rational points
===========================================================

F(a, w) is a rational function in x, w and q.  Its decomposition with
respect to w_1 is checked by evaluating both sides exactly at seeded random
points.  Points where a denominator vanishes are skipped.
"""

import random

from qdyson.dysonct import split_terms
from qdyson.dysonct.splitting import admissible_points, f_eval, split_rhs

a = (2, 1, 2)
A, B = split_terms(a)
print("A terms:", [k for k, _ in A])
print("B terms:", [ij for ij, _ in B])

rng = random.Random("demo")
for pt in admissible_points(a, 3, rng):
    lhs, rhs = f_eval(a, pt), split_rhs(a, pt)
    print("q = %s  F = %s  split = %s  equal: %s" % (pt.q, lhs, rhs, lhs == rhs))
