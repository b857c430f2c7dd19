"""
Generalized constant terms and their closed forms
=================================================

D inserts prod_i h_{lambda_i} over the augmented alphabets, Dt inserts h_lambda
over the plain one.  Compare brute-force extraction with the closed forms.
"""

from qdyson.dysonct import d_brute, d_closed, d_recursive, dt_brute, dt_kadell, prec_lt
from qdyson.exactalg import render

a = (1, 1, 1)
lam = (2, 1, 0)

# v = lambda gives a product of q-binomials
print("D_brute  :", render(d_brute(lam, lam, a)))
print("D_closed :", render(d_closed(lam, a)))

# any v strictly below lambda in the order gives zero
for v in [(1, 2, 0), (2, 0, 1), (0, 3, 0)]:
    print("v =", v, "precedes:", prec_lt(v, lam), " D =", render(d_brute(v, lam, a)))

# the recursion peels off the first part while it dominates v
print("recursive:", render(d_recursive((2, 0, 1), lam, a)))

# one-row lambda for the plain-alphabet variant has its own closed form
for v in [(2, 0, 0), (0, 2, 0), (1, 1, 0)]:
    print("Dt", v, render(dt_brute(v, (2,), a)), "|", render(dt_kadell(v, 2, a)))

# a larger case: both of these vanish although lambda has two parts
for v in [(0, 5, 2), (5, 0, 2)]:
    print("D", v, "(4,3) =", render(d_brute(v, (4, 3), a)))
