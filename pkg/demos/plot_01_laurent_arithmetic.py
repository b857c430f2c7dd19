"""
Exact Laurent polynomials in q
==============================

Everything in the package is exact: coefficients are Python ints and
rationals, so two results are either equal or they are not.
"""

from fractions import Fraction

from qdyson.exactalg import Q, QFraction, QLaurent, render

# negative powers of q are ordinary citizens
p = QLaurent.monomial(-2) + 2 * QLaurent.monomial(-1) + 2 + Q
print("p        =", render(p))
print("p * (1-q) =", render(p * (1 - Q)))

# exact division succeeds only when the quotient is a Laurent polynomial
print("(1-q^3)/(1-q) =", render((1 - Q**3).divexact(1 - Q)))

# quotients that do not divide live in QFraction, kept in lowest terms
f = QFraction(1 - Q**2, (1 - Q) * (1 + Q + Q**2))
print("reduced fraction: (%s) / (%s)" % (render(f.num), render(f.den)))

# evaluation at a rational point stays rational
print("p(2/3) =", p.evaluate(Fraction(2, 3)))
