"""
The q-Dyson product and complete homogeneous functions
======================================================

Build the product of q-shifted factorials over all pairs of variables, read
off its constant term and compare it with the q-multinomial coefficient.
"""

from qdyson.dysonct import dyson_product, qdyson_rhs
from qdyson.exactalg import render
from qdyson.symfn import alphabet_augmented, alphabet_plain, hcomplete

a = (2, 1, 1)
P = dyson_product(a)
print("number of monomials in the product:", len(P.terms))
print("constant term      :", render(P.constant_term()))
print("q-multinomial      :", render(qdyson_rhs(a)))

# the alphabet x^(a) has the letters x_i q^t for t < a_i
A = alphabet_plain(a)
print("plain alphabet     :", [(L.var, L.qexp) for L in A.letters])

# the augmented alphabet adds x_i q^{-1} at the head of block i
B = alphabet_augmented(2, a)
print("augmented at i=2   :", [(L.var, L.qexp) for L in B.letters])

# h_2 over the plain alphabet, one coefficient per monomial in x
for mono, coeff in hcomplete(2, A).items():
    print("  x^%s: %s" % (mono, render(coeff)))
