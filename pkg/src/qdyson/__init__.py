"""Exact constant-term computations for symmetric function generalizations
of the q-Dyson identity."""

from .exactalg import Q, QFraction, QLaurent, render
from .qkit import check_prop41, check_qbinomial_theorem, pochhammer, qbinom, qfact, qpoch
from .symfn import Alphabet, Letter, alphabet_augmented, alphabet_plain, hcomplete
from .xlaurent import RationalPoint, XPoly, coeff_of, eval_at, xp_mul

__version__ = "0.1.0"
