import random
from itertools import combinations_with_replacement

import pytest

from qdyson.errors import IndexOutOfRange, NegativePart
from qdyson.exactalg import Q, QLaurent
from qdyson.qkit import qbinom
from qdyson.symfn import Alphabet, Letter, alphabet_augmented, alphabet_plain, hcomplete
from qdyson.xlaurent import XPoly


def multiset_oracle(r, A):
    """h_r as an explicit sum over multisets of letters."""
    total = XPoly.zero(A.nvars)
    for combo in combinations_with_replacement(A.letters, r):
        term = XPoly.one(A.nvars)
        for L in combo:
            term = term * L.as_poly(A.nvars)
        total = total + term
    return total


def test_alphabet_plain():
    assert alphabet_plain((2, 1)).letters == (Letter(1, 0), Letter(1, 1), Letter(2, 0))
    assert alphabet_plain((0, 0)).letters == ()
    assert alphabet_plain((0, 2)).letters == (Letter(2, 0), Letter(2, 1))
    with pytest.raises(NegativePart):
        alphabet_plain((1, -1))


def test_alphabet_augmented():
    assert alphabet_augmented(1, (1, 1)).letters == (Letter(1, -1), Letter(1, 0), Letter(2, 0))
    assert alphabet_augmented(1, (0, 1)).letters == (Letter(1, -1), Letter(2, 0))
    assert alphabet_augmented(2, (1, 1)).letters == (Letter(1, 0), Letter(2, -1), Letter(2, 0))
    for a in [(0, 0, 0), (2, 0, 1), (1, 2, 3)]:
        for i in range(1, 4):
            assert len(alphabet_augmented(i, a)) == sum(a) + 1
    with pytest.raises(IndexOutOfRange):
        alphabet_augmented(3, (1, 1))
    with pytest.raises(IndexOutOfRange):
        alphabet_augmented(0, (1, 1))


def test_hcomplete_examples():
    A = Alphabet((Letter(1, -1), Letter(1, 0), Letter(1, 1)), 1)
    x = XPoly.var(1, 0)
    assert hcomplete(0, A) == XPoly.one(1)
    assert hcomplete(1, A) == x * (QLaurent.monomial(-1) + 1 + Q)
    B = Alphabet((Letter(1, 0), Letter(1, 1)), 1)
    assert hcomplete(2, B) == x * x * (1 + Q + Q * Q)


def test_hcomplete_edge_cases():
    A = alphabet_plain((1, 1))
    assert hcomplete(-1, A).is_zero()
    assert hcomplete(2, alphabet_plain((0, 0))).is_zero()
    assert hcomplete(0, alphabet_plain((0, 0))) == XPoly.one(2)


def _random_alphabet(rng, nvars, size):
    return Alphabet(tuple(Letter(rng.randint(1, nvars), rng.randint(-1, 2)) for _ in range(size)), nvars)


def test_hcomplete_against_multiset_oracle():
    rng = random.Random(11)
    for _ in range(40):
        A = _random_alphabet(rng, rng.randint(1, 3), rng.randint(0, 6))
        for r in range(5):
            assert hcomplete(r, A) == multiset_oracle(r, A)


def test_hcomplete_splits_over_union():
    rng = random.Random(5)
    for _ in range(30):
        A = _random_alphabet(rng, 3, rng.randint(0, 4))
        B = _random_alphabet(rng, 3, rng.randint(0, 4))
        for r in range(5):
            rhs = XPoly.zero(3)
            for k in range(r + 1):
                rhs = rhs + hcomplete(k, A) * hcomplete(r - k, B)
            assert hcomplete(r, A + B) == rhs


@pytest.mark.parametrize("m", range(1, 6))
def test_principal_specialization(m):
    A = alphabet_plain((m,))
    x = XPoly.var(1, 0)
    for r in range(6):
        expected = x**r * qbinom(m + r - 1, r)
        assert hcomplete(r, A) == expected
        if r <= 4 and m <= 5:
            assert multiset_oracle(r, A) == expected


def test_hcomplete_is_homogeneous():
    for a in [(1, 2), (2, 0, 1), (1, 1, 1)]:
        for i in range(1, len(a) + 1):
            for r in range(5):
                h = hcomplete(r, alphabet_augmented(i, a))
                assert h.degrees() <= {r}
