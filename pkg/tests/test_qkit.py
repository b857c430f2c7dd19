from itertools import product
from math import comb

import pytest

from qdyson.errors import NotAMonomial
from qdyson.exactalg import ONE, Q, QFraction, QLaurent
from qdyson.qkit import (
    check_prop41,
    check_qbinomial_theorem,
    pochhammer,
    qbinom,
    qbinom_quotient,
    qfact,
    qpoch,
)
from qdyson.xlaurent import XPoly

z = XPoly.var(1, 0)


def box_partition_oracle(n, k):
    """Generating function by size of partitions inside a k x (n-k) box."""
    counts = {}
    for parts in product(range(n - k + 1), repeat=k):
        if all(parts[i] >= parts[i + 1] for i in range(k - 1)):
            s = sum(parts)
            counts[s] = counts.get(s, 0) + 1
    return QLaurent(counts)


def test_pochhammer_examples():
    assert pochhammer(z, 0) == XPoly.one(1)
    assert pochhammer(z, 2) == 1 - z * (1 + Q) + z * z * Q
    x = XPoly.var(2, 0) * XPoly.var(2, 1) ** -1
    assert pochhammer(x, 1) == 1 - x


def test_pochhammer_rejects_non_monomial():
    with pytest.raises(NotAMonomial):
        pochhammer(1 + z, 2)
    with pytest.raises(NotAMonomial):
        pochhammer(z * (1 + Q), 2)


def test_qbinom_examples():
    assert qbinom(0, 0) == ONE
    assert qbinom(2, 1) == 1 + Q
    assert qbinom(4, 2) == QLaurent({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})
    assert qbinom(3, 5).is_zero()


def test_qbinom_box_oracle():
    for n in range(9):
        for k in range(n + 1):
            assert qbinom(n, k) == box_partition_oracle(n, k), (n, k)


def test_qfact_examples():
    assert qfact(0) == ONE
    assert qfact(1) == 1 - Q
    assert qfact(2) == QLaurent({0: 1, 1: -1, 2: -1, 3: 1})


@pytest.mark.parametrize("n", range(13))
def test_qbinom_symmetry_quotient_and_q1(n):
    for k in range(n + 1):
        b = qbinom(n, k)
        assert b == qbinom(n, n - k)
        assert b == qbinom_quotient(n, k)
        assert b.subs_q1() == comb(n, k)
        assert all(c > 0 for c in b.coeffs)


def test_qbinomial_theorem_examples():
    assert check_qbinomial_theorem(0)
    assert check_qbinomial_theorem(2)
    assert check_qbinomial_theorem(5)


@pytest.mark.parametrize("t", range(11))
def test_qbinomial_theorem_sweep(t):
    assert check_qbinomial_theorem(t)


def test_alternating_sum_examples():
    for n in range(6):
        assert check_prop41(n, 0)
    # hand evaluation for (n, t) = (2, 1)
    total = QFraction(ONE, 1 - Q) + QFraction(Q, 1 - QLaurent.monomial(-1))
    assert total == QFraction(1 + Q)
    assert check_prop41(2, 1)
    assert check_prop41(8, 4)


def test_alternating_sum_sweep():
    for n in range(11):
        for t in range(n + 1):
            assert check_prop41(n, t), (n, t)


def test_negative_shift_pochhammer_and_range_check():
    # q^{-k} factor literally expanded: (q^{-1}; q)_1 = 1 - q^{-1}
    assert qpoch(QLaurent.monomial(-1), 1) == 1 - QLaurent.monomial(-1)
    with pytest.raises(ValueError):
        check_prop41(2, 3)
