"""Three q-shifted-factorial quotient rewrites, checked as Laurent identities in z.

Each rewrite ``N / D = R`` is tested in cross-multiplied form ``N == R * D``
with every factor expanded exactly.
"""

from __future__ import annotations

from typing import Iterator, Tuple

from ..errors import RangeViolation
from ..exactalg import QLaurent
from ..qkit import pochhammer
from ..xlaurent import XPoly

VARIANTS = ("a", "b1", "b2")


def _z(qexp: int = 0, power: int = 1) -> XPoly:
    return XPoly.var(1, 0, power, qexp)


def _p(qexp: int, power: int, k: int) -> XPoly:
    """``(q^qexp z^power; q)_k``."""
    return pochhammer(_z(qexp, power), k)


def in_range(i: int, j: int, k: int, which: str) -> bool:
    if i < 0 or j < 0:
        return False
    if which == "a":
        return -1 <= k <= j - 1
    if which == "b1":
        return j > 0 and 0 <= k <= j - 1
    if which == "b2":
        return 0 <= k <= j
    raise ValueError(f"unknown variant {which!r}")


def lemma31_sides(i: int, j: int, k: int, which: str) -> Tuple[XPoly, XPoly]:
    if not in_range(i, j, k, which):
        raise RangeViolation(f"(i, j, k) = ({i}, {j}, {k}) outside the range of variant {which}")
    q = QLaurent.monomial
    if which == "a":
        # (z)_j (q/z)_i = q^{(k+1)i} (q^{-i} z)_{k+1} (q^{k+1} z)_{j-k-1} (q^{-k}/z)_i
        lhs = _p(0, 1, j) * _p(1, -1, i)
        rhs = _p(-i, 1, k + 1) * _p(k + 1, 1, j - k - 1) * _p(-k, -1, i) * q((k + 1) * i)
    elif which == "b1":
        # (1/z)_i (qz)_j = -q^{(i+1)k+1} z (q^{1-i} z)_k (q^{k+2} z)_{j-k-1} (q^{-k-1}/z)_{i+1}
        lhs = _p(0, -1, i) * _p(1, 1, j)
        rhs = _z() * _p(1 - i, 1, k) * _p(k + 2, 1, j - k - 1) * _p(-k - 1, -1, i + 1)
        rhs = rhs * -q((i + 1) * k + 1)
    else:
        # (1/z)_i (qz)_j = q^{ik} (q^{1-i} z)_k (q^{k+1} z)_{j-k} (q^{-k}/z)_i
        lhs = _p(0, -1, i) * _p(1, 1, j)
        rhs = _p(1 - i, 1, k) * _p(k + 1, 1, j - k) * _p(-k, -1, i) * q(i * k)
    return lhs, rhs


def check_lemma31(i: int, j: int, k: int, which: str) -> bool:
    lhs, rhs = lemma31_sides(i, j, k, which)
    return lhs == rhs


def lemma31_cases(bound: int) -> Iterator[Tuple[str, int, int, int]]:
    """Every in-range ``(which, i, j, k)`` with ``0 <= i, j <= bound``."""
    for which in VARIANTS:
        for i in range(bound + 1):
            for j in range(bound + 1):
                for k in range(-1, j + 1):
                    if in_range(i, j, k, which):
                        yield which, i, j, k
