"""Symbolic factor products and the partial-fraction split of F(a, w) in w_1.

Slots in an ambient ring of size ``2n``: ``x_1..x_n`` occupy ``0..n-1`` and
``w_1..w_n`` occupy ``n..2n-1``.  Everything here is evaluated at exact
rational points; nothing is expanded as a series.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

from ..errors import PoleAtPoint
from ..xlaurent import RationalPoint

Mono = Tuple[int, ...]

_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)


@dataclass(frozen=True)
class PochSpec:
    """``(q^qshift * m; q)_length`` raised to ``exponent`` (+1 or -1)."""

    mono: Mono
    qshift: int
    length: int
    exponent: int = 1

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("Pochhammer length must be nonnegative")
        if self.exponent not in (1, -1):
            raise ValueError("exponent must be +1 or -1")

    def value(self, pt: RationalPoint) -> Fraction:
        z = _mono_value(self.mono, pt) * pt.q**self.qshift
        out = Fraction(1)
        for t in range(self.length):
            f = 1 - z * pt.q**t
            if f == 0 and self.exponent == -1:
                raise PoleAtPoint(f"reciprocal factor vanishes: {self}")
            out *= f
        return out if self.exponent == 1 else 1 / out


def _mono_value(m: Mono, pt: RationalPoint) -> Fraction:
    out = Fraction(1)
    for x, e in zip(pt.values, m):
        if e:
            out *= x**e
    return out


@dataclass(frozen=True)
class FactorExpr:
    """``sign * q^qpow * prefactor * prod(factors)``."""

    sign: int
    qpow: int
    prefactor: Mono
    factors: Tuple[PochSpec, ...] = field(default=())

    def evaluate(self, pt: RationalPoint) -> Fraction:
        out = Fraction(self.sign) * pt.q**self.qpow * _mono_value(self.prefactor, pt)
        for f in self.factors:
            out *= f.value(pt)
        return out

    def __mul__(self, other: "FactorExpr") -> "FactorExpr":
        return FactorExpr(
            self.sign * other.sign,
            self.qpow + other.qpow,
            tuple(x + y for x, y in zip(self.prefactor, other.prefactor)),
            self.factors + other.factors,
        )


def _ratio(size: int, num: int, den: int) -> Mono:
    e = [0] * size
    e[num] += 1
    e[den] -= 1
    return tuple(e)


def _dyson_pair(size: int, i: int, j: int, a: Sequence[int]) -> List[PochSpec]:
    """``(x_i/x_j)_{a_i} (q x_j/x_i)_{a_j}`` for 0-based ``i < j``."""
    return [PochSpec(_ratio(size, i, j), 0, a[i]), PochSpec(_ratio(size, j, i), 1, a[j])]


def f_expr(a: Sequence[int], start: int = 0) -> FactorExpr:
    """F(a, w) restricted to indices ``start..n-1`` (0-based) of the ambient ``2n`` slots.

    ``start=1`` gives F(a^(1), w^(1)) embedded in the full ring.
    """
    n = len(a)
    size = 2 * n
    factors: List[PochSpec] = []
    idx = range(start, n)
    for i in idx:
        for j in idx:
            if i < j:
                factors += _dyson_pair(size, i, j, a)
    for i in idx:
        for j in idx:
            chi = int(i == j)
            factors.append(PochSpec(_ratio(size, i, n + j), -chi, a[i] + chi, -1))
    return FactorExpr(1, 0, (0,) * size, tuple(factors))


def f_eval(a: Sequence[int], pt: RationalPoint) -> Fraction:
    """Exact value of F(a, w) at ``pt`` (x values then w values)."""
    if len(pt.values) != 2 * len(a):
        raise ValueError(f"point needs {2 * len(a)} coordinates")
    return f_expr(a).evaluate(pt)


def a_term(a: Sequence[int], k: int) -> FactorExpr:
    """Numerator of the ``1/(1 - q^k x_1/w_1)`` term, ``-1 <= k <= a_1 - 1``."""
    n = len(a)
    size = 2 * n
    a1 = a[0]
    zero = (0,) * size
    factors: List[PochSpec] = []
    qpow = 0
    for i in range(1, n):
        qpow += (k + 1) * a[i]
        r = _ratio(size, 0, i)
        factors.append(PochSpec(r, -a[i], k + 1))
        factors.append(PochSpec(r, k + 1, a1 - k - 1))
        factors.append(PochSpec(_ratio(size, 0, n + i), 0, a1, -1))
    factors.append(PochSpec(zero, -k - 1, k + 1, -1))
    factors.append(PochSpec(zero, 1, a1 - k - 1, -1))
    return FactorExpr(1, qpow, zero, tuple(factors)) * f_expr(a, start=1)


def b_term(a: Sequence[int], i: int, j: int) -> FactorExpr:
    """Numerator of the ``1/(1 - q^j x_i/w_1)`` term; ``i`` is 1-based, ``i >= 2``."""
    n = len(a)
    size = 2 * n
    a1 = a[0]
    ii = i - 1
    ai = a[ii]
    zero = (0,) * size
    qpow = (a1 + 1) * j + 1
    factors: List[PochSpec] = [
        PochSpec(zero, -j, j, -1),
        PochSpec(zero, 1, ai - j - 1, -1),
        PochSpec(_ratio(size, ii, 0), 1 - a1, j),
        PochSpec(_ratio(size, ii, 0), j + 2, ai - j - 1),
    ]
    for l in range(1, ii):
        qpow += j * a[l]
        factors.append(PochSpec(_ratio(size, ii, l), 1 - a[l], j))
        factors.append(PochSpec(_ratio(size, ii, l), j + 1, ai - j))
    for l in range(ii + 1, n):
        qpow += (j + 1) * a[l]
        factors.append(PochSpec(_ratio(size, ii, l), -a[l], j + 1))
        factors.append(PochSpec(_ratio(size, ii, l), j + 1, ai - j - 1))
    for v in range(n):
        for u in range(v + 1, n):
            if ii not in (u, v):
                factors += _dyson_pair(size, v, u, a)
    for u in range(n):
        for v in range(1, n):
            chi = int(u == v)
            factors.append(PochSpec(_ratio(size, u, n + v), -chi, a[u] + chi, -1))
    return FactorExpr(-1, qpow, _ratio(size, ii, 0), tuple(factors))


def split_terms(a: Sequence[int]):
    """``([(k, A_k)], [((i, j), B_ij)])`` with ``i`` 1-based, over the index ranges of the split."""
    a = tuple(a)
    a_list = [(k, a_term(a, k)) for k in range(-1, a[0])]
    b_list = [
        ((i, j), b_term(a, i, j))
        for i in range(2, len(a) + 1)
        if a[i - 1] != 0
        for j in range(a[i - 1])
    ]
    return a_list, b_list


def split_rhs(a: Sequence[int], pt: RationalPoint) -> Fraction:
    n = len(a)
    q = pt.q
    x1, w1 = pt.values[0], pt.values[n]
    a_list, b_list = split_terms(a)
    total = Fraction(0)
    for k, A in a_list:
        d = 1 - q**k * x1 / w1
        if d == 0:
            raise PoleAtPoint(f"1 - q^{k} x1/w1 vanishes")
        total += A.evaluate(pt) / d
    for (i, j), B in b_list:
        d = 1 - q**j * pt.values[i - 1] / w1
        if d == 0:
            raise PoleAtPoint(f"1 - q^{j} x{i}/w1 vanishes")
        total += B.evaluate(pt) / d
    return total


def random_point(n: int, rng: random.Random) -> RationalPoint:
    """q = p/s with 2 <= p, s <= 7, p != s; x and w coordinates distinct primes."""
    while True:
        p, s = rng.randint(2, 7), rng.randint(2, 7)
        if p != s:
            break
    values = rng.sample(_PRIMES, 2 * n)
    return RationalPoint(Fraction(p, s), tuple(Fraction(v) for v in values))


def verify_splitting(a: Sequence[int], pt: RationalPoint = None, *, rng: random.Random = None,
                     retries: int = 100) -> bool:
    """Compare F(a, w) with its split form at ``pt``.

    If ``pt`` hits a pole on either side, fresh points are drawn from ``rng``
    up to ``retries`` times before :class:`PoleAtPoint` propagates.
    """
    if rng is None:
        rng = random.Random(0)
    last = None
    for _ in range(retries + 1):
        if pt is None:
            pt = random_point(len(a), rng)
        try:
            return f_eval(a, pt) == split_rhs(a, pt)
        except PoleAtPoint as exc:
            last = exc
            pt = None
    raise PoleAtPoint(f"no admissible point after {retries} retries: {last}")


def admissible_points(a: Sequence[int], count: int, rng: random.Random, retries: int = 100):
    """``count`` points at which neither side of the split has a pole."""
    pts = []
    misses = 0
    while len(pts) < count:
        pt = random_point(len(a), rng)
        try:
            f_eval(a, pt)
            split_rhs(a, pt)
        except PoleAtPoint:
            misses += 1
            if misses > retries:
                raise
            continue
        pts.append(pt)
    return pts
