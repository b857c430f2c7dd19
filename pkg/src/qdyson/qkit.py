"""q-shifted factorials, Gaussian binomials and the q-binomial theorem."""

from __future__ import annotations

import threading
from math import comb
from typing import Dict, Tuple

from .errors import NotAMonomial
from .exactalg import ONE, Q, ZERO, QFraction, QLaurent
from .xlaurent import XPoly


def pochhammer(arg: XPoly, k: int) -> XPoly:
    """Expand ``(arg; q)_k = prod_{t<k} (1 - q^t arg)`` for a single-term ``arg``."""
    if k < 0:
        raise ValueError("length must be nonnegative")
    if not arg.is_monomial() or not next(iter(arg.terms.values())).is_monomial():
        raise NotAMonomial(f"{arg} is not a monomial")
    out = XPoly.one(arg.nvars)
    for t in range(k):
        out = out * (1 - arg * QLaurent.monomial(t))
    return out


def qpoch(z: QLaurent, k: int) -> QLaurent:
    """``(z; q)_k`` for ``z`` a Laurent polynomial in q alone."""
    if k < 0:
        raise ValueError("length must be nonnegative")
    out = ONE
    for t in range(k):
        out = out * (ONE - z.shift(t))
    return out


def qfact(k: int) -> QLaurent:
    """``(q; q)_k``."""
    return qpoch(Q, k)


_QBINOM: Dict[Tuple[int, int], QLaurent] = {}
_QBINOM_LOCK = threading.Lock()


def qbinom(n: int, k: int) -> QLaurent:
    """Gaussian binomial [n k] via ``[n k] = [n-1 k-1] + q^k [n-1 k]``.

    Returns 0 when ``k < 0`` or ``k > n``.
    """
    if k < 0 or n < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    hit = _QBINOM.get((n, k))
    if hit is not None:
        return hit
    # fill rows bottom-up; no deep recursion
    for m in range(1, n + 1):
        for j in range(max(1, k - (n - m)), min(k, m - 1) + 1):
            if (m, j) in _QBINOM:
                continue
            left = ONE if j - 1 == 0 else _QBINOM[(m - 1, j - 1)]
            right = ONE if j == m - 1 else _QBINOM[(m - 1, j)]
            val = left + right.shift(j)
            with _QBINOM_LOCK:
                _QBINOM[(m, j)] = val
    return _QBINOM[(n, k)]


def qbinom_quotient(n: int, k: int) -> QLaurent:
    """[n k] from its defining quotient ``(q^{n-k+1})_k / (q)_k`` by exact division."""
    if k < 0 or k > n:
        return ZERO
    return qpoch(Q.shift(n - k), k).divexact(qfact(k))


def check_qbinomial_theorem(t: int) -> bool:
    """``(z)_t == sum_k q^{C(k,2)} [t k] (-z)^k`` as polynomials in z and q."""
    z = XPoly.var(1, 0)
    lhs = pochhammer(z, t)
    rhs = XPoly.zero(1)
    for k in range(t + 1):
        coeff = qbinom(t, k).shift(comb(k, 2)) * (-1) ** k
        rhs = rhs + XPoly.var(1, 0, k) * coeff
    return lhs == rhs


def check_prop41(n: int, t: int) -> bool:
    """``sum_{k<=t} q^{k(n-t)} / ((q^{-k})_k (q)_{t-k}) == [n t]`` over Q(q)."""
    if not 0 <= t <= n:
        raise ValueError("need 0 <= t <= n")
    total = QFraction(ZERO)
    for k in range(t + 1):
        den = qpoch(QLaurent.monomial(-k), k) * qfact(t - k)
        total = total + QFraction(QLaurent.monomial(k * (n - t)), den)
    return total == QFraction(qbinom(n, t))
