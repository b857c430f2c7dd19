"""Generalized q-Dyson constant terms: brute force, closed forms, recursion.

``d_*`` functions concern the constant term that inserts
``prod_i h_{lambda_i}`` over the augmented alphabets ``x_i^(a)``; ``dt_*``
functions concern Kadell's variant with ``h_lambda`` over the plain alphabet
``x^(a)``.  Brute force expands everything and reads off one coefficient; it
is the ground truth every other route is compared against.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence, Tuple

from ..errors import BadShape, DimensionMismatch
from ..exactalg import ONE, ZERO, QFraction, QLaurent
from ..qkit import pochhammer, qbinom, qpoch
from ..symfn import alphabet_augmented, alphabet_plain, hcomplete, hcomplete_upto
from ..xlaurent import XPoly
from .orders import is_partition, pad


@lru_cache(maxsize=None)
def _dyson(a: Tuple[int, ...]) -> XPoly:
    n = len(a)
    out = XPoly.one(n)
    for i in range(n):
        for j in range(i + 1, n):
            e = [0] * n
            e[i], e[j] = 1, -1
            ratio = XPoly.monomial(e)
            out = out * pochhammer(ratio, a[i]) * pochhammer(ratio ** -1 * QLaurent.monomial(1), a[j])
    return out


def dyson_product(a: Sequence[int]) -> XPoly:
    """``prod_{i<j} (x_i/x_j; q)_{a_i} (q x_j/x_i; q)_{a_j}``, fully expanded."""
    if any(x < 0 for x in a):
        raise BadShape(f"negative entry in a={tuple(a)}")
    return _dyson(tuple(a))


def qdyson_rhs(a: Sequence[int]) -> QLaurent:
    """q-multinomial ``(q)_{|a|} / prod (q)_{a_i}`` as a product of Gaussian binomials."""
    out = ONE
    tail = 0
    for ai in reversed(a):
        tail += ai
        out = out * qbinom(tail, ai)
    return out


def _check_dims(v, lam, a, *, lam_may_be_long=False):
    n = len(a)
    if len(v) != n:
        raise DimensionMismatch(f"len(v)={len(v)} but len(a)={n}")
    if not lam_may_be_long and len(lam) > n:
        raise DimensionMismatch(f"lambda={tuple(lam)} has more than n={n} entries")
    if not is_partition(tuple(lam)):
        raise BadShape(f"lambda={tuple(lam)} is not a partition")
    if any(x < 0 for x in a):
        raise BadShape(f"negative entry in a={tuple(a)}")


@lru_cache(maxsize=512)
def _d_integrand(lam: Tuple[int, ...], a: Tuple[int, ...]) -> XPoly:
    out = _dyson(a)
    for i, li in enumerate(lam):
        if li:
            out = out * hcomplete(li, alphabet_augmented(i + 1, a))
    return out


@lru_cache(maxsize=512)
def _dt_integrand(lam: Tuple[int, ...], a: Tuple[int, ...]) -> XPoly:
    lam = tuple(x for x in lam if x)
    out = _dyson(a)
    if lam:
        hs = hcomplete_upto(max(lam), alphabet_plain(a))
        for li in lam:
            out = out * hs[li]
    return out


def d_brute(v: Sequence[int], lam: Sequence[int], a: Sequence[int]) -> QLaurent:
    """Coefficient of ``x^v`` in ``prod_i h_{lambda_i}(x_i^(a))`` times the Dyson product."""
    _check_dims(v, lam, a)
    if sum(v) != sum(lam):
        return ZERO
    return _d_integrand(pad(lam, len(a)), tuple(a)).coeff(v)


def dt_brute(v: Sequence[int], lam: Sequence[int], a: Sequence[int]) -> QLaurent:
    """Coefficient of ``x^v`` in ``h_lambda(x^(a))`` times the Dyson product."""
    _check_dims(v, lam, a, lam_may_be_long=True)
    if sum(v) != sum(lam):
        return ZERO
    return _dt_integrand(tuple(lam), tuple(a)).coeff(v)


def d_closed(lam: Sequence[int], a: Sequence[int]) -> QLaurent:
    """``q^{-|lambda|} prod_i [a_i + ... + a_n + lambda_i, a_i]``."""
    n = len(a)
    if len(lam) > n:
        raise DimensionMismatch(f"lambda={tuple(lam)} has more than n={n} entries")
    lam = pad(lam, n)
    out = QLaurent.monomial(-sum(lam))
    for i in range(n):
        out = out * qbinom(sum(a[i:]) + lam[i], a[i])
    return out


def dt_kadell(v: Sequence[int], r: int, a: Sequence[int]) -> QLaurent:
    """Kadell's single-row value; zero unless ``v`` is ``r`` times a unit vector."""
    if len(v) != len(a):
        raise DimensionMismatch(f"len(v)={len(v)} but len(a)={len(a)}")
    if r < 1 or any(x < 0 for x in v) or sum(v) != r:
        raise BadShape(f"need a weak composition v with |v| = r >= 1, got v={tuple(v)}, r={r}")
    support = [i for i, x in enumerate(v) if x]
    if len(support) != 1:
        return ZERO
    k = support[0]
    size = sum(a)
    num = (
        QLaurent.monomial(sum(a[k + 1:]))
        * (ONE - QLaurent.monomial(a[k]))
        * qpoch(QLaurent.monomial(size + 1), r - 1)
        * qdyson_rhs(a)
    )
    den = qpoch(QLaurent.monomial(size - a[k] + 1), r)
    return QFraction(num, den).to_laurent()


def d_recursive(v: Sequence[int], lam: Sequence[int], a: Sequence[int]) -> QLaurent:
    """Peel leading entries while ``lambda_1 >= max(v)``; brute force on what is left."""
    _check_dims(v, lam, a)
    v, lam, a = tuple(v), pad(lam, len(a)), tuple(a)
    factor = ONE
    while v:
        if lam[0] < max(v):
            return factor * d_brute(v, lam, a)
        if lam[0] > v[0]:
            return ZERO
        factor = factor * qbinom(sum(a) + lam[0], a[0]).shift(-lam[0])
        v, lam, a = v[1:], lam[1:], a[1:]
    return factor


def clear_caches():
    _dyson.cache_clear()
    _d_integrand.cache_clear()
    _dt_integrand.cache_clear()
