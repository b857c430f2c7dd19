"""Orders on integer sequences and partitions, plus small enumerators."""

from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence, Tuple

from ..errors import SizeMismatch

IntVector = Tuple[int, ...]


def pad(u: Sequence[int], n: int) -> IntVector:
    """Zero-pad ``u`` to length ``n`` (never truncates)."""
    u = tuple(u)
    return u + (0,) * (n - len(u)) if len(u) < n else u


def _padded_pair(u, v):
    n = max(len(u), len(v))
    return pad(u, n), pad(v, n)


def is_partition(lam: Sequence[int]) -> bool:
    return all(x >= 0 for x in lam) and all(x >= y for x, y in zip(lam, lam[1:]))


def vplus(v: Sequence[int]) -> IntVector:
    """Entries of ``v`` in weakly decreasing order."""
    return tuple(sorted(v, reverse=True))


def prec_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """``u <= v`` in the order: equal, or at the first difference ``i``
    ``u_i < v_i`` and every later ``u_j <= v_i``.  Shorter input is zero-padded."""
    u, v = _padded_pair(u, v)
    for i, (x, y) in enumerate(zip(u, v)):
        if x != y:
            return x < y and all(uj <= y for uj in u[i + 1:])
    return True


def prec_lt(u: Sequence[int], v: Sequence[int]) -> bool:
    u, v = _padded_pair(u, v)
    return u != v and prec_leq(u, v)


def _same_size(lam, mu):
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{tuple(lam)}| != |{tuple(mu)}|")


def dominance_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Prefix sums of ``lam`` never exceed those of ``mu``."""
    _same_size(lam, mu)
    lam, mu = _padded_pair(lam, mu)
    s = t = 0
    for x, y in zip(lam, mu):
        s += x
        t += y
        if s > t:
            return False
    return True


def revlex_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    _same_size(lam, mu)
    lam, mu = _padded_pair(lam, mu)
    for x, y in zip(lam, mu):
        if x != y:
            return x < y
    return True


def revlex_lt(lam: Sequence[int], mu: Sequence[int]) -> bool:
    _same_size(lam, mu)
    lam, mu = _padded_pair(lam, mu)
    return lam != mu and revlex_leq(lam, mu)


def remove_index(v: Sequence[int], k: int) -> IntVector:
    """``v`` with its ``k``-th entry (1-based) deleted."""
    v = tuple(v)
    return v[: k - 1] + v[k:]


def partitions(size: int, max_part: int = None, max_len: int = None) -> Iterator[IntVector]:
    """Partitions of ``size`` in reverse lexicographic decreasing order."""
    if max_part is None:
        max_part = size
    if size == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(size, max_part), 0, -1):
        for rest in partitions(size - first, first, None if max_len is None else max_len - 1):
            yield (first,) + rest


def compositions_in_box(n: int, hi: int, lo: int = 0) -> Iterator[IntVector]:
    """All vectors in ``[lo, hi]^n`` in lexicographic order."""
    return product(range(lo, hi + 1), repeat=n)


def vectors_with_sum(n: int, total: int, lo: int, hi: int) -> Iterator[IntVector]:
    for v in product(range(lo, hi + 1), repeat=n):
        if sum(v) == total:
            yield v
