"""Sparse multivariate Laurent polynomials over Z[q, 1/q].

An :class:`XPoly` lives in a ring with a fixed number of variable slots and
maps exponent vectors (tuples of ints, possibly negative) to nonzero
:class:`~qdyson.exactalg.QLaurent` coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Sequence, Tuple

from .errors import DimensionMismatch, RingMismatch
from .exactalg import ONE, ZERO, QLaurent, _convolve, render

Monomial = Tuple[int, ...]


@dataclass(frozen=True)
class RationalPoint:
    """Values for q and every variable slot; all must be nonzero."""

    q: Fraction
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if self.q == 0:
            raise ValueError("q must be nonzero")
        if any(v == 0 for v in self.values):
            raise ValueError("variable values must be nonzero")


class XPoly:
    """Immutable sparse Laurent polynomial in ``nvars`` variables."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], QLaurent] = None):
        self.nvars = nvars
        clean: Dict[Monomial, QLaurent] = {}
        if terms:
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != nvars:
                    raise DimensionMismatch(f"monomial {m} has length {len(m)}, ring has {nvars}")
                if isinstance(c, int):
                    c = QLaurent(c)
                if c:
                    clean[m] = clean[m] + c if m in clean else c
        self._terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def _wrap(cls, nvars: int, terms: Dict[Monomial, QLaurent]) -> "XPoly":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, nvars: int) -> "XPoly":
        return cls._wrap(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> "XPoly":
        return cls.constant(nvars, ONE)

    @classmethod
    def constant(cls, nvars: int, c) -> "XPoly":
        c = QLaurent._coerce(c)
        return cls._wrap(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=ONE) -> "XPoly":
        coeff = QLaurent._coerce(coeff)
        exps = tuple(exps)
        return cls._wrap(len(exps), {exps: coeff} if coeff else {})

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1, qexp: int = 0) -> "XPoly":
        """``q**qexp * x_i**power`` with a 0-based slot index ``i``."""
        e = [0] * nvars
        e[i] = power
        return cls._wrap(nvars, {tuple(e): QLaurent.monomial(qexp)})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, QLaurent]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, QLaurent]]:
        """Terms in lexicographic order of their exponent vectors."""
        for m in sorted(self._terms):
            yield m, self._terms[m]

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coeff(self, v: Sequence[int]) -> QLaurent:
        v = tuple(v)
        if len(v) != self.nvars:
            raise DimensionMismatch(f"exponent vector of length {len(v)} for a ring of size {self.nvars}")
        return self._terms.get(v, ZERO)

    def constant_term(self) -> QLaurent:
        return self._terms.get((0,) * self.nvars, ZERO)

    def degrees(self) -> set:
        """Set of total degrees occurring among the stored monomials."""
        return {sum(m) for m in self._terms}

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "XPoly"):
        if other.nvars != self.nvars:
            raise RingMismatch(f"ring sizes {self.nvars} and {other.nvars}")

    def _lift(self, other):
        if isinstance(other, XPoly):
            self._check(other)
            return other
        if isinstance(other, (int, QLaurent)):
            return XPoly.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other) -> "XPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out[m] + c if m in out else c
            if s:
                out[m] = s
            else:
                del out[m]
        return XPoly._wrap(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "XPoly":
        return XPoly._wrap(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "XPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "XPoly":
        return (-self) + other

    def __mul__(self, other) -> "XPoly":
        if isinstance(other, (int, QLaurent)):
            if not other:
                return XPoly.zero(self.nvars)
            return XPoly._wrap(self.nvars, {m: c * other for m, c in self._terms.items()})
        if not isinstance(other, XPoly):
            return NotImplemented
        self._check(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        # accumulate exponent -> int maps per monomial, drop zeros at the end
        acc: Dict[Monomial, Dict[int, int]] = {}
        for mb, cb in b.items():
            blo, bc = cb.low, cb.coeffs
            for ma, ca in a.items():
                key = tuple([x + y for x, y in zip(ma, mb)])
                lo = ca.low + blo
                d = acc.get(key)
                if d is None:
                    d = acc[key] = {}
                for i, x in enumerate(_convolve(ca.coeffs, bc)):
                    if x:
                        d[lo + i] = d.get(lo + i, 0) + x
        out: Dict[Monomial, QLaurent] = {}
        for key, d in acc.items():
            c = QLaurent(d)
            if c:
                out[key] = c
        return XPoly._wrap(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "XPoly":
        if k < 0:
            if self.is_monomial():
                (m, c), = self._terms.items()
                return XPoly._wrap(self.nvars, {tuple(k * e for e in m): c**k})
            raise ValueError("negative power of a non-monomial")
        out = XPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, QLaurent)):
            other = XPoly.constant(self.nvars, other)
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    # -- evaluation --------------------------------------------------------

    def evaluate(self, pt: RationalPoint) -> Fraction:
        if len(pt.values) != self.nvars:
            raise DimensionMismatch(f"point has {len(pt.values)} coordinates, ring has {self.nvars}")
        total = Fraction(0)
        for m, c in self._terms.items():
            t = c.evaluate(pt.q)
            for x, e in zip(pt.values, m):
                if e:
                    t *= x**e
            total += t
        return total

    def embed(self, nvars: int, slots: Sequence[int]) -> "XPoly":
        """Re-home into a ring of size ``nvars``; variable ``i`` goes to ``slots[i]``."""
        out = {}
        for m, c in self._terms.items():
            e = [0] * nvars
            for i, x in zip(slots, m):
                e[i] += x
            out[tuple(e)] = c
        return XPoly(nvars, out)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.items():
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(m) if e
            )
            coef = render(c)
            if not mono:
                parts.append(coef)
            elif coef == "1":
                parts.append(mono)
            else:
                parts.append(f"({coef})*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"XPoly({self.nvars}, {self})"


def xp_mul(a: XPoly, b: XPoly) -> XPoly:
    return a * b


def coeff_of(p: XPoly, v: Sequence[int]) -> QLaurent:
    """Coefficient of ``x**v`` in ``p``, i.e. CT_x x^{-v} p."""
    return p.coeff(v)


def eval_at(p: XPoly, pt: RationalPoint) -> Fraction:
    return p.evaluate(pt)


def coeff_of_product(a: XPoly, b: XPoly, v: Sequence[int]) -> QLaurent:
    """Coefficient of ``x**v`` in ``a*b`` without forming the full product."""
    a._check(b)
    v = tuple(v)
    if len(v) != a.nvars:
        raise DimensionMismatch("exponent vector length does not match ring")
    if len(a) > len(b):
        a, b = b, a
    bt = b._terms
    total = ZERO
    for m, c in a._terms.items():
        other = bt.get(tuple([x - y for x, y in zip(v, m)]))
        if other is not None:
            total = total + c * other
    return total
