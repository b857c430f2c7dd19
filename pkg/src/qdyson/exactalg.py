"""Exact arithmetic in Z[q, 1/q] and its field of fractions.

Integers and rationals are Python ``int`` and :class:`fractions.Fraction`.
A :class:`QLaurent` is stored densely: the lowest exponent plus a tuple of
coefficients with no zero at either end.  The zero polynomial is the empty
tuple.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

from .errors import NonExactDivision, ZeroDenominator

BigRat = Fraction

_EXP_LIMIT = 2**31

Scalar = Union[int, "QLaurent"]


def _trim(lo: int, coeffs: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    start = 0
    stop = len(coeffs)
    while start < stop and not coeffs[start]:
        start += 1
    while stop > start and not coeffs[stop - 1]:
        stop -= 1
    if start == stop:
        return 0, ()
    lo += start
    assert -_EXP_LIMIT < lo and lo + (stop - start) < _EXP_LIMIT, "q-exponent overflow"
    return lo, tuple(coeffs[start:stop])


def _convolve(a: Sequence[int], b: Sequence[int]) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, cb in enumerate(b):
        if cb:
            for i, ca in enumerate(a):
                out[i + j] += ca * cb
    return out


class QLaurent:
    """Laurent polynomial in ``q`` with integer coefficients (immutable)."""

    __slots__ = ("_lo", "_c", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], int, None] = None):
        if terms is None:
            lo, c = 0, ()
        elif isinstance(terms, int):
            lo, c = (0, (terms,)) if terms else (0, ())
        else:
            items = {e: v for e, v in terms.items() if v}
            if items:
                lo = min(items)
                dense = [0] * (max(items) - lo + 1)
                for e, v in items.items():
                    dense[e - lo] = v
                lo, c = _trim(lo, dense)
            else:
                lo, c = 0, ()
        self._lo = lo
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, lo: int, coeffs: Sequence[int]) -> "QLaurent":
        obj = cls.__new__(cls)
        obj._lo, obj._c = _trim(lo, coeffs)
        obj._hash = None
        return obj

    @classmethod
    def dense(cls, lo: int, coeffs: Iterable[int]) -> "QLaurent":
        """Build from a coefficient list starting at exponent ``lo``."""
        return cls._raw(lo, list(coeffs))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "QLaurent":
        return cls._raw(exp, (coeff,))

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> Dict[int, int]:
        return {self._lo + i: c for i, c in enumerate(self._c) if c}

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._c

    @property
    def low(self) -> int:
        """Lowest exponent with nonzero coefficient (0 for the zero polynomial)."""
        return self._lo

    @property
    def high(self) -> int:
        return self._lo + len(self._c) - 1 if self._c else 0

    def is_zero(self) -> bool:
        return not self._c

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return sum(1 for c in self._c if c)

    def coeff(self, exp: int) -> int:
        i = exp - self._lo
        if 0 <= i < len(self._c):
            return self._c[i]
        return 0

    def content(self) -> int:
        g = 0
        for c in self._c:
            g = gcd(g, c)
        return g

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "QLaurent":
        if isinstance(other, QLaurent):
            return other
        if isinstance(other, int):
            return QLaurent(other)
        return NotImplemented

    def __add__(self, other) -> "QLaurent":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._c:
            return self
        if not self._c:
            return other
        lo = min(self._lo, other._lo)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        off = self._lo - lo
        for i, c in enumerate(self._c):
            out[off + i] += c
        off = other._lo - lo
        for i, c in enumerate(other._c):
            out[off + i] += c
        return QLaurent._raw(lo, out)

    __radd__ = __add__

    def __neg__(self) -> "QLaurent":
        return QLaurent._raw(self._lo, [-c for c in self._c])

    def __sub__(self, other) -> "QLaurent":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QLaurent":
        return (-self) + other

    def __mul__(self, other) -> "QLaurent":
        if isinstance(other, int):
            return QLaurent._raw(self._lo, [c * other for c in self._c]) if other else QLaurent()
        if not isinstance(other, QLaurent):
            return NotImplemented
        if not self._c or not other._c:
            return QLaurent()
        return QLaurent._raw(self._lo + other._lo, _convolve(self._c, other._c))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QLaurent":
        if k < 0:
            if self.is_monomial() and abs(self._c[0]) == 1:
                return QLaurent._raw(self._lo * k, (self._c[0] ** (-k),))
            raise NonExactDivision(f"cannot invert {self}")
        out = QLaurent(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "QLaurent":
        """Multiply by ``q**k``."""
        if not self._c:
            return self
        return QLaurent._raw(self._lo + k, self._c)

    def divexact(self, other: "QLaurent") -> "QLaurent":
        """Exact quotient in Z[q, 1/q]; raises :class:`NonExactDivision` otherwise."""
        other = self._coerce(other)
        if not other._c:
            raise ZeroDenominator("division by the zero polynomial")
        if not self._c:
            return QLaurent()
        b = other._c
        b0 = b[0]
        rem = list(self._c)
        nq = len(rem) - len(b) + 1
        if nq <= 0:
            raise NonExactDivision(f"({self}) / ({other}) is not a Laurent polynomial")
        quot = [0] * nq
        for i in range(nq):
            r = rem[i]
            if r:
                c, m = divmod(r, b0)
                if m:
                    raise NonExactDivision(f"({self}) / ({other}): non-integral coefficient")
                quot[i] = c
                for j, bj in enumerate(b):
                    rem[i + j] -= c * bj
        if any(rem[nq:]):
            raise NonExactDivision(f"({self}) / ({other}) leaves a nonzero remainder")
        return QLaurent._raw(self._lo - other._lo, quot)

    def evaluate(self, q) -> Fraction:
        """Exact value at a nonzero rational ``q``."""
        q = Fraction(q)
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * q + c
        return acc * q**self._lo if self._c else acc

    def subs_q1(self) -> int:
        """Value at q = 1, i.e. the sum of the coefficients."""
        return sum(self._c)

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QLaurent(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self._lo == other._lo and self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._lo, self._c))
        return self._hash

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"QLaurent({render(self)!r})"


def render(p: QLaurent) -> str:
    """Canonical text form: ascending exponents, ``c*q^e`` joined by ``" + "``.

    Coefficients of +-1 are elided to their sign; ``q^1`` is written ``q``.
    """
    if p.is_zero():
        return "0"
    parts = []
    for e, c in sorted(p.terms.items()):
        if e == 0:
            parts.append(str(c))
            continue
        mono = "q" if e == 1 else f"q^{e}"
        if c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts)


ZERO = QLaurent()
ONE = QLaurent(1)
Q = QLaurent.monomial(1)


def ql_add(a: QLaurent, b: QLaurent) -> QLaurent:
    return a + b


def ql_mul(a: QLaurent, b: QLaurent) -> QLaurent:
    return a * b


def ql_divexact(a: QLaurent, b: QLaurent) -> QLaurent:
    return a.divexact(b)


# -- univariate gcd over Q -------------------------------------------------


def _primitive(coeffs: Sequence[int]) -> list:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    if g == 0:
        return []
    if coeffs[-1] < 0:
        g = -g
    return [c // g for c in coeffs]


def _poly_gcd(a: Sequence[int], b: Sequence[int]) -> list:
    """Primitive gcd of two integer polynomials (ascending coefficient lists)."""
    x = [Fraction(c) for c in a]
    y = [Fraction(c) for c in b]
    while y:
        # x mod y
        x = list(x)
        while len(x) >= len(y):
            if x[-1] == 0:
                x.pop()
                continue
            f = x[-1] / y[-1]
            shift = len(x) - len(y)
            for i, c in enumerate(y):
                x[shift + i] -= f * c
            x.pop()
        while x and x[-1] == 0:
            x.pop()
        x, y = y, x
    den = 1
    for c in x:
        den = den * c.denominator // gcd(den, c.denominator)
    return _primitive([int(c * den) for c in x])


class QFraction:
    """Normalized quotient of two :class:`QLaurent` values.

    Canonical form: the denominator has lowest exponent 0 and positive leading
    coefficient, and numerator and denominator share no common factor in Z[q]
    (neither polynomial nor integer content).  Equal values therefore have
    identical representations.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = QLaurent._coerce(num)
        den = QLaurent._coerce(den)
        if den.is_zero():
            raise ZeroDenominator("QFraction with zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        # move q-power content of the denominator into the numerator
        num = num.shift(-den.low)
        den = den.shift(-den.low)
        g = QLaurent.dense(0, _poly_gcd(num.shift(-num.low).coeffs, den.coeffs))
        if g.high > 0:
            num = num.divexact(g)
            den = den.divexact(g)
        c = gcd(num.content(), den.content())
        if den.coeffs[-1] < 0:
            c = -c
        if c != 1:
            num = QLaurent.dense(num.low, [x // c for x in num.coeffs])
            den = QLaurent.dense(den.low, [x // c for x in den.coeffs])
        self.num, self.den = num, den

    @staticmethod
    def _coerce(other) -> "QFraction":
        if isinstance(other, QFraction):
            return other
        if isinstance(other, (int, QLaurent)):
            return QFraction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QFraction(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDenominator("division by zero QFraction")
        return QFraction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def to_laurent(self) -> QLaurent:
        """Exact conversion; raises :class:`NonExactDivision` if the value is not in Z[q, 1/q]."""
        return self.num.divexact(self.den)

    def evaluate(self, q) -> Fraction:
        d = self.den.evaluate(q)
        if d == 0:
            raise ZeroDenominator(f"denominator vanishes at q={q}")
        return self.num.evaluate(q) / d

    def __repr__(self) -> str:
        return f"QFraction({self.num}, {self.den})"


def qf_normalize(num: QLaurent, den: QLaurent) -> QFraction:
    return QFraction(num, den)
