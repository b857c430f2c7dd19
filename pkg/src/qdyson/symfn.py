"""Alphabets of q-shifted variables and complete symmetric functions over them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from .errors import IndexOutOfRange, NegativePart
from .xlaurent import XPoly


@dataclass(frozen=True)
class Letter:
    """The letter ``x_var * q**qexp``; ``var`` is 1-based."""

    var: int
    qexp: int = 0

    def as_poly(self, nvars: int) -> XPoly:
        return XPoly.var(nvars, self.var - 1, 1, self.qexp)

    def __str__(self) -> str:
        if self.qexp == 0:
            return f"x{self.var}"
        if self.qexp == 1:
            return f"x{self.var}*q"
        return f"x{self.var}*q^{self.qexp}"


@dataclass(frozen=True)
class Alphabet:
    letters: Tuple[Letter, ...]
    nvars: int

    def __post_init__(self):
        for L in self.letters:
            if not 1 <= L.var <= self.nvars:
                raise IndexOutOfRange(f"letter {L} outside a ring of {self.nvars} variables")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __add__(self, other: "Alphabet") -> "Alphabet":
        return Alphabet(self.letters + other.letters, max(self.nvars, other.nvars))

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.letters)) + ")"


def _check_composition(a: Sequence[int]):
    if any(x < 0 for x in a):
        raise NegativePart(f"negative entry in {tuple(a)}")


def alphabet_plain(a: Sequence[int]) -> Alphabet:
    """``(x_1, x_1 q, ..., x_1 q^{a_1-1}, ..., x_n q^{a_n-1})``."""
    _check_composition(a)
    letters = [Letter(i + 1, t) for i, ai in enumerate(a) for t in range(ai)]
    return Alphabet(tuple(letters), len(a))


def alphabet_augmented(i: int, a: Sequence[int]) -> Alphabet:
    """The plain alphabet with ``x_i q^{-1}`` placed at the head of block ``i`` (1-based).

    The extra letter is present even when ``a_i == 0``.
    """
    if not 1 <= i <= len(a):
        raise IndexOutOfRange(f"index {i} not in 1..{len(a)}")
    _check_composition(a)
    letters: List[Letter] = []
    for j, aj in enumerate(a, start=1):
        if j == i:
            letters.append(Letter(j, -1))
        letters.extend(Letter(j, t) for t in range(aj))
    return Alphabet(tuple(letters), len(a))


def hcomplete_upto(rmax: int, A: Alphabet) -> List[XPoly]:
    """``[h_0(A), ..., h_rmax(A)]`` by adding one letter at a time."""
    n = A.nvars
    h = [XPoly.one(n)] + [XPoly.zero(n)] * max(rmax, 0)
    for L in A:
        x = L.as_poly(n)
        for r in range(1, rmax + 1):
            h[r] = h[r] + x * h[r - 1]
    return h


def hcomplete(r: int, A: Alphabet) -> XPoly:
    """Complete homogeneous symmetric function ``h_r(A)``; zero for ``r < 0``."""
    if r < 0:
        return XPoly.zero(A.nvars)
    return hcomplete_upto(r, A)[r]
