"""Exact arithmetic in the torsion part of the multiplicative group.

A root of unity ``exp(2*pi*i*a/N)`` is stored as the reduced rotation
``a/N`` with ``0 <= a < N``.  Multiplication is addition of rotations modulo
one, so nothing ever leaves the integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import ParseError

__all__ = [
    "RootOfUnity",
    "ONE",
    "MINUS_ONE",
    "mul",
    "inv",
    "power",
    "order",
    "is_quantum_zero",
    "primitive",
    "parse_root",
]


@dataclass(frozen=True, order=True)
class RootOfUnity:
    """``exp(2 pi i num/den)`` with ``num/den`` reduced and ``0 <= num < den``."""

    num: int
    den: int

    def __post_init__(self):
        if self.den < 1:
            raise ValueError(f"denominator must be positive, got {self.den}")
        a = self.num % self.den
        g = gcd(a, self.den)
        if a == 0:
            object.__setattr__(self, "num", 0)
            object.__setattr__(self, "den", 1)
        else:
            object.__setattr__(self, "num", a // g)
            object.__setattr__(self, "den", self.den // g)

    @classmethod
    def from_fraction(cls, x) -> "RootOfUnity":
        x = Fraction(x)
        return cls(x.numerator, x.denominator)

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.num, self.den)

    @property
    def order(self) -> int:
        return self.den

    def is_one(self) -> bool:
        return self.num == 0

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        d = self.den * other.den // gcd(self.den, other.den)
        return RootOfUnity(self.num * (d // self.den) + other.num * (d // other.den), d)

    def __truediv__(self, other: "RootOfUnity") -> "RootOfUnity":
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int) -> "RootOfUnity":
        return RootOfUnity(self.num * n, self.den)

    def __invert__(self) -> "RootOfUnity":
        return self.inverse()

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(-self.num, self.den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"RootOfUnity({self.num}/{self.den})"


ONE = RootOfUnity(0, 1)
MINUS_ONE = RootOfUnity(1, 2)


def mul(x: RootOfUnity, y: RootOfUnity) -> RootOfUnity:
    return x * y


def inv(x: RootOfUnity) -> RootOfUnity:
    return x.inverse()


def power(x: RootOfUnity, n: int) -> RootOfUnity:
    return x ** n


def order(x: RootOfUnity) -> int:
    """Smallest ``n >= 1`` with ``x**n == 1``."""
    return x.den


def primitive(n: int, k: int = 1) -> RootOfUnity:
    """The root ``exp(2 pi i k/n)``; with the default ``k`` a primitive ``n``-th root."""
    return RootOfUnity(k, n)


def is_quantum_zero(n: int, x: RootOfUnity) -> bool:
    """Decide whether the quantum number ``1 + x + ... + x**(n-1)`` vanishes.

    For ``x == 1`` the sum is ``n``; otherwise it is ``(x**n - 1)/(x - 1)``,
    which vanishes exactly when the order of ``x`` divides ``n >= 1``.
    """
    if n < 0:
        raise ValueError("quantum numbers are defined for n >= 0")
    if n == 0:
        return True
    if x.is_one():
        return False
    return n % x.den == 0


def parse_root(text) -> RootOfUnity:
    """Parse ``"a/N"`` (or a bare integer, meaning ``a/1``) into a root of unity."""
    if isinstance(text, RootOfUnity):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return RootOfUnity(text, 1)
    if not isinstance(text, str):
        raise ParseError(f"expected an exponent string 'a/N', got {text!r}")
    s = text.strip()
    if "/" in s:
        a, _, n = s.partition("/")
    else:
        a, n = s, "1"
    try:
        a_i, n_i = int(a), int(n)
    except ValueError:
        raise ParseError(f"malformed exponent {text!r}") from None
    if n_i <= 0:
        raise ParseError(f"malformed exponent {text!r}: denominator must be positive")
    return RootOfUnity(a_i, n_i)
