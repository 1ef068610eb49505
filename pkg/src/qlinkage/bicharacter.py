"""Braiding matrices and the bicharacter they define on the root lattice."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Sequence, Tuple

from .cyclotomic import RootOfUnity, is_quantum_zero, parse_root
from .errors import NotFiniteType, ParseError
from .lattice import LatticeMap, Weight, basis

__all__ = [
    "BraidingMatrix",
    "INFINITE",
    "DEFAULT_CARTAN_CAP",
    "eval_bichar",
    "bound",
    "cartan_entry",
    "cartan_matrix",
    "simple_reflection",
    "reflect_matrix",
    "dual_action",
    "is_cartan_vertex",
]

INFINITE = math.inf
DEFAULT_CARTAN_CAP = 64


@dataclass(frozen=True)
class BraidingMatrix:
    """A square matrix of roots of unity ``q_ij``.

    The bicharacter is evaluated through one integer exponent matrix over a
    common denominator, so ``q(a, b)`` costs a single integer bilinear form.
    """

    entries: Tuple[Tuple[RootOfUnity, ...], ...]
    _den: int = field(init=False, repr=False, compare=False, hash=False)
    _exp: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        n = len(self.entries)
        if n < 1 or any(len(r) != n for r in self.entries):
            raise ParseError("a braiding matrix must be square with rank >= 1")
        d = 1
        for r in self.entries:
            for x in r:
                d = d * x.den // gcd(d, x.den)
        object.__setattr__(self, "_den", d)
        object.__setattr__(self, "_exp", tuple(tuple(x.num * (d // x.den) for x in r) for r in self.entries))

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence]) -> "BraidingMatrix":
        return cls(tuple(tuple(parse_root(x) for x in r) for r in rows))

    @property
    def theta(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij) -> RootOfUnity:
        i, j = ij
        return self.entries[i][j]

    def diag(self, i: int) -> RootOfUnity:
        return self.entries[i][i]

    def transpose(self) -> "BraidingMatrix":
        n = self.theta
        return BraidingMatrix(tuple(tuple(self.entries[j][i] for j in range(n)) for i in range(n)))

    @property
    def denominator(self) -> int:
        """Common denominator of the entry exponents."""
        return self._den

    def diagonal_exponents(self) -> Tuple[int, ...]:
        return tuple(self._exp[i][i] for i in range(self.theta))

    def exponent_form(self, a: Weight, b: Weight) -> int:
        """``q(a, b)`` as an integer exponent over :attr:`denominator`."""
        e = self._exp
        total = 0
        for i, ai in enumerate(a):
            if ai:
                row = e[i]
                total += ai * sum(row[j] * bj for j, bj in enumerate(b))
        return total

    def __call__(self, a: Weight, b: Weight) -> RootOfUnity:
        return RootOfUnity(self.exponent_form(a, b), self._den)

    def q_of(self, beta: Weight) -> RootOfUnity:
        """``q_beta = q(beta, beta)``."""
        return self(beta, beta)

    def to_strings(self):
        return [[str(x) for x in r] for r in self.entries]

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.entries) + "]"


def eval_bichar(q: BraidingMatrix, a: Weight, b: Weight) -> RootOfUnity:
    return q(a, b)


def bound(q: BraidingMatrix, beta: Weight):
    """Order of ``q_beta``, or ``INFINITE`` when ``q_beta = 1``."""
    qb = q.q_of(beta)
    if qb.is_one():
        return INFINITE
    return qb.den


def cartan_entry(q: BraidingMatrix, i: int, j: int, cap: int = DEFAULT_CARTAN_CAP) -> int:
    if i == j:
        return 2
    qii = q.diag(i)
    prod = q[i, j] * q[j, i]
    limit = cap if qii.is_one() else max(cap, qii.den)
    for m in range(limit + 1):
        if is_quantum_zero(m + 1, qii) or (qii ** m * prod).is_one():
            return -m
    raise NotFiniteType(f"no Cartan entry c_{i + 1}{j + 1} within search cap {cap} for {q}")


@lru_cache(maxsize=65536)
def _cartan_matrix(q: BraidingMatrix, cap: int) -> Tuple[Tuple[int, ...], ...]:
    n = q.theta
    return tuple(tuple(cartan_entry(q, i, j, cap) for j in range(n)) for i in range(n))


def cartan_matrix(q: BraidingMatrix, cap: int = DEFAULT_CARTAN_CAP) -> Tuple[Tuple[int, ...], ...]:
    return _cartan_matrix(q, cap)


def simple_reflection(q: BraidingMatrix, i: int, cap: int = DEFAULT_CARTAN_CAP) -> LatticeMap:
    """``sigma_i(alpha_j) = alpha_j - c_ij alpha_i``, returned as a lattice map."""
    n = q.theta
    row = cartan_matrix(q, cap)[i]
    cols = []
    for j in range(n):
        col = list(basis(n, j))
        col[i] -= row[j]
        cols.append(col)
    return LatticeMap.from_columns(cols)


def _pullback(q: BraidingMatrix, m: LatticeMap) -> BraidingMatrix:
    n = q.theta
    cols = [m.column(j) for j in range(n)]
    return BraidingMatrix(tuple(tuple(q(cols[j], cols[k]) for k in range(n)) for j in range(n)))


def reflect_matrix(q: BraidingMatrix, i: int, cap: int = DEFAULT_CARTAN_CAP) -> BraidingMatrix:
    return _pullback(q, simple_reflection(q, i, cap))


def dual_action(q: BraidingMatrix, w: LatticeMap) -> BraidingMatrix:
    """``(w^* q)(a, b) = q(w^-1 a, w^-1 b)``."""
    return _pullback(q, w.inverse())


def is_cartan_vertex(q: BraidingMatrix, i: int, cap: int = DEFAULT_CARTAN_CAP) -> bool:
    """Vertex ``i`` is Cartan when ``q_ii^{c_ij} = q_ij q_ji`` for every ``j``."""
    row = cartan_matrix(q, cap)[i]
    qii = q.diag(i)
    return all(qii ** row[j] == q[i, j] * q[j, i] for j in range(q.theta) if j != i)
