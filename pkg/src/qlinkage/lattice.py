"""Integer weights and unimodular maps on the root lattice.

Weights are plain tuples of Python ints in the simple-root basis, which keeps
them hashable and cheap.  Maps are stored as tuples of rows; the image of the
basis vector ``alpha_j`` is column ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Tuple

from sympy import Matrix

Weight = Tuple[int, ...]

__all__ = [
    "Weight",
    "LatticeMap",
    "weight",
    "zero",
    "basis",
    "add",
    "sub",
    "scale",
    "neg",
    "leq",
    "leq_twisted",
    "is_nonnegative",
    "is_nonpositive",
    "in_box",
    "format_weight",
    "parse_weight",
]


def weight(coords: Iterable[int]) -> Weight:
    return tuple(int(c) for c in coords)


def zero(theta: int) -> Weight:
    return (0,) * theta


def basis(theta: int, i: int) -> Weight:
    return tuple(1 if k == i else 0 for k in range(theta))


def add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def scale(k: int, a: Weight) -> Weight:
    return tuple(k * x for x in a)


def neg(a: Weight) -> Weight:
    return tuple(-x for x in a)


def is_nonnegative(a: Weight) -> bool:
    return all(x >= 0 for x in a)


def is_nonpositive(a: Weight) -> bool:
    return all(x <= 0 for x in a)


def leq(lam: Weight, mu: Weight) -> bool:
    """``lam <= mu``: the difference ``mu - lam`` has nonnegative coordinates."""
    return all(x <= y for x, y in zip(lam, mu))


def leq_twisted(w: "LatticeMap", lam: Weight, mu: Weight) -> bool:
    """The order twisted by ``w``: compare after applying ``w`` inverse."""
    wi = w.inverse()
    return leq(wi(lam), wi(mu))


def in_box(lam: Weight, low: Weight, high: Weight) -> bool:
    return leq(low, lam) and leq(lam, high)


def format_weight(a: Weight) -> str:
    return ",".join(str(x) for x in a)


def parse_weight(text: str, theta: int | None = None) -> Weight:
    from .errors import ParseError

    s = text.strip().strip("()[]")
    try:
        w = tuple(int(p) for p in s.split(",")) if s else ()
    except ValueError:
        raise ParseError(f"malformed weight {text!r}; expected comma-separated integers") from None
    if theta is not None and len(w) != theta:
        raise ParseError(f"weight {text!r} has {len(w)} coordinates, expected {theta}")
    return w


@dataclass(frozen=True)
class LatticeMap:
    """An endomorphism of ``Z^theta``; column ``j`` is the image of ``alpha_j``."""

    rows: Tuple[Tuple[int, ...], ...]

    @classmethod
    def identity(cls, theta: int) -> "LatticeMap":
        return cls(tuple(basis(theta, i) for i in range(theta)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "LatticeMap":
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]]) -> "LatticeMap":
        n = len(cols)
        return cls(tuple(tuple(int(cols[j][i]) for j in range(n)) for i in range(n)))

    @property
    def theta(self) -> int:
        return len(self.rows)

    def column(self, j: int) -> Weight:
        return tuple(r[j] for r in self.rows)

    def __call__(self, v: Weight) -> Weight:
        return tuple(sum(a * x for a, x in zip(r, v)) for r in self.rows)

    def __matmul__(self, other: "LatticeMap") -> "LatticeMap":
        cols = [self(other.column(j)) for j in range(other.theta)]
        return LatticeMap.from_columns(cols)

    def det(self) -> int:
        return int(Matrix(self.rows).det())

    def inverse(self) -> "LatticeMap":
        return _inverse(self)

    def is_identity(self) -> bool:
        return self == LatticeMap.identity(self.theta)

    def to_lists(self):
        return [list(r) for r in self.rows]


@lru_cache(maxsize=65536)
def _inverse(m: LatticeMap) -> LatticeMap:
    a = Matrix(m.rows)
    d = a.det()
    if d not in (1, -1):
        raise ValueError(f"map is not invertible over the integers (det {d})")
    inv = a.inv()
    n = m.theta
    return LatticeMap.from_rows([[int(inv[i, j]) for j in range(n)] for i in range(n)])
