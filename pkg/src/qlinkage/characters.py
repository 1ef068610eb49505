"""Formal characters and the closed-form character formulas.

A character is a finitely supported map from weights to integers.  Products
of truncated geometric series, which is what every formula here reduces to,
are expanded on a dense grid by the kernels in ``_kernels``; everything else
works on dictionaries.
"""

from __future__ import annotations

import math
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from . import _kernels
from .errors import NotTypical, WrongAtypicality
from .groupoid import Groupoid, Morphism
from .lattice import LatticeMap, Weight, add, is_nonpositive, neg, scale, sub, zero
from .linkage import TorusCharacter, atypicality, n_beta
from .rootsystem import RootSystemData, root_system

__all__ = [
    "FormalCharacter",
    "Factor",
    "geometric_product",
    "ch_negative_part",
    "ch_verma",
    "ch_twisted_verma",
    "ch_twisted_verma_by_twist",
    "ch_simple_typical",
    "ch_simple_1atypical",
    "ch_kernel_phi",
]

# (start, step, count): the series e^start (1 + e^step + ... + e^{(count-1) step})
Factor = Tuple[Weight, Weight, int]

# Above this many grid cells the dictionary expansion is used instead.
DENSE_LIMIT = 20_000_000


class FormalCharacter:
    """Finite integer combination of formal exponentials ``e^mu``."""

    __slots__ = ("terms", "theta")

    def __init__(self, terms: Optional[Mapping[Weight, int]] = None, theta: Optional[int] = None):
        clean = {tuple(k): int(v) for k, v in (terms or {}).items() if v}
        if theta is None:
            theta = len(next(iter(clean))) if clean else 0
        self.terms: Dict[Weight, int] = clean
        self.theta = theta

    @classmethod
    def monomial(cls, mu: Weight, coeff: int = 1) -> "FormalCharacter":
        return cls({tuple(mu): coeff}, len(mu))

    @classmethod
    def one(cls, theta: int) -> "FormalCharacter":
        return cls.monomial(zero(theta))

    @classmethod
    def geometric(cls, start: Weight, step: Weight, count: int) -> "FormalCharacter":
        terms: Dict[Weight, int] = {}
        for k in range(count):
            w = add(start, scale(k, step))
            terms[w] = terms.get(w, 0) + 1
        return cls(terms, len(start))

    def coefficient(self, mu: Weight) -> int:
        return self.terms.get(tuple(mu), 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return FormalCharacter(out, self.theta or other.theta)

    def __neg__(self) -> "FormalCharacter":
        return FormalCharacter({k: -v for k, v in self.terms.items()}, self.theta)

    def __sub__(self, other: "FormalCharacter") -> "FormalCharacter":
        return self + (-other)

    def __mul__(self, other) -> "FormalCharacter":
        if isinstance(other, int):
            return FormalCharacter({k: v * other for k, v in self.terms.items()}, self.theta)
        out: Dict[Weight, int] = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                k = add(a, b)
                out[k] = out.get(k, 0) + x * y
        return FormalCharacter(out, self.theta or other.theta)

    __rmul__ = __mul__

    def shift(self, mu: Weight) -> "FormalCharacter":
        """Multiply by ``e^mu``."""
        return FormalCharacter({add(k, mu): v for k, v in self.terms.items()}, self.theta)

    def bar(self) -> "FormalCharacter":
        return FormalCharacter({neg(k): v for k, v in self.terms.items()}, self.theta)

    def twist(self, w: LatticeMap) -> "FormalCharacter":
        """``e^mu -> e^{w mu}``."""
        return FormalCharacter({w(k): v for k, v in self.terms.items()}, self.theta)

    def dimension(self) -> int:
        return sum(self.terms.values())

    def support(self) -> List[Weight]:
        return sorted(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"FormalCharacter({len(self.terms)} terms, dim {self.dimension()})"

    def lines(self) -> List[str]:
        """``coeff * e^{(c1,...,c_theta)}`` per term, sorted lexicographically by weight."""
        return [f"{v} * e^{{({','.join(str(c) for c in k)})}}" for k, v in sorted(self.terms.items())]

    def to_json(self) -> List[dict]:
        return [{"weight": list(k), "coeff": v} for k, v in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data: Iterable[dict], theta: Optional[int] = None) -> "FormalCharacter":
        return cls({tuple(t["weight"]): t["coeff"] for t in data}, theta)


def _product_dict(theta: int, factors: Sequence[Factor]) -> FormalCharacter:
    out = FormalCharacter.one(theta)
    for start, step, count in factors:
        out = out * FormalCharacter.geometric(start, step, count)
    return out


def geometric_product(theta: int, factors: Sequence[Factor], backend: Optional[str] = None) -> FormalCharacter:
    """Expand ``prod e^start (1 + e^step + ... + e^{(count-1) step})``.

    The expansion runs on a dense grid covering every possible exponent; each
    factor is a strided running sum over the flattened grid.  The grid bounds
    contain all partial products, so flattening never aliases two weights.
    ``backend`` may force ``"dict"``, ``"numpy"`` or the default compiled one.
    """
    if any(c <= 0 for _, _, c in factors):
        return FormalCharacter({}, theta)
    start = zero(theta)
    lo = [0] * theta
    hi = [0] * theta
    for s, step, count in factors:
        start = add(start, s)
        for c in range(theta):
            span = (count - 1) * step[c]
            lo[c] += min(0, span)
            hi[c] += max(0, span)
    extents = [h - l + 1 for l, h in zip(lo, hi)]
    cells = math.prod(extents)
    bound = math.prod(c for _, _, c in factors)
    if backend == "dict" or cells > DENSE_LIMIT or bound >= 2 ** 62:
        return _product_dict(theta, factors)
    spread = _kernels.python_backend.geometric_spread if backend == "numpy" else _kernels.geometric_spread
    strides = [1] * theta
    for c in range(theta - 2, -1, -1):
        strides[c] = strides[c + 1] * extents[c + 1]
    grid = np.zeros(cells, dtype=np.int64)
    grid[sum((0 - l) * st for l, st in zip(lo, strides))] = 1
    for _, step, count in factors:
        if count == 1 or not any(step):
            if count > 1:
                grid = grid * count
            continue
        off = sum(x * st for x, st in zip(step, strides))
        grid = spread(grid, off, count)
    idx = np.nonzero(grid)[0]
    coords = np.unravel_index(idx, extents) if theta else ()
    terms = {}
    for k, flat in enumerate(idx.tolist()):
        w = tuple(int(coords[c][k]) + lo[c] + start[c] for c in range(theta))
        terms[w] = int(grid[flat])
    return FormalCharacter(terms, theta)


def _negative_factors(rs: RootSystemData, skip: Optional[Weight] = None) -> List[Factor]:
    z = zero(rs.theta)
    return [(z, neg(r), rs.b[r]) for r in rs.positive_roots if r != skip]


_NEGATIVE_PARTS: Dict[tuple, FormalCharacter] = {}


def ch_negative_part(q, rs: RootSystemData, backend: Optional[str] = None) -> FormalCharacter:
    """``prod_beta (1 + e^-beta + ... + e^{(1-b) beta})``, memoized per root datum."""
    key = (tuple((r, rs.b[r]) for r in rs.positive_roots), backend)
    out = _NEGATIVE_PARTS.get(key)
    if out is None:
        if len(_NEGATIVE_PARTS) > 256:
            _NEGATIVE_PARTS.clear()
        out = _NEGATIVE_PARTS[key] = geometric_product(rs.theta, _negative_factors(rs), backend)
    return out


def ch_verma(q, rs: RootSystemData, mu: Weight, backend: Optional[str] = None) -> FormalCharacter:
    return ch_negative_part(q, rs, backend).shift(mu)


def _inverted_roots(rs: RootSystemData, w: Morphism) -> List[Weight]:
    wi = w.map.inverse()
    return [r for r in rs.positive_roots if is_nonpositive(wi(r))]


def ch_twisted_verma(q, rs: RootSystemData, w: Morphism, mu: Weight, backend: Optional[str] = None) -> FormalCharacter:
    """Closed form ``e^{mu + sum (b-1) beta} ch U^-``, the sum over positive ``beta`` inverted by ``w``."""
    if w.target != rs.index:
        raise ValueError(f"morphism targets object {w.target}, root data is for object {rs.index}")
    corr = zero(rs.theta)
    for r in _inverted_roots(rs, w):
        corr = add(corr, scale(rs.b[r] - 1, r))
    return ch_negative_part(q, rs, backend).shift(add(mu, corr))


def ch_twisted_verma_by_twist(g: Groupoid, w: Morphism, mu: Weight, backend: Optional[str] = None) -> FormalCharacter:
    """Second route: ``e^mu`` times the ``w``-twist of the negative part at the source."""
    src = root_system(g, w.source)
    return ch_negative_part(g.objects[w.source], src, backend).twist(w.map).shift(mu)


def ch_simple_typical(q, rs: RootSystemData, pi: TorusCharacter, mu: Weight, backend: Optional[str] = None) -> FormalCharacter:
    degree, zeros = atypicality(q, rs, pi, mu)
    if degree:
        raise NotTypical(f"weight {mu} is {degree}-atypical (zero roots {list(zeros)})")
    return ch_verma(q, rs, mu, backend)


def ch_simple_1atypical(q, rs: RootSystemData, pi: TorusCharacter, mu: Weight, backend: Optional[str] = None) -> FormalCharacter:
    """``e^mu (1 + ... + e^{(1-n) beta}) prod_{gamma != beta} (1 + ... + e^{(1-b) gamma})``."""
    degree, zeros = atypicality(q, rs, pi, mu)
    if degree != 1:
        raise WrongAtypicality(f"weight {mu} has degree of atypicality {degree}, expected 1")
    beta = zeros[0]
    n = n_beta(q, rs, pi, mu, beta)
    factors = [(zero(rs.theta), neg(beta), n)] + _negative_factors(rs, skip=beta)
    return geometric_product(rs.theta, factors, backend).shift(mu)


def ch_kernel_phi(
    q, rs: RootSystemData, w: Morphism, beta: Weight, t: int, mu: Weight, backend: Optional[str] = None
) -> FormalCharacter:
    """Character of the kernel of the twisted map attached to ``beta`` and ``t``.

    ``e^mu (e^{-t beta} + ... + e^{(1-b) beta})`` times, over the other positive
    roots ``gamma``, the factor ``1 + ... + e^{(1-b) gamma}`` when ``w^-1 gamma``
    is positive and ``1 + ... + e^{(b-1) gamma}`` when it is negative.
    """
    b = rs.b[beta]
    if not 1 <= t <= b - 1:
        raise ValueError(f"t must lie in 1..{b - 1}, got {t}")
    inverted = set(_inverted_roots(rs, w))
    z = zero(rs.theta)
    factors: List[Factor] = [(scale(-t, beta), neg(beta), b - t)]
    for g in rs.positive_roots:
        if g == beta:
            continue
        factors.append((z, g if g in inverted else neg(g), rs.b[g]))
    return geometric_product(rs.theta, factors, backend).shift(mu)
