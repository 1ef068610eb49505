"""Positive roots, bounds, the top degree and the shifted weights ``mu<w>``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from .bicharacter import BraidingMatrix, bound, cartan_matrix, is_cartan_vertex
from .errors import InfiniteBound
from .groupoid import Groupoid, Morphism, hom_into, longest_element
from .lattice import LatticeMap, Weight, add, basis, is_nonnegative, is_nonpositive, scale, sub, zero

__all__ = [
    "RootSystemData",
    "positive_roots",
    "positive_roots_oracle",
    "root_system",
    "shift",
    "two_varrho",
    "cartan_roots",
    "odd_roots",
    "is_standard_type",
]

Presentation = Tuple[Morphism, int]


@dataclass(frozen=True)
class RootSystemData:
    """Root data of one object.

    ``positive_roots`` follows the reduced word ``w0.word``.  ``presentations``
    keeps, per root, the first ``(w, i)`` with ``w(alpha_i)`` equal to it in the
    breadth-first hom-set sweep, so ``w`` has a shortest word; every
    presentation found in the sweep is listed in ``all_presentations``.
    """

    object: BraidingMatrix
    index: int
    positive_roots: Tuple[Weight, ...]
    b: Dict[Weight, int]
    beta_top: Weight
    w0: Morphism
    presentations: Dict[Weight, Presentation]
    all_presentations: Dict[Weight, Tuple[Presentation, ...]]
    cartan_roots: Tuple[Weight, ...]

    @property
    def theta(self) -> int:
        return self.object.theta

    @property
    def odd_roots(self) -> Tuple[Weight, ...]:
        car = set(self.cartan_roots)
        return tuple(r for r in self.positive_roots if r not in car)

    @property
    def root_set(self) -> FrozenSet[Weight]:
        return frozenset(self.positive_roots)

    def is_root(self, v: Weight) -> bool:
        """True for positive and negative roots."""
        s = self.root_set
        return v in s or tuple(-x for x in v) in s

    def is_positive_root(self, v: Weight) -> bool:
        return v in self.root_set

    def dimension(self) -> int:
        return math.prod(self.b[r] for r in self.positive_roots)


def _word_roots(g: Groupoid, w0: Morphism) -> List[Weight]:
    m = LatticeMap.identity(g.theta)
    src = w0.target
    roots = []
    for i in w0.word:
        roots.append(m(basis(g.theta, i)))
        m = m @ g.sigma[src][i]
        src = g.step[src][i]
    return roots


def positive_roots(g: Groupoid, target: int = 0) -> RootSystemData:
    """Root data for ``g.objects[target]`` built from a reduced word of ``w0``."""
    return root_system(g, target)


def root_system(g: Groupoid, target: int = 0) -> RootSystemData:
    cached = g._root_cache.get(target)
    if cached is not None:
        return cached
    q = g.objects[target]
    w0 = longest_element(g, target)
    roots = _word_roots(g, w0)
    if len(set(roots)) != len(roots) or not all(is_nonnegative(r) for r in roots):
        raise AssertionError(f"reduced word {w0.word} did not produce distinct positive roots: {roots}")
    b = {}
    for r in roots:
        v = bound(q, r)
        if v == math.inf:
            raise InfiniteBound(f"q_beta = 1 for beta = {r}; the Nichols algebra is not finite-dimensional")
        b[r] = v
    top = zero(g.theta)
    for r in roots:
        top = add(top, scale(b[r] - 1, r))
    rootset = set(roots)
    allp: Dict[Weight, List[Presentation]] = {r: [] for r in roots}
    car = set()
    for w in hom_into(g, target):
        for i in range(g.theta):
            v = w.map.column(i)
            if v in rootset:
                allp[v].append((w, i))
                if v not in car and is_cartan_vertex(g.objects[w.source], i):
                    car.add(v)
    pres = {r: allp[r][0] for r in roots}
    rs = RootSystemData(
        object=q,
        index=target,
        positive_roots=tuple(roots),
        b=b,
        beta_top=top,
        w0=w0,
        presentations=pres,
        all_presentations={r: tuple(v) for r, v in allp.items()},
        cartan_roots=tuple(r for r in roots if r in car),
    )
    g._root_cache[target] = rs
    return rs


def positive_roots_oracle(g: Groupoid, target: int = 0) -> FrozenSet[Weight]:
    """Independent sweep: images of simple roots under every morphism, kept if nonnegative."""
    out = set()
    for w in hom_into(g, target):
        for i in range(g.theta):
            v = w.map.column(i)
            if is_nonnegative(v):
                out.add(v)
    return frozenset(out)


def shift(rs: RootSystemData, w: Morphism, mu: Weight) -> Weight:
    """``mu<w> = mu - sum (b(beta) - 1) beta`` over positive ``beta`` with ``w^-1 beta`` negative."""
    if w.target != rs.index:
        raise ValueError(f"morphism targets object {w.target}, root data is for object {rs.index}")
    wi = w.map.inverse()
    out = mu
    for r in rs.positive_roots:
        if is_nonpositive(wi(r)):
            out = sub(out, scale(rs.b[r] - 1, r))
    return out


def two_varrho(rs: RootSystemData) -> Weight:
    return rs.beta_top


def cartan_roots(g: Groupoid, rs: RootSystemData) -> Tuple[Weight, ...]:
    return rs.cartan_roots


def odd_roots(g: Groupoid, rs: RootSystemData) -> Tuple[Weight, ...]:
    return rs.odd_roots


def is_standard_type(g: Groupoid) -> bool:
    """All objects share one Cartan matrix and one set of positive roots."""
    c0 = cartan_matrix(g.objects[0])
    r0 = root_system(g, 0).root_set
    for k in range(1, len(g)):
        if cartan_matrix(g.objects[k]) != c0 or root_system(g, k).root_set != r0:
            return False
    return True
