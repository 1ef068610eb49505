"""The Weyl groupoid of a braiding matrix: orbit, hom-sets and longest elements.

Convention for morphisms.  A word ``(i_1, ..., i_k)`` is read from the target:
the object chain is ``o_0 = target`` and ``o_s = r_{i_s}(o_{s-1})``, the source
is ``o_k`` and the lattice map is ``sigma_{i_1} sigma_{i_2} ... sigma_{i_k}``
(each factor taken at its object in the chain).  New generators are appended
on the source side, i.e. on the right of the product.  Because
``sigma_i`` coincides at ``p`` and ``r_i(p)``, the factor is well defined on
either end of the edge.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .bicharacter import DEFAULT_CARTAN_CAP, BraidingMatrix, reflect_matrix, simple_reflection
from .errors import AmbiguousLongest, MorphismCapExceeded, OrbitCapExceeded
from .lattice import LatticeMap, Weight, neg

__all__ = [
    "Groupoid",
    "Morphism",
    "DEFAULT_OBJECT_CAP",
    "DEFAULT_MORPHISM_CAP",
    "orbit",
    "hom_into",
    "longest_element",
    "morphism_from_word",
    "length_by_roots",
]

DEFAULT_OBJECT_CAP = 10_000
DEFAULT_MORPHISM_CAP = 1_000_000


@dataclass(frozen=True)
class Morphism:
    """An arrow ``source -> target`` with its lattice map and a reduced word."""

    source: int
    target: int
    map: LatticeMap
    word: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    def __call__(self, v: Weight) -> Weight:
        return self.map(v)

    def inverse_map(self) -> LatticeMap:
        return self.map.inverse()


@dataclass
class Groupoid:
    """Objects of one orbit, in BFS discovery order, with their reflections.

    ``step[p][i]`` is the index of ``r_i(objects[p])`` and ``sigma[p][i]`` the
    lattice map of ``sigma_i`` at ``objects[p]``.
    """

    objects: List[BraidingMatrix]
    step: List[Tuple[int, ...]]
    sigma: List[Tuple[LatticeMap, ...]]
    base: int = 0
    _hom_cache: Dict[Tuple[int, int], List[Morphism]] = field(default_factory=dict, repr=False)
    _root_cache: Dict[int, object] = field(default_factory=dict, repr=False)

    @property
    def theta(self) -> int:
        return self.objects[0].theta

    def __len__(self) -> int:
        return len(self.objects)

    def index(self, q: BraidingMatrix) -> int:
        for k, p in enumerate(self.objects):
            if p == q:
                return k
        raise KeyError(f"matrix {q} is not an object of this groupoid")

    @property
    def edges(self) -> List[Tuple[int, int, int]]:
        """``(p, i, r_i(p))`` for every object and generator."""
        return [(p, i, self.step[p][i]) for p in range(len(self.objects)) for i in range(self.theta)]


def orbit(q: BraidingMatrix, object_cap: int = DEFAULT_OBJECT_CAP, cartan_cap: int = DEFAULT_CARTAN_CAP) -> Groupoid:
    """Breadth-first closure of ``{q}`` under ``r_1, ..., r_theta``."""
    objects = [q]
    where = {q: 0}
    step: List[Tuple[int, ...]] = []
    sigma: List[Tuple[LatticeMap, ...]] = []
    k = 0
    while k < len(objects):
        p = objects[k]
        row = []
        maps = []
        for i in range(q.theta):
            maps.append(simple_reflection(p, i, cartan_cap))
            r = reflect_matrix(p, i, cartan_cap)
            if r not in where:
                if len(objects) >= object_cap:
                    raise OrbitCapExceeded(f"orbit exceeds {object_cap} objects")
                where[r] = len(objects)
                objects.append(r)
            row.append(where[r])
        step.append(tuple(row))
        sigma.append(tuple(maps))
        k += 1
    return Groupoid(objects, step, sigma)


def hom_into(g: Groupoid, target: int = 0, morphism_cap: int = DEFAULT_MORPHISM_CAP) -> List[Morphism]:
    """All morphisms with the given target, deduplicated by ``(source, map)``.

    Breadth-first over right multiplication by generators in increasing order,
    so each morphism carries a shortest word and, among those, the first in
    lexicographic order.
    """
    key = (target, morphism_cap)
    if key in g._hom_cache:
        return g._hom_cache[key]
    ident = Morphism(target, target, LatticeMap.identity(g.theta), ())
    seen = {(target, ident.map)}
    out = [ident]
    queue = deque([ident])
    while queue:
        w = queue.popleft()
        for j in range(g.theta):
            m = w.map @ g.sigma[w.source][j]
            src = g.step[w.source][j]
            if (src, m) in seen:
                continue
            if len(seen) >= morphism_cap:
                raise MorphismCapExceeded(f"more than {morphism_cap} morphisms into object {target}")
            seen.add((src, m))
            nw = Morphism(src, target, m, w.word + (j,))
            out.append(nw)
            queue.append(nw)
    g._hom_cache[key] = out
    return out


def morphism_from_word(g: Groupoid, target: int, word) -> Morphism:
    """Multiply out a target-anchored word (not necessarily reduced)."""
    m = LatticeMap.identity(g.theta)
    src = target
    for j in word:
        m = m @ g.sigma[src][j]
        src = g.step[src][j]
    return Morphism(src, target, m, tuple(word))


def longest_element(g: Groupoid, target: int = 0, morphism_cap: int = DEFAULT_MORPHISM_CAP) -> Morphism:
    homs = hom_into(g, target, morphism_cap)
    top = max(w.length for w in homs)
    tops = [w for w in homs if w.length == top]
    if len(tops) != 1:
        raise AmbiguousLongest(f"{len(tops)} morphisms of maximal length {top} into object {target}")
    return tops[0]


def length_by_roots(w: Morphism, roots_src, roots_tgt) -> int:
    """Number of positive source roots sent to negative target roots."""
    negatives = {neg(b) for b in roots_tgt}
    return sum(1 for b in roots_src if w.map(b) in negatives)


def find_object(g: Groupoid, q: BraidingMatrix) -> Optional[int]:
    try:
        return g.index(q)
    except KeyError:
        return None
