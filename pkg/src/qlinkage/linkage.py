"""Torus characters, the integers n_beta and t_beta, and the linkage relation.

``pi`` is an algebra map on the group algebra of ``Z^I x Z^I`` determined by
its values on the generators ``K_i`` and ``L_i``; only torsion values are
allowed so that every test below is an equality of roots of unity.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Dict, List, Optional, Sequence, Tuple

from networkx.utils import UnionFind

from .bicharacter import BraidingMatrix
from .cyclotomic import ONE, RootOfUnity, is_quantum_zero, parse_root
from .errors import NonUnique, ParseError
from .groupoid import Morphism
from .lattice import Weight, add, in_box, leq, neg, scale, sub
from .rootsystem import RootSystemData

__all__ = [
    "TorusCharacter",
    "pi_mu_tilde",
    "linkage_scalar",
    "rho",
    "n_beta",
    "t_beta",
    "t_beta_bracket",
    "factor_zeros",
    "down",
    "strongly_linked_set",
    "strongly_linked_chains",
    "validate_chain",
    "linkage_classes",
    "default_window",
    "atypicality",
    "atypicality_by_factors",
    "is_typical",
    "twist_pi",
]


@dataclass(frozen=True)
class TorusCharacter:
    """Values ``pi(K_i)`` and ``pi(L_i)``."""

    k_values: Tuple[RootOfUnity, ...]
    l_values: Tuple[RootOfUnity, ...]
    # integer exponents over one common denominator, for the hot paths
    _den: int = field(init=False, repr=False, compare=False, hash=False)
    _kexp: Tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)
    _lexp: Tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.k_values) != len(self.l_values):
            raise ValueError("k_values and l_values must have the same length")
        d = lcm(1, *(x.den for x in self.k_values + self.l_values))
        object.__setattr__(self, "_den", d)
        object.__setattr__(self, "_kexp", tuple(x.num * (d // x.den) for x in self.k_values))
        object.__setattr__(self, "_lexp", tuple(x.num * (d // x.den) for x in self.l_values))

    @classmethod
    def trivial(cls, theta: int) -> "TorusCharacter":
        return cls((ONE,) * theta, (ONE,) * theta)

    @classmethod
    def parse(cls, values: Sequence, theta: int) -> "TorusCharacter":
        """``values`` lists ``pi(K_1..K_theta)`` then ``pi(L_1..L_theta)`` as exponents."""
        if len(values) != 2 * theta:
            raise ParseError(f"pi needs {2 * theta} exponent values (K_1..K_{theta}, L_1..L_{theta}), got {len(values)}")
        roots = [parse_root(v) for v in values]
        return cls(tuple(roots[:theta]), tuple(roots[theta:]))

    @property
    def theta(self) -> int:
        return len(self.k_values)

    def K(self, a: Weight) -> RootOfUnity:
        return RootOfUnity(sum(x * e for x, e in zip(self._kexp, a)), self._den)

    def L(self, b: Weight) -> RootOfUnity:
        return RootOfUnity(sum(x * e for x, e in zip(self._lexp, b)), self._den)

    def is_trivial(self) -> bool:
        return self._den == 1

    def to_strings(self) -> List[str]:
        return [str(x) for x in self.k_values + self.l_values]


def twist_pi(pi: TorusCharacter, w: Morphism) -> TorusCharacter:
    """``pi[w](K_a L_b) = pi(K_{w^-1 a} L_{w^-1 b})``."""
    wi = w.map.inverse()
    n = pi.theta
    cols = [wi.column(i) for i in range(n)]
    return TorusCharacter(tuple(pi.K(c) for c in cols), tuple(pi.L(c) for c in cols))


def pi_mu_tilde(q: BraidingMatrix, pi: TorusCharacter, mu: Weight, a: Weight, b: Weight) -> RootOfUnity:
    """Value of the shifted character at ``K_a L_b``: ``q(a, mu) q(mu, b)^-1 pi(K_a) pi(L_b)``."""
    return q(a, mu) * q(mu, b).inverse() * pi.K(a) * pi.L(b)


def linkage_scalar(q: BraidingMatrix, pi: TorusCharacter, mu: Weight, beta: Weight) -> RootOfUnity:
    """The shifted character at ``K_beta L_beta^-1``: ``q(beta, mu) q(mu, beta) pi(K_beta) pi(L_beta)^-1``."""
    qq = q(beta, mu) * q(mu, beta)
    if pi.is_trivial():
        return qq
    return qq * RootOfUnity(sum((k - l) * c for k, l, c in zip(pi._kexp, pi._lexp, beta)), pi._den)


def rho(q: BraidingMatrix, beta: Weight) -> RootOfUnity:
    out = ONE
    for i, e in enumerate(beta):
        if e:
            out = out * q.diag(i) ** e
    return out


def _linkage_exponents(q: BraidingMatrix, pi: TorusCharacter, mu: Weight, beta: Weight) -> Tuple[int, int, int, int]:
    """``(d, q_beta, rho(beta), shifted pi at K_beta L_beta^-1)`` as integer exponents over ``d``."""
    dq = q.denominator
    d = dq * pi._den // gcd(dq, pi._den)
    f, g = d // dq, d // pi._den
    qb = q.exponent_form(beta, beta) * f
    rho_e = sum(c * e for c, e in zip(beta, q.diagonal_exponents())) * f
    x = (q.exponent_form(beta, mu) + q.exponent_form(mu, beta)) * f
    x += sum((k - l) * c for k, l, c in zip(pi._kexp, pi._lexp, beta)) * g
    return d, qb, rho_e, x


def _exponents_hitting(d: int, base: int, target: int, upto: int, shift: int = 0) -> List[int]:
    """The ``k`` in ``1..upto-1`` with ``base (k + shift) = target`` modulo ``d``."""
    return [k for k in range(1, upto) if (base * (k + shift) - target) % d == 0]


def _unique(candidates: List[int], what: str) -> int:
    if len(candidates) > 1:
        raise NonUnique(f"{what} has several solutions {candidates}")
    return candidates[0] if candidates else 0


def n_beta(q: BraidingMatrix, rs: RootSystemData, pi: TorusCharacter, mu: Weight, beta: Weight) -> int:
    """The ``n`` in ``1..b-1`` with ``q_beta^n = rho(beta) * (shifted pi)(K_beta L_beta^-1)``, else 0."""
    d, qb, rho_e, x = _linkage_exponents(q, pi, mu, beta)
    return _unique(_exponents_hitting(d, qb, rho_e + x, rs.b[beta]), f"n_beta({beta}, {mu})")


def t_beta(q: BraidingMatrix, rs: RootSystemData, pi: TorusCharacter, mu: Weight, beta: Weight) -> int:
    """The ``t`` in ``1..b-1`` with ``q_beta^{1-t} * (shifted pi)(K_beta L_beta^-1) = 1``, else 0."""
    d, qb, _rho, x = _linkage_exponents(q, pi, mu, beta)
    # q_beta^(1-t) x = 1  <=>  q_beta^(t-1) = x
    return _unique(_exponents_hitting(d, qb, x, rs.b[beta], shift=-1), f"t_beta({beta}, {mu})")


def t_beta_bracket(q: BraidingMatrix, rs: RootSystemData, pi: TorusCharacter, mu: Weight, beta: Weight) -> int:
    """Second route to ``t_beta``: the zero of the shifted ``[beta; t]``.

    ``[beta; t] = (t)_{q_beta} L_beta (q_beta^{1-t} K_beta L_beta^-1 - 1)``; since
    ``pi(L_beta)`` is a unit the value vanishes iff one of the two other factors
    does.  ``t = b`` always vanishes and is excluded from the range.
    """
    qb = q.q_of(beta)
    b = rs.b[beta]
    x = linkage_scalar(q, pi, mu, beta)
    if not is_quantum_zero(b, qb):
        raise AssertionError(f"[beta; b] does not vanish for beta = {beta}")
    zeros = [t for t in range(1, b) if is_quantum_zero(t, qb) or (qb ** (1 - t) * x).is_one()]
    return _unique(zeros, f"zero of [beta; t] for beta = {beta}")


def factor_zeros(q: BraidingMatrix, rs: RootSystemData, pi: TorusCharacter, mu: Weight, beta: Weight) -> List[int]:
    """Indices ``t`` of the vanishing factors ``q_beta^t - rho(beta) (shifted pi)(K_beta L_beta^-1)``."""
    qb = q.q_of(beta)
    rhs = rho(q, beta) * linkage_scalar(q, pi, mu, beta)
    return [t for t in range(1, rs.b[beta]) if qb ** t == rhs]


def down(q: BraidingMatrix, rs: RootSystemData, pi: TorusCharacter, beta: Weight, mu: Weight) -> Weight:
    """``beta (down) mu = mu - n_beta(mu) beta``."""
    n = n_beta(q, rs, pi, mu, beta)
    return sub(mu, scale(n, beta)) if n else mu


def strongly_linked_chains(
    q: BraidingMatrix, rs: RootSystemData, pi: TorusCharacter, mu: Weight
) -> Dict[Weight, List[Tuple[Weight, Weight]]]:
    """Closure of ``{mu}`` under the down-steps inside ``[mu - beta_top, mu]``.

    Maps each reached weight to a witness chain: the list of ``(beta, weight
    after the step)`` leading there from ``mu``.  Down-steps never increase a
    weight, so pruning to the box loses nothing inside it.
    """
    low = sub(mu, rs.beta_top)
    chains: Dict[Weight, List[Tuple[Weight, Weight]]] = {mu: []}
    queue = deque([mu])
    while queue:
        lam = queue.popleft()
        for beta in rs.positive_roots:
            nxt = down(q, rs, pi, beta, lam)
            if nxt == lam or nxt in chains or not in_box(nxt, low, mu):
                continue
            chains[nxt] = chains[lam] + [(beta, nxt)]
            queue.append(nxt)
    return chains


def strongly_linked_set(q: BraidingMatrix, rs: RootSystemData, pi: TorusCharacter, mu: Weight) -> List[Weight]:
    """Members of the strongly linked set of ``mu``, in decreasing lexicographic order."""
    return sorted(strongly_linked_chains(q, rs, pi, mu), reverse=True)


def validate_chain(
    q: BraidingMatrix, rs: RootSystemData, pi: TorusCharacter, mu: Weight, chain: List[Tuple[Weight, Weight]]
) -> bool:
    """Replay a witness chain and check each step is a genuine down-step inside the box."""
    low = sub(mu, rs.beta_top)
    cur = mu
    for beta, nxt in chain:
        if beta not in rs.b or down(q, rs, pi, beta, cur) != nxt or nxt == cur:
            return False
        if not in_box(nxt, low, mu):
            return False
        cur = nxt
    return True


def default_window(rs: RootSystemData, mu: Weight) -> Tuple[Weight, Weight]:
    return sub(mu, scale(2, rs.beta_top)), add(mu, rs.beta_top)


def _box_points(low: Weight, high: Weight):
    return itertools.product(*(range(a, b + 1) for a, b in zip(low, high)))


def linkage_classes(
    q: BraidingMatrix, rs: RootSystemData, pi: TorusCharacter, window: Tuple[Weight, Weight]
) -> List[List[Weight]]:
    """Partition of the window generated by down-steps that stay inside it.

    Each class is sorted in decreasing lexicographic order and the classes are
    ordered by their largest member, descending.
    """
    low, high = window
    if not leq(low, high):
        raise ValueError(f"empty window {low}..{high}")
    uf = UnionFind()
    for lam in _box_points(low, high):
        uf[lam]
        for beta in rs.positive_roots:
            nxt = down(q, rs, pi, beta, lam)
            if nxt != lam and in_box(nxt, low, high):
                uf.union(lam, nxt)
    classes = [sorted(c, reverse=True) for c in uf.to_sets()]
    classes.sort(key=lambda c: c[0], reverse=True)
    return classes


def atypicality(q: BraidingMatrix, rs: RootSystemData, pi: TorusCharacter, mu: Weight) -> Tuple[int, Tuple[Weight, ...]]:
    """Degree of atypicality and the roots ``beta`` with ``n_beta(mu) != 0``."""
    zero_roots = tuple(b for b in rs.positive_roots if n_beta(q, rs, pi, mu, b))
    return len(zero_roots), zero_roots


def atypicality_by_factors(
    q: BraidingMatrix, rs: RootSystemData, pi: TorusCharacter, mu: Weight
) -> Tuple[int, Tuple[Weight, ...]]:
    """Same as :func:`atypicality`, decided from the vanishing factors of the product."""
    zero_roots = tuple(b for b in rs.positive_roots if factor_zeros(q, rs, pi, mu, b))
    return len(zero_roots), zero_roots


def is_typical(q: BraidingMatrix, rs: RootSystemData, pi: TorusCharacter, mu: Weight) -> bool:
    return atypicality(q, rs, pi, mu)[0] == 0
