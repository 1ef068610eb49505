"""Self-checks run by ``qlinkage verify``: internal cross-checks over a set of matrices."""

from __future__ import annotations

import random
from typing import Callable, Dict, List, Tuple

from .bicharacter import BraidingMatrix, bound, cartan_matrix, dual_action
from .characters import ch_twisted_verma, ch_twisted_verma_by_twist, ch_verma
from .cyclotomic import RootOfUnity
from .dotaction import coroot_pairing, match_down_to_dot, rho_pairing_identity
from .groupoid import hom_into, length_by_roots, morphism_from_word, orbit
from .lattice import basis, neg, scale, sub
from .linkage import (
    TorusCharacter,
    atypicality,
    atypicality_by_factors,
    n_beta,
    t_beta,
    t_beta_bracket,
)
from .rootsystem import is_standard_type, positive_roots_oracle, root_system, shift

__all__ = ["run_suite", "random_torsion_pi"]


def random_torsion_pi(rng: random.Random, theta: int, max_order: int = 12) -> TorusCharacter:
    def one():
        n = rng.randint(1, max_order)
        return RootOfUnity(rng.randrange(n), n)

    return TorusCharacter(tuple(one() for _ in range(theta)), tuple(one() for _ in range(theta)))


def _checks_for(name: str, q: BraidingMatrix, rng: random.Random, samples: int) -> List[Tuple[str, Callable[[], str]]]:
    g = orbit(q)
    theta = q.theta

    def weights(k):
        return [tuple(rng.randint(-10, 10) for _ in range(theta)) for _ in range(k)]

    def orbit_closed():
        for p, i, r in g.edges:
            if g.step[r][i] != p:
                return f"edge {p} --{i + 1}--> {r} is not an involution"
            if cartan_matrix(g.objects[r])[i] != cartan_matrix(g.objects[p])[i]:
                return f"row {i + 1} of the Cartan matrix changes along {p} -> {r}"
        return ""

    def words_reproduce_maps():
        for k in range(len(g)):
            for w in hom_into(g, k):
                if morphism_from_word(g, k, w.word).map != w.map:
                    return f"word {w.word} into {k} does not reproduce its map"
                if dual_action(g.objects[w.source], w.map) != g.objects[k]:
                    return f"dual action of word {w.word} does not land on object {k}"
        return ""

    def roots_match_oracle():
        for k in range(len(g)):
            if positive_roots_oracle(g, k) != root_system(g, k).root_set:
                return f"object {k}: reduced-word roots differ from the morphism sweep"
        return ""

    def lengths_and_bounds():
        for k in range(len(g)):
            rs = root_system(g, k)
            for w in hom_into(g, k):
                src = root_system(g, w.source)
                if length_by_roots(w, src.positive_roots, rs.positive_roots) != w.length:
                    return f"length mismatch for word {w.word}"
                images = {w.map(r) for r in src.positive_roots}
                images |= {neg(v) for v in images}
                if images != rs.root_set | {neg(r) for r in rs.root_set}:
                    return f"word {w.word} does not map roots onto roots"
                for r in src.positive_roots:
                    if bound(g.objects[k], w.map(r)) != src.b[r]:
                        return f"bound not invariant under word {w.word}"
            w0 = rs.w0
            if w0.map(root_system(g, w0.source).beta_top) != neg(rs.beta_top):
                return f"w0 does not negate the top degree at object {k}"
        return ""

    def shift_recurrence():
        rs = root_system(g, 0)
        for mu in weights(3):
            for w in hom_into(g, 0):
                if not w.word:
                    continue
                prev = morphism_from_word(g, 0, w.word[:-1])
                beta = prev.map(basis(theta, w.word[-1]))
                expect = sub(shift(rs, prev, mu), scale(rs.b[beta] - 1, beta))
                if shift(rs, w, mu) != expect:
                    return f"shift recurrence fails for word {w.word}"
        return ""

    def master_identity():
        rs = root_system(g, 0)
        for mu in weights(samples):
            z = ch_verma(q, rs, mu)
            for w in hom_into(g, 0):
                m = shift(rs, w, mu)
                if ch_twisted_verma(q, rs, w, m) != z or ch_twisted_verma_by_twist(g, w, m) != z:
                    return f"ch Z({mu}) differs from the twisted Verma character for word {w.word}"
        return ""

    def n_equals_t():
        rs = root_system(g, 0)
        pis = [TorusCharacter.trivial(theta)] + [random_torsion_pi(rng, theta) for _ in range(3)]
        for pi in pis:
            for mu in weights(samples):
                for beta in rs.positive_roots:
                    for w, _i in rs.all_presentations[beta]:
                        if n_beta(q, rs, pi, mu, beta) != t_beta(q, rs, pi, shift(rs, w, mu), beta):
                            return f"n != t for beta {beta}, mu {mu}, word {w.word}"
                    if t_beta(q, rs, pi, mu, beta) != t_beta_bracket(q, rs, pi, mu, beta):
                        return f"bracket route disagrees for beta {beta}, mu {mu}"
        return ""

    def typicality_paths():
        rs = root_system(g, 0)
        for _ in range(samples):
            pi = random_torsion_pi(rng, theta)
            mu = weights(1)[0]
            if atypicality(q, rs, pi, mu) != atypicality_by_factors(q, rs, pi, mu):
                return f"factor route disagrees at mu {mu}"
        return ""

    def down_is_dot():
        if not is_standard_type(g):
            return "skipped: not of standard type"
        rs = root_system(g, 0)
        pi = TorusCharacter.trivial(theta)
        for beta in rs.positive_roots:
            coroot_pairing(g, rs, beta, rs.beta_top, verify=True)
        for beta in rs.cartan_roots:
            if not rho_pairing_identity(g, rs, beta):
                return f"rho pairing identity fails for {beta}"
            for mu in weights(samples):
                match_down_to_dot(q, g, rs, pi, beta, mu)
        return ""

    checks = [
        ("orbit closed", orbit_closed),
        ("words reproduce maps", words_reproduce_maps),
        ("roots match sweep", roots_match_oracle),
        ("lengths and bounds", lengths_and_bounds),
        ("shift recurrence", shift_recurrence),
        ("master identity", master_identity),
        ("n equals t", n_equals_t),
        ("typicality routes", typicality_paths),
        ("down-step is a dot reflection", down_is_dot),
    ]
    return [(f"{name}: {label}", fn) for label, fn in checks]


def run_suite(suite: Dict[str, BraidingMatrix], seed: int = 0, samples: int = 20) -> dict:
    rng = random.Random(seed)
    results = []
    for name, q in suite.items():
        for label, fn in _checks_for(name, q, rng, samples):
            try:
                msg = fn()
                ok = not msg or msg.startswith("skipped")
            except Exception as e:  # a crash is a failed check, reported by name
                msg, ok = f"{type(e).__name__}: {e}", False
            results.append({"name": label, "ok": ok, "detail": msg})
    passed = sum(1 for r in results if r["ok"])
    return {"seed": seed, "samples": samples, "checks": results, "passed_count": passed, "passed": passed == len(results)}
