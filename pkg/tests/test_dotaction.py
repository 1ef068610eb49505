import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlinkage.catalog import default_suite, nonstandard_rank2, resolve, super_a11
from qlinkage.dotaction import (
    AffineReflection,
    check_super_linkage,
    coroot_pairing,
    delta_shift_identity,
    dot_reflect,
    dot_reflect_presented,
    match_down_to_dot,
    reflect_in_root,
    rho_pairing_identity,
    super_linkage_report,
)
from qlinkage.errors import HalfIntegerResult, NoSuchM, NotStandardType, PreconditionUnmet
from qlinkage.groupoid import orbit
from qlinkage.lattice import basis, scale
from qlinkage.linkage import TorusCharacter, down
from qlinkage.rootsystem import is_standard_type, root_system

SUITE = default_suite()
STANDARD = [k for k in sorted(SUITE) if is_standard_type(orbit(SUITE[k]))]
A1, A2, B = (1, 0), (0, 1), (1, 1)


def data(key):
    q = SUITE[key] if key in SUITE else resolve(key)
    g = orbit(q)
    return q, g, root_system(g, 0)


@pytest.mark.parametrize("key", STANDARD)
def test_coroot_pairing_presentation_independent(key):
    q, g, rs = data(key)
    for beta in rs.positive_roots:
        assert coroot_pairing(g, rs, beta, beta, verify=True) == 2
        assert coroot_pairing(g, rs, neg_(beta), beta) == -2
        for j in range(q.theta):
            coroot_pairing(g, rs, beta, basis(q.theta, j), verify=True)


def neg_(v):
    return tuple(-x for x in v)


@pytest.mark.parametrize("key", STANDARD)
def test_reflections_permute_roots(key):
    q, g, rs = data(key)
    roots = rs.root_set | {neg_(r) for r in rs.root_set}
    for beta in rs.positive_roots:
        assert reflect_in_root(g, rs, beta, beta) == neg_(beta)
        assert {reflect_in_root(g, rs, beta, r) for r in roots} == roots


@pytest.mark.parametrize("key", STANDARD)
def test_rho_pairing_identity(key):
    q, g, rs = data(key)
    for beta in rs.cartan_roots:
        assert rho_pairing_identity(g, rs, beta)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["cartan-A2(5)", "cartan-B2(7)", "cartan-G2(7)", "super-A11(4)", "super-A11(5)"]), st.integers(-8, 8), st.integers(-8, 8), st.integers(-3, 3))
def test_dot_reflection_is_an_involution(key, x, y, m):
    q, g, rs = data(key)
    mu = (x, y)
    for beta in rs.cartan_roots:
        try:
            once = dot_reflect(g, rs, beta, m, mu)
        except HalfIntegerResult:
            continue
        assert dot_reflect(g, rs, beta, m, once) == mu
        assert dot_reflect_presented(g, rs, beta, m, mu) == once


@pytest.mark.parametrize("key", ["cartan-A2(5)", "cartan-B2(7)", "cartan-G2(7)", "cartan-A3(5)"])
def test_down_is_dot_on_cartan_type(key):
    q, g, rs = data(key)
    pi = TorusCharacter.trivial(q.theta)
    rng = random.Random(11)
    for _ in range(25):
        mu = tuple(rng.randint(-10, 10) for _ in range(q.theta))
        for beta in rs.cartan_roots:
            m = match_down_to_dot(q, g, rs, pi, beta, mu)
            assert dot_reflect(g, rs, beta, m, mu) == down(q, rs, pi, beta, mu)


@pytest.mark.parametrize("key", ["cartan-A2(5)", "cartan-B2(7)", "cartan-G2(7)", "cartan-A3(5)"])
def test_delta_shift_identity_cartan(key):
    q, g, rs = data(key)
    rng = random.Random(2)
    for _ in range(20):
        mu = tuple(rng.randint(-10, 10) for _ in range(q.theta))
        for beta in rs.cartan_roots:
            assert delta_shift_identity(g, rs, beta, mu)


def test_odd_root_negative_control_exact_condition():
    for n in (4, 6, 8):
        q, g, rs = data(f"super-A11({n})")
        pi = TorusCharacter.trivial(2)
        for m2 in range(-2 * n, 2 * n + 1):
            mu = (3, m2)
            if m2 % 2 == 0 and m2 % n != 0:
                with pytest.raises(NoSuchM):
                    match_down_to_dot(q, g, rs, pi, A1, mu, presented=True)
            else:
                m = match_down_to_dot(q, g, rs, pi, A1, mu, presented=True)
                assert dot_reflect_presented(g, rs, A1, m, mu) == down(q, rs, pi, A1, mu)
            match_down_to_dot(q, g, rs, pi, B, mu)


def test_presented_dot_expansion_on_alpha1():
    """``s_{alpha_1} . mu = mu - (2 mu_1 - mu_2 - 1) alpha_1``."""
    q, g, rs = data("super-A11(4)")
    for mu in ((0, 0), (3, -2), (-5, 7)):
        assert dot_reflect_presented(g, rs, A1, 0, mu) == (mu[0] - (2 * mu[0] - mu[1] - 1), mu[1])


def _literal_alpha1(g, rs, mu):
    """Integers ``m`` for which the literal-rho dot image equals the down-step, or 'half'."""
    q = g.objects[0]
    pi = TorusCharacter.trivial(2)
    target = down(q, rs, pi, A1, mu)
    try:
        return [m for m in range(-30, 30) if AffineReflection.build(g, rs, A1, m).dot(mu, rs.beta_top) == target]
    except HalfIntegerResult:
        return "half"


def test_literal_rho_formula_on_odd_root():
    q, g, rs = data("super-A11(4)")
    for m2 in range(-8, 9):
        found = _literal_alpha1(g, rs, (1, m2))
        assert bool(found) == (m2 % 4 == 2), m2
    q, g, rs = data("super-A11(5)")
    for m2 in range(-5, 6):
        assert _literal_alpha1(g, rs, (1, m2)) == "half"


def test_preconditions():
    q, g, rs = data("super-A11(4)")
    with pytest.raises(PreconditionUnmet):
        dot_reflect(g, rs, A1, 0, (0, 0))
    pi = TorusCharacter.parse(["1/3", "0", "0", "0"], 2)
    with pytest.raises(PreconditionUnmet):
        match_down_to_dot(q, g, rs, pi, B, (0, 0))
    with pytest.raises(PreconditionUnmet):
        check_super_linkage(q, g, rs, pi, (0, 0), ((-4, -4), (0, 0)))
    qn = nonstandard_rank2()
    gn = orbit(qn)
    with pytest.raises(NotStandardType):
        coroot_pairing(gn, root_system(gn, 0), (1, 0), (1, 0))


def test_super_linkage_on_cartan_entries():
    for key in ("cartan-A2(5)", "cartan-B2(5)"):
        q, g, rs = data(key)
        pi = TorusCharacter.trivial(2)
        for mu in ((0, 0), (1, 0), (2, -3)):
            window = (scale(-2, rs.beta_top), rs.beta_top) if key == "cartan-A2(5)" else ((mu[0] - 12, mu[1] - 12), (mu[0] + 6, mu[1] + 6))
            rep = super_linkage_report(q, g, rs, pi, mu, window)
            assert rep.ok, rep.counterexamples
            assert mu in rep.linkage_class


def test_super_linkage_translation_lattice_a11():
    q, g, rs = data("super-A11(4)")
    rep = super_linkage_report(q, g, rs, TorusCharacter.trivial(2), (0, 0), ((-8, -8), (4, 4)))
    assert rep.ok
    gens = rep.translation_lattice
    minors = [a[0] * b[1] - a[1] * b[0] for a, b in itertools.combinations(gens, 2)]
    assert math.gcd(*minors) == 1  # the odd roots already span Z^2
