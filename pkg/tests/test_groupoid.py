import pytest

from qlinkage.catalog import CARTAN_TYPES, cartan_type, default_suite, super_a11
from qlinkage.errors import MorphismCapExceeded, OrbitCapExceeded
from qlinkage.groupoid import find_object, hom_into, length_by_roots, longest_element, morphism_from_word, orbit
from qlinkage.rootsystem import root_system

SUITE = default_suite()


@pytest.mark.parametrize("n", [3, 4, 5, 7])
def test_a11_hom_set_into_q(n):
    g = orbit(super_a11(n))
    homs = hom_into(g, 0)
    assert len(homs) == 6
    assert sorted(len(w.word) for w in homs) == [0, 1, 1, 2, 2, 3]
    assert len({w.source for w in homs}) == 6


@pytest.mark.parametrize("key", [k for k in sorted(SUITE) if SUITE[k].theta == 2])
def test_rank2_hom_size_is_twice_root_count(key):
    g = orbit(SUITE[key])
    for k in range(len(g)):
        assert len(hom_into(g, k)) == 2 * len(root_system(g, k).positive_roots)


@pytest.mark.parametrize("name,size", [("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24), ("B3", 48), ("C3", 48)])
def test_cartan_weyl_group_orders(name, size):
    c, d = CARTAN_TYPES[name]
    g = orbit(cartan_type(c, d, 7))
    assert len(g) == 1
    assert len(hom_into(g, 0)) == size


@pytest.mark.parametrize("key", sorted(SUITE))
def test_words_and_lengths(key):
    g = orbit(SUITE[key])
    for k in range(len(g)):
        homs = hom_into(g, k)
        maps = {(w.source, w.map) for w in homs}
        assert len(maps) == len(homs)
        rs = root_system(g, k)
        for w in homs:
            again = morphism_from_word(g, k, w.word)
            assert again.map == w.map and again.source == w.source
            assert length_by_roots(w, root_system(g, w.source).positive_roots, rs.positive_roots) == len(w.word)
        w0 = longest_element(g, k)
        assert w0.length == len(rs.positive_roots)
        assert max(w.length for w in homs) == w0.length


def test_a11_w0_word():
    g = orbit(super_a11(4))
    assert longest_element(g, 0).word == (0, 1, 0)


def test_step_is_involutive():
    for q in SUITE.values():
        g = orbit(q)
        for k in range(len(g)):
            for i in range(q.theta):
                assert g.step[g.step[k][i]][i] == k


def test_find_object():
    q = super_a11(4)
    g = orbit(q)
    assert find_object(g, q.transpose()) is not None
    assert find_object(g, super_a11(5)) is None


def test_caps():
    with pytest.raises(OrbitCapExceeded):
        orbit(super_a11(4), object_cap=3)
    g = orbit(cartan_type(*CARTAN_TYPES["B3"], 7))
    with pytest.raises(MorphismCapExceeded):
        hom_into(g, 0, morphism_cap=10)
