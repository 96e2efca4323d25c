import pytest
from hypothesis import given
import hypothesis.strategies as st

from enriques_check.lattice import (
    D4D4_IN_E8, E6A2_IN_E8, AbelianInvariants, Lattice, coordinate_gram, direct_sum,
    disc_index, discriminant_group, e8, find_root_embedding, hyperbolic_plane, profile,
    root_lattice, roots, saturation_quotient, sublattice_index,
)
from enriques_check.e10 import e10_lattice


def test_e8_has_240_roots():
    assert len(roots(e8())) == 240


def test_e8_profile():
    p = profile(e8())
    assert (p.determinant, p.even, p.unimodular, p.signature) == (1, True, True, (0, 8, 0))


def test_e8_plus_u_looks_like_e10():
    assert profile(direct_sum(e8(), hyperbolic_plane())) == profile(e10_lattice())


@pytest.mark.parametrize("name, group", [("A2", (3,)), ("A3", (4,)), ("D4", (2, 2)), ("D5", (4,)), ("E6", (3,)), ("E7", (2,)), ("E8", ())])
def test_discriminant_groups(name, group):
    assert discriminant_group(root_lattice(name)).factors == group


def test_discriminant_group_of_degenerate_lattice():
    with pytest.raises(ValueError):
        discriminant_group(Lattice(((0, 0), (0, 0))))


def test_glue_groups():
    assert str(saturation_quotient(e8(), D4D4_IN_E8)) == "Z/2 x Z/2"
    assert str(saturation_quotient(e8(), E6A2_IN_E8)) == "Z/3"


def test_embeddings_have_the_right_gram():
    assert coordinate_gram(e8(), D4D4_IN_E8) == direct_sum(root_lattice("D4"), root_lattice("D4")).gram
    assert coordinate_gram(e8(), E6A2_IN_E8) == direct_sum(root_lattice("E6"), root_lattice("A2")).gram


def test_glue_matches_discriminants():
    # |det(sub)| = index^2 |det(E8)|
    for vecs, sub in ((D4D4_IN_E8, ("D4", "D4")), (E6A2_IN_E8, ("E6", "A2"))):
        d = profile(direct_sum(*(root_lattice(n) for n in sub))).determinant
        assert disc_index(d, 1) == saturation_quotient(e8(), vecs).order == sublattice_index(e8(), vecs)


def test_find_root_embedding_a2():
    emb = find_root_embedding(root_lattice("A2").gram, e8())
    assert emb is not None and e8().gram_of(emb) == root_lattice("A2").gram


def test_find_root_embedding_impossible():
    # three mutually orthogonal... nine orthogonal roots do not fit in rank 8
    target = root_lattice("A1").gram
    nine = direct_sum(*(Lattice(target) for _ in range(9))).gram
    assert find_root_embedding(nine, root_lattice("D4")) is None


def test_sublattice_index_errors():
    lat = e8()
    with pytest.raises(ValueError):
        sublattice_index(lat, [(1,) * 8])
    with pytest.raises(ValueError):
        sublattice_index(lat, [(1,) + (0,) * 7] * 8)


def test_disc_index_rejects_non_squares():
    assert disc_index(-16, -1) == 4
    assert disc_index(-4, -1) == 2
    with pytest.raises(ValueError):
        disc_index(-8, -1)


def test_abelian_invariants_validation():
    with pytest.raises(ValueError):
        AbelianInvariants((2, 3))
    assert AbelianInvariants((2, 6)).order == 12
    assert str(AbelianInvariants()) == "0"


def test_lattice_must_be_symmetric():
    with pytest.raises(ValueError):
        Lattice(((1, 2), (3, 4)))


@given(st.lists(st.integers(-3, 3), min_size=8, max_size=8), st.lists(st.integers(-3, 3), min_size=8, max_size=8))
def test_pair_is_symmetric_and_even(x, y):
    lat = e8()
    assert lat.pair(x, y) == lat.pair(y, x)
    assert lat.norm(x) % 2 == 0
    assert lat.norm(x) <= 0
