import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from enriques_check import catalog
from enriques_check.e10 import (
    D1_IN_E10, RANK, IsotropicSequence, add, apply_word, canonical_structure_check,
    chamber_descent, dot, e, e10_basis, e10_coordinates, e10_lattice, from_e10_coordinates,
    isotropic_sequence, k_vector, reflect, scale, standard_isotropic_sequence, weyl_vector,
)
from enriques_check.lattice import Lattice, profile, sublattice_index
from enriques_check.linalg import det_exact, signature, solve_exact

vectors = st.lists(st.integers(-50, 50), min_size=RANK, max_size=RANK).map(tuple)


def e10_roots():
    return e10_basis() + [add(e(1), scale(-1, e(10))), add(e(0), scale(-1, e(4)), scale(-1, e(5)), scale(-1, e(6)))]


def test_basis_is_orthogonal_to_k():
    assert all(dot(b, k_vector()) == 0 for b in e10_basis())
    assert dot(k_vector(), k_vector()) == -1


def test_e10_profile():
    p = profile(e10_lattice())
    assert (p.determinant, p.even, p.unimodular, p.signature) == (-1, True, True, (1, 9, 0))


def test_e10_diagram_is_t237():
    from enriques_check.diagram import CurveDiagram, Edge
    g = e10_lattice().gram
    edges = [Edge(i, j) for i in range(10) for j in range(i + 1, 10) if g[i][j]]
    d = CurveDiagram(tuple(map(str, range(10))), tuple(edges))
    degrees = sorted(len(a) for a in d.adjacency)
    assert degrees == [1, 1, 1, 2, 2, 2, 2, 2, 2, 3]


def test_standard_isotropic_sequence():
    seq = standard_isotropic_sequence()
    g = Lattice(tuple(tuple(dot(a, b) for b in seq.vectors) for a in seq.vectors)).gram
    assert all(g[i][i] == 0 for i in range(10))
    assert all(g[i][j] == 1 for i in range(10) for j in range(10) if i != j)
    assert det_exact(g) == -9
    coords = [e10_coordinates(f) for f in seq.vectors]
    assert sublattice_index(e10_lattice(), coords) == 3


def test_isotropic_sequence_validation():
    with pytest.raises(ValueError):
        isotropic_sequence([e(0), e(1)])
    assert IsotropicSequence((e(0),)).violations() == ["f0 has norm 1"]


def test_coordinates_round_trip():
    v = standard_isotropic_sequence().vectors[3]
    assert from_e10_coordinates(e10_coordinates(v)) == v
    with pytest.raises(ValueError):
        e10_coordinates(e(0))


def test_weyl_vector():
    w = weyl_vector()
    assert all(dot(w, b) == 1 for b in e10_basis())
    assert dot(w, w) == 1240


def test_reflection_examples():
    f = standard_isotropic_sequence().vectors
    assert reflect(f[0], add(e(1), scale(-1, e(2)))) == f[1]
    with pytest.raises(ValueError):
        reflect(f[0], e(1))


@settings(max_examples=1000)
@given(vectors, vectors, st.sampled_from(e10_roots()))
def test_reflection_is_an_isometry_and_involution(x, y, r):
    assert dot(reflect(x, r), reflect(y, r)) == dot(x, y)
    assert reflect(reflect(x, r), r) == x
    assert reflect(r, r) == tuple(-a for a in r)


def test_apply_word():
    f = standard_isotropic_sequence().vectors
    word = [add(e(1), scale(-1, e(2))), add(e(2), scale(-1, e(3)))]
    assert apply_word(word, f[0]) == f[2]


def test_chamber_descent_example():
    f = standard_isotropic_sequence().vectors
    roots = [add(e(2), scale(-1, e(1))), add(e(3), scale(-1, e(2)))]
    ample = (10, -1, -2) + (-3,) * 8
    x, word = chamber_descent(f[2], roots, ample)
    assert x == f[0]
    assert len(word) == 2


def test_chamber_descent_rejects_bad_input():
    with pytest.raises(ValueError):
        chamber_descent(e(0), [e(1)])
    with pytest.raises(ValueError):
        chamber_descent(scale(-1, e(0)), e10_basis())
    with pytest.raises(ValueError):
        chamber_descent(e(0), e10_basis(), ample=e(1))


def _hyperbolic_setups():
    out = []
    for name in catalog.CATALOG:
        g = catalog.get(name).gram
        if signature(g) != (1, len(g) - 1, 0):
            continue
        det = det_exact(g)
        h = tuple(int(x * abs(det)) for x in solve_exact(g, [1] * len(g)))
        lat = Lattice(g)
        if lat.norm(h) > 0:
            out.append((lat, h))
    return out


SETUPS = _hyperbolic_setups()


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_chamber_descent_terminates_nef(data):
    lat, h = data.draw(st.sampled_from(SETUPS))
    n = lat.rank
    basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = data.draw(st.lists(st.sampled_from(basis), min_size=1, unique=True))
    k = data.draw(st.integers(1, 4))
    noise = data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n))
    v = tuple(k * a + b for a, b in zip(h, noise))
    if lat.norm(v) < 0 or lat.pair(h, v) <= 0:
        return
    x, word = chamber_descent(v, roots, h, lat.pair)
    assert all(lat.pair(x, r) >= 0 for r in roots)
    assert lat.norm(x) == lat.norm(v)
    assert apply_word(word, v, lat.pair) == x


def test_canonical_structure_passes_with_one_chain():
    f = standard_isotropic_sequence().vectors
    r = add(e(2), scale(-1, e(1)))
    seq = IsotropicSequence((f[0], f[1]), (0,))
    rep = canonical_structure_check(seq, [r])
    assert rep.ok and rep.c == 1 and rep.chain_lengths == (1,)


def test_canonical_structure_reports_first_failing_clause():
    f = standard_isotropic_sequence().vectors
    r = add(e(2), scale(-1, e(1)))
    assert canonical_structure_check(IsotropicSequence((f[0], f[1]), (1,)), [r]).clause == "indices"
    assert canonical_structure_check(IsotropicSequence((f[0], f[1]), (0,)), []).clause == "chain-curve"
    # f1.(e1 - e2) = -1
    bad = canonical_structure_check(IsotropicSequence((f[0], f[1]), (0,)), [scale(-1, r)])
    assert bad.clause == "nef"
    # a chain curve orthogonal to the nef member breaks the pairing clause
    r45 = add(e(4), scale(-1, e(5)))
    rep = canonical_structure_check(IsotropicSequence((f[0], add(f[0], r45)), (0,)), [r45])
    assert rep.clause == "chain-pairing"


def test_d1_embedding():
    lat = e10_lattice()
    g = lat.gram_of(D1_IN_E10)
    assert g == catalog.get("d1").gram
    assert sublattice_index(lat, D1_IN_E10) == 4
