from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
import hypothesis.strategies as st

from enriques_check.wild import UNIT, MonomialIdeal2, chi_quotient, colength, lef_point, product


def ideal(*gens):
    return MonomialIdeal2(gens)


def colength_by_inclusion_exclusion(i: MonomialIdeal2) -> int:
    """|box| minus |union of the generator cones| inside the bounding box."""
    mu = min(a for a, b in i.generators if b == 0)
    mv = min(b for a, b in i.generators if a == 0)
    gens = list(i.generators)
    covered = 0
    for k in range(1, len(gens) + 1):
        for sub in combinations(gens, k):
            a = max(g[0] for g in sub)
            b = max(g[1] for g in sub)
            covered += (-1) ** (k + 1) * max(mu - a, 0) * max(mv - b, 0)
    return mu * mv - covered


def test_colength_examples():
    assert colength(ideal((1, 0), (0, 1))) == 1
    assert colength(ideal((2, 0), (0, 2))) == 4
    assert colength(ideal((4, 0), (0, 4), (2, 2))) == 12
    assert colength(UNIT) == 0


def test_infinite_colength():
    with pytest.raises(ValueError):
        colength(ideal((1, 1)))
    with pytest.raises(ValueError):
        lef_point(ideal((2, 0)))


def test_minimalization():
    assert ideal((2, 0), (3, 1), (0, 2)).generators == frozenset({(2, 0), (0, 2)})
    with pytest.raises(ValueError):
        ideal((-1, 0))


def test_product_examples():
    m = ideal((1, 0), (0, 1))
    assert product(m, m) == ideal((2, 0), (1, 1), (0, 2))
    j = ideal((2, 0), (0, 2))
    assert product(j, j) == ideal((4, 0), (2, 2), (0, 4))
    assert product(j, UNIT) == j
    assert str(product(j, j)) == "(u^4, u^2v^2, v^4)"


def test_lef_point_examples():
    r = lef_point(ideal((2, 0), (0, 2)))
    assert (r.colength_J, r.dim_J_mod_J2, r.omega_term, r.lefschetz) == (4, 8, 8, 4)
    assert lef_point(ideal((1, 0), (0, 1))).decomposition == (1, 2, 2)
    assert lef_point(ideal((1, 0), (0, 2))).lefschetz == 2
    assert r.lefschetz != 12


def test_chi_quotient():
    assert chi_quotient(1).value == 1
    assert chi_quotient(3).value == 2
    q = chi_quotient(0)
    assert q.value == Fraction(1, 2) and not q.integral


@st.composite
def finite_ideals(draw):
    a = draw(st.integers(1, 7))
    b = draw(st.integers(1, 7))
    mixed = draw(st.lists(st.tuples(st.integers(0, 7), st.integers(0, 7)), max_size=4))
    return MonomialIdeal2([(a, 0), (0, b)] + mixed)


@given(finite_ideals())
def test_colength_two_ways(i):
    if i == UNIT:
        return
    assert colength(i) == colength_by_inclusion_exclusion(i)


@given(finite_ideals())
def test_square_has_larger_colength(i):
    c, c2 = colength(i), colength(product(i, i))
    assert c2 >= c
    assert (c2 == c) == (i == UNIT)


@given(finite_ideals())
def test_lef_point_closed_form(i):
    r = lef_point(i)
    assert r.lefschetz == r.colength_J + r.dim_J_mod_J2 - r.omega_term
    assert r.lefschetz == colength(product(i, i)) - 2 * colength(i)


@given(st.integers(-20, 20))
def test_chi_quotient_integrality(chi_z):
    assert chi_quotient(chi_z).integral == (chi_z % 2 == 1)
