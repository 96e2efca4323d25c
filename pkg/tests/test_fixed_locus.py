import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from enriques_check import catalog
from enriques_check.diagram import CurveDiagram, Edge, euler_number
from enriques_check.fixed_locus import (
    PICTURES, SMOOTH, STAR, TWO, FixedLocusAssignment, assignment_for, ct_budget_check,
    euler_of, lemma43_verify, picture_assignment, special_fixed_points, theorem44_search,
    up_to_symmetry, valid_assignments,
)


def test_a1_assignments():
    d = catalog.get("A~1")
    assigns = valid_assignments(d)
    assert [a.marking for a in assigns] == [(TWO, TWO), (STAR, TWO), (TWO, STAR)]
    # the two pictures are the orbits under swapping the components
    assert len(up_to_symmetry(d, assigns)) == 2
    assert {euler_of(a, d) for a in assigns} == {2}


def test_d5_has_no_assignment():
    assert valid_assignments(catalog.get("D~5")) == []


def test_e8_assignments():
    d = catalog.get("E~8")
    assigns = valid_assignments(d)
    assert assigns
    assert {euler_of(a, d) for a in assigns} == {10}
    # the branch vertex is always a star; it may be the only one
    branch = next(v for v in range(d.size) if len(d.adjacency[v]) == 3)
    assert all(branch in a.stars for a in assigns)
    assert (branch,) in [a.stars for a in assigns]


def test_e8_picture_is_a_legal_assignment():
    p = PICTURES[0]
    assert p.type == "E~8" and len(p.stars) == 4
    a = picture_assignment(p)
    assert a is not None and euler_of(a, p.diagram) == 10


def test_euler_examples():
    a8 = catalog.get("A~8")
    all_two = assignment_for(a8, [])
    assert euler_of(all_two, a8) == 9
    d4 = catalog.get("D~4")
    a = assignment_for(d4, [0])
    assert a.free_dots == (0, 1, 1, 1, 1)
    assert euler_of(a, d4) == 6


def test_euler_of_rejects_invalid():
    d = catalog.get("A~3")
    with pytest.raises(ValueError):
        euler_of(FixedLocusAssignment((STAR, STAR, TWO, TWO), (0, 0, 0, 0)), d)
    with pytest.raises(ValueError):
        euler_of(FixedLocusAssignment((TWO, TWO, TWO, TWO), (1, 0, 0, 0)), d)


@pytest.mark.parametrize("name", list(catalog.FIBER_TYPES) + ["D~5"])
def test_fixed_euler_equals_fiber_euler(name):
    rep = lemma43_verify(name)
    assert rep.passed
    if name != "D~5":
        assert rep.values == (euler_number(catalog.get(name)),)


@pytest.mark.parametrize("name", [f"A~{n}" for n in range(1, 13)] + [f"D~{n}" for n in range(6, 11)])
def test_euler_identity_beyond_pictures(name):
    d = catalog.get(name)
    assert {euler_of(a, d) for a in valid_assignments(d)} == {euler_number(d)}


def test_pictures_reproduce_printed_values():
    assert len(PICTURES) == 23
    rows = {}
    for p in PICTURES:
        a = picture_assignment(p)
        assert a is not None, p
        assert euler_of(a, p.diagram) == p.printed == euler_number(p.diagram)
        rows.setdefault(p.row, p.printed)
    assert list(rows.values()) == [10, 10, 9, 9, 9, 9, 8, 8, 8, 8, 7, 7, 6, 6, 6, 5, 4, 3, 2]


@st.composite
def small_configs(draw):
    n = draw(st.integers(1, 8))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=n + 1)) if pairs else []
    edges = []
    for i, j in chosen:
        m = draw(st.integers(1, 2))
        edges.append(Edge(i, j, m, draw(st.integers(1, m))))
    return CurveDiagram(tuple(f"v{k}" for k in range(n)), tuple(sorted(edges, key=lambda e: (e.i, e.j))))


@settings(max_examples=300, deadline=None)
@given(small_configs())
def test_assignments_satisfy_the_invariants(d):
    for a in valid_assignments(d):
        stars = set(a.stars)
        assert not any(e.i in stars and e.j in stars for e in d.edges)
        for v in range(d.size):
            if v in stars:
                continue
            incident = sum(e.points for e in d.edges if v in (e.i, e.j))
            assert incident + a.free_dots[v] == 2
        # branch vertices are always stars
        assert all(v in stars for v in range(d.size) if len(d.adjacency[v]) >= 3)


@settings(max_examples=300, deadline=None)
@given(small_configs())
def test_assignments_biject_with_legal_star_sets(d):
    from itertools import combinations
    legal = [
        s for k in range(d.size + 1) for s in combinations(range(d.size), k)
        if assignment_for(d, s) is not None
    ]
    assert sorted(a.stars for a in valid_assignments(d)) == sorted(legal)


@settings(max_examples=300, deadline=None)
@given(small_configs())
def test_euler_is_always_2v_minus_points(d):
    # for connected configurations the count never depends on the stars
    if not d.is_connected():
        return
    for a in valid_assignments(d):
        assert euler_of(a, d) == euler_number(d)


def test_special_kinds():
    assert [special_fixed_points(k) for k in ("IV", "III", "II", "I1")] == [4, 3, 2, 1]
    with pytest.raises(ValueError):
        special_fixed_points("I2")


def test_budget_examples():
    assert ct_budget_check("E~6", SMOOTH).achievable
    assert not ct_budget_check("A~3", "A~3").achievable
    assert ct_budget_check(SMOOTH, "A~7").totals == (12,)
    assert ct_budget_check("IV", "E~8").totals == (14,)


def test_theorem44_search():
    cands = theorem44_search()
    assert all(c.total == 12 for c in cands)
    assert all(c.killed_by is not None for c in cands)
    pairs = {(c.first, c.second): c.killed_by for c in cands}
    assert pairs[("cycle-6", "cycle-6")] == "rank-bound"
    assert pairs[("smooth", "cycle-8")] == "quotient-euler"
    assert ("smooth", "smooth") not in pairs
    assert len(pairs) == 7
