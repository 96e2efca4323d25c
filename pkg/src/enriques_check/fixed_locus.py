"""Fixed loci of a tame involution preserving every component of a fiber.

The model has three rules: pointwise-fixed components ("stars") are
pairwise disjoint; every other component is a P^1 with exactly two fixed
points; every intersection point of two components is fixed. A non-star
component therefore meets the rest of the fiber in at most two points, and
any of its two fixed points not used by an intersection is an isolated
fixed point ("free dot").
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from . import catalog
from .diagram import CurveDiagram, euler_number

STAR, TWO = "star", "two"


@dataclass(frozen=True)
class FixedLocusAssignment:
    marking: tuple[str, ...]
    free_dots: tuple[int, ...]

    @property
    def stars(self) -> tuple[int, ...]:
        return tuple(v for v, m in enumerate(self.marking) if m == STAR)


def incident_points(d: CurveDiagram) -> list[int]:
    pts = [0] * d.size
    for e in d.edges:
        pts[e.i] += e.points
        pts[e.j] += e.points
    return pts


def assignment_for(d: CurveDiagram, stars: Sequence[int]) -> FixedLocusAssignment | None:
    """The unique assignment with the given star set, or None if illegal."""
    star = set(stars)
    if any(e.i in star and e.j in star for e in d.edges):
        return None
    pts = incident_points(d)
    if any(pts[v] > 2 for v in range(d.size) if v not in star):
        return None
    return FixedLocusAssignment(
        tuple(STAR if v in star else TWO for v in range(d.size)),
        tuple(0 if v in star else 2 - pts[v] for v in range(d.size)),
    )


def valid_assignments(d: CurveDiagram) -> list[FixedLocusAssignment]:
    """All legal assignments, ordered by number of stars and then star tuple."""
    pts = incident_points(d)
    forced = {v for v in range(d.size) if pts[v] > 2}
    free = [v for v in range(d.size) if v not in forced]
    out = []
    for k in range(len(free) + 1):
        for extra in combinations(free, k):
            a = assignment_for(d, sorted(forced | set(extra)))
            if a is not None:
                out.append(a)
    return sorted(out, key=lambda a: (len(a.stars), a.stars))


def check_assignment(a: FixedLocusAssignment, d: CurveDiagram) -> None:
    if len(a.marking) != d.size or assignment_for(d, a.stars) != a:
        raise ValueError("assignment is not valid for this diagram")


def euler_of(a: FixedLocusAssignment, d: CurveDiagram) -> int:
    """Euler number of the fixed locus: 2 per fixed curve plus isolated points."""
    check_assignment(a, d)
    two_two = sum(e.points for e in d.edges if a.marking[e.i] == TWO and a.marking[e.j] == TWO)
    return 2 * len(a.stars) + two_two + sum(a.free_dots)


def _graph(d: CurveDiagram) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(d.size))
    for e in d.edges:
        g.add_edge(e.i, e.j, w=(e.intersection, e.points))
    return g


def up_to_symmetry(d: CurveDiagram, assignments: Sequence[FixedLocusAssignment]) -> list[FixedLocusAssignment]:
    """One representative per orbit of the diagram's automorphism group."""
    g = _graph(d)
    autos = list(GraphMatcher(g, g, edge_match=lambda x, y: x["w"] == y["w"]).isomorphisms_iter())
    reps, seen = [], set()
    for a in assignments:
        key = frozenset(a.stars)
        if key in seen:
            continue
        reps.append(a)
        seen.update(frozenset(p[v] for v in key) for p in autos)
    return reps


@dataclass(frozen=True)
class Lemma43Report:
    name: str
    fiber_euler: int
    assignments: int
    values: tuple[int, ...]
    passed: bool


def lemma43_verify(name: str) -> Lemma43Report:
    """Every legal assignment has fixed-locus Euler number e(F).

    Pictured types must have at least one assignment; D~5 must have none.
    """
    d = catalog.get(name)
    e = euler_number(d)
    assigns = valid_assignments(d)
    values = tuple(sorted({euler_of(a, d) for a in assigns}))
    if name == "D~5":
        ok = not assigns
    else:
        ok = bool(assigns) and values == (e,)
    return Lemma43Report(name, e, len(assigns), values, ok)


@dataclass(frozen=True)
class Picture:
    """One pictured fixed locus: its row, printed value, graph and stars."""

    row: int
    type: str
    printed: int
    diagram: CurveDiagram
    stars: tuple[str, ...]


def _cycle(n: int, stars: Sequence[int] = ()) -> tuple[CurveDiagram, tuple[str, ...]]:
    labels = [f"v{k}" for k in range(n)]
    if n == 2:
        d = CurveDiagram.from_labels(labels, [("v0", "v1", 2)])
    else:
        d = CurveDiagram.from_labels(labels, [(labels[k], labels[(k + 1) % n]) for k in range(n)])
    return d, tuple(labels[k] for k in stars)


def _tree(labels: str, edges: str, stars: str) -> tuple[CurveDiagram, tuple[str, ...]]:
    labs = labels.split()
    es = [tuple(x.split("-")) for x in edges.split()]
    return CurveDiagram.from_labels(labs, es), tuple(stars.split())


def _pictures() -> list[Picture]:
    rows = [
        # path p0..p7 with b on p2
        ("E~8", 10, _tree("p0 p1 p2 p3 p4 p5 p6 p7 b",
                          "p0-p1 p1-p2 p2-p3 p3-p4 p4-p5 p5-p6 p6-p7 p2-b", "p0 p2 p4 p6")),
        # path q0..q6 with a on q1 and b on q5
        ("D~8", 10, _tree("q0 q1 q2 q3 q4 q5 q6 a b",
                          "q0-q1 q1-q2 q2-q3 q3-q4 q4-q5 q5-q6 q1-a q5-b", "q1 q3 q5")),
        # 9-cycle v0..v6 v7 b drawn as v0-...-v6-v7-b-v0
        ("A~8", 9, _cycle(9, (1, 3, 5, 8))),
        ("A~8", 9, _cycle(9)),
        ("E~7", 9, _tree("w0 w1 w2 w3 w4 w5 w6 c",
                         "w0-w1 w1-w2 w2-w3 w3-w4 w4-w5 w5-w6 w3-c", "w1 w3 w5")),
        ("D~7", 9, _tree("y0 y1 y2 y3 y4 y5 a b",
                         "y0-y1 y1-y2 y2-y3 y3-y4 y4-y5 y1-a y4-b", "y1 y4")),
        ("A~7", 8, _cycle(8, (1, 3, 5, 7))),
        ("A~7", 8, _cycle(8)),
        ("E~6", 8, _tree("u0 u1 u2 u3 u4 d1 d2",
                         "u0-u1 u1-u2 u2-u3 u3-u4 u2-d1 d1-d2", "u0 u2 u4 d2")),
        ("D~6", 8, _tree("s0 s1 s2 s3 s4 a b",
                         "s0-s1 s1-s2 s2-s3 s3-s4 s1-a s3-b", "s1 s3")),
        ("A~6", 7, _cycle(7, (1, 4, 6))),
        ("A~6", 7, _cycle(7)),
        ("A~5", 6, _cycle(6, (1, 3, 5))),
        ("A~5", 6, _cycle(6)),
        ("D~4", 6, _tree("c l1 l2 l3 l4", "c-l1 c-l2 c-l3 c-l4", "c")),
        ("A~4", 5, _cycle(5, (1, 4))),
        ("A~4", 5, _cycle(5)),
        ("A~3", 4, _cycle(4, (1, 3))),
        ("A~3", 4, _cycle(4)),
        ("A~2", 3, _cycle(3, (0,))),
        ("A~2", 3, _cycle(3)),
        ("A~1", 2, _cycle(2, (0,))),
        ("A~1", 2, _cycle(2)),
    ]
    out, row, prev = [], 0, None
    for t, printed, (d, stars) in rows:
        # the last four types show both pictures in a single row
        if not (t == prev and t in ("A~4", "A~3", "A~2", "A~1")):
            row += 1
        prev = t
        out.append(Picture(row, t, printed, d, stars))
    return out


PICTURES: tuple[Picture, ...] = tuple(_pictures())


def picture_assignment(p: Picture) -> FixedLocusAssignment | None:
    return assignment_for(p.diagram, [p.diagram.index(s) for s in p.stars])


@dataclass(frozen=True)
class SpecialFiberKind:
    kind: str
    fixed_points: int
    euler: int


SPECIAL_KINDS = {
    "IV": SpecialFiberKind("IV", 4, 4),
    "III": SpecialFiberKind("III", 3, 3),
    "II": SpecialFiberKind("II", 2, 2),
    "I1": SpecialFiberKind("I1", 1, 1),
}


def special_fixed_points(kind: str) -> int:
    try:
        return SPECIAL_KINDS[kind].fixed_points
    except KeyError:
        raise ValueError(f"unknown special fiber kind {kind!r}") from None


SMOOTH = "smooth"
SMOOTH_FIXED_POINTS = 4
LEFSCHETZ_CT = 12


def fixed_euler_values(name: str) -> tuple[int, ...]:
    """Possible Euler numbers of the fixed locus on one invariant fiber."""
    if name == SMOOTH:
        return (SMOOTH_FIXED_POINTS,)
    if name in SPECIAL_KINDS:
        return (SPECIAL_KINDS[name].euler,)
    d = catalog.get(name)
    return tuple(sorted({euler_of(a, d) for a in valid_assignments(d)}))


@dataclass(frozen=True)
class BudgetReport:
    fibers: tuple[str, str]
    totals: tuple[int, ...]
    achievable: bool


def ct_budget_check(first: str, second: str, target: int = LEFSCHETZ_CT) -> BudgetReport:
    """Can the fixed loci on two invariant fibers have total Euler number ``target``?"""
    totals = tuple(sorted({a + b for a in fixed_euler_values(first) for b in fixed_euler_values(second)}))
    return BudgetReport((first, second), totals, target in totals)


@dataclass(frozen=True)
class Candidate:
    first: str
    second: str
    total: int
    killed_by: str | None
    detail: str


MAX_FIBER_RANK = 9
SINGULAR_EULER_SUM = 12


def _cycle_name(c: int) -> str:
    return "I1" if c == 1 else f"A~{c - 1}"


def theorem44_search(max_cycle: int = 12) -> list[Candidate]:
    """Pairs of invariant half-fibers (smooth or a c-cycle) with fixed Euler total 12.

    Both cycles: their components span c1 + c2 - 1 dimensions of the fiber
    lattice, which has rank at most 9. Smooth + cycle: the quotient fibration
    acquires a D~4 fiber and a fiber of the cycle's type; their Euler numbers
    must fit in 12. A candidate with ``killed_by`` None would survive.
    """
    kinds = [SMOOTH] + list(range(1, max_cycle + 1))

    def euler(k) -> int:
        if k == SMOOTH:
            return SMOOTH_FIXED_POINTS
        return k if k == 1 else fixed_euler_values(_cycle_name(k))[0]

    out = []
    for i, a in enumerate(kinds):
        for b in kinds[i:]:
            total = euler(a) + euler(b)
            if total != LEFSCHETZ_CT:
                continue
            name_a = SMOOTH if a == SMOOTH else f"cycle-{a}"
            name_b = SMOOTH if b == SMOOTH else f"cycle-{b}"
            if a != SMOOTH and b != SMOOTH:
                rank = a + b - 1
                killed = "rank-bound" if rank > MAX_FIBER_RANK else None
                op = ">" if killed else "<="
                detail = f"components contribute rank {rank} {op} {MAX_FIBER_RANK}"
            else:
                c = b if a == SMOOTH else a
                budget = euler_number(catalog.get("D~4")) + euler_number(catalog.get(_cycle_name(c)))
                killed = "quotient-euler" if budget != SINGULAR_EULER_SUM else None
                op = "!=" if killed else "=="
                detail = f"e(D~4) + e({_cycle_name(c)}) = {budget} {op} {SINGULAR_EULER_SUM}"
            out.append(Candidate(name_a, name_b, total, killed, detail))
    return out
