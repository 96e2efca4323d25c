"""Configurations of (-2)-curves as weighted graphs.

A vertex is a curve (self-intersection -2 unless stated), an edge carries
the intersection number and the number of distinct intersection points.
Classification is spectral (exact signature of the Gram matrix) and is
cross-checked against the graph shape.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .linalg import IntMatrix, det_exact, kernel_basis, signature

FINITE, AFFINE, INDEFINITE = "finite", "affine", "indefinite"


class ClassificationMismatch(RuntimeError):
    """Graph shape and spectral verdict disagree."""


@dataclass(frozen=True)
class Edge:
    i: int
    j: int
    intersection: int = 1
    points: int | None = None

    def __post_init__(self) -> None:
        if self.i == self.j:
            raise ValueError("self-loops are not allowed")
        if self.i > self.j:
            a, b = self.j, self.i
            object.__setattr__(self, "i", a)
            object.__setattr__(self, "j", b)
        if self.intersection < 1:
            raise ValueError("intersection number must be >= 1")
        if self.points is None:
            object.__setattr__(self, "points", self.intersection)
        if not 1 <= self.points <= self.intersection:
            raise ValueError("distinct points must lie in [1, intersection]")


@dataclass(frozen=True)
class CurveDiagram:
    labels: tuple[str, ...]
    edges: tuple[Edge, ...] = ()
    self_intersections: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not self.self_intersections:
            object.__setattr__(self, "self_intersections", (-2,) * len(self.labels))
        if len(self.self_intersections) != len(self.labels):
            raise ValueError("one self-intersection per vertex")
        seen = set()
        for e in self.edges:
            if e.j >= len(self.labels):
                raise ValueError(f"edge {e} refers to a missing vertex")
            if (e.i, e.j) in seen:
                raise ValueError(f"duplicate edge {e.i}-{e.j}")
            seen.add((e.i, e.j))

    @classmethod
    def from_labels(
        cls,
        labels: Sequence[str],
        edges: Iterable[tuple],
        self_intersections: Sequence[int] = (),
    ) -> "CurveDiagram":
        """Build from label-named edges ``(a, b)``, ``(a, b, m)`` or ``(a, b, m, points)``."""
        index = {lab: k for k, lab in enumerate(labels)}
        es = []
        for e in edges:
            a, b, *rest = e
            es.append(Edge(index[a], index[b], *rest))
        return cls(tuple(labels), tuple(sorted(es, key=lambda e: (e.i, e.j))), tuple(self_intersections))

    @property
    def size(self) -> int:
        return len(self.labels)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in self.labels]
        for e in self.edges:
            nb[e.i].add(e.j)
            nb[e.j].add(e.i)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def gram(self) -> IntMatrix:
        return gram_of(self)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def induced(self, subset: Iterable[int]) -> "CurveDiagram":
        keep = sorted(set(subset))
        pos = {v: k for k, v in enumerate(keep)}
        es = tuple(
            Edge(pos[e.i], pos[e.j], e.intersection, e.points)
            for e in self.edges
            if e.i in pos and e.j in pos
        )
        return CurveDiagram(
            tuple(self.labels[v] for v in keep), es, tuple(self.self_intersections[v] for v in keep)
        )

    def is_connected(self, subset: Iterable[int] | None = None) -> bool:
        verts = set(range(self.size)) if subset is None else set(subset)
        if not verts:
            return False
        start = next(iter(verts))
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in self.adjacency[v] & verts:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == verts

    def components(self) -> list[tuple[int, ...]]:
        left = set(range(self.size))
        out = []
        while left:
            start = min(left)
            comp = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for w in self.adjacency[v]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            out.append(tuple(sorted(comp)))
            left -= comp
        return out

    def adjacent(self, a: Iterable[int], b: Iterable[int]) -> bool:
        bs = set(b)
        return any(self.adjacency[v] & bs for v in a)


def gram_of(d: CurveDiagram) -> IntMatrix:
    n = d.size
    g = [[0] * n for _ in range(n)]
    for k, s in enumerate(d.self_intersections):
        g[k][k] = s
    for e in d.edges:
        g[e.i][e.j] = g[e.j][e.i] = e.intersection
    return tuple(tuple(r) for r in g)


@dataclass(frozen=True)
class DiagramClass:
    kind: str
    type: str | None = None

    @property
    def rank(self) -> int:
        """Rank of the root type: n for A_n / X~_n."""
        if self.type is None:
            raise ValueError("untyped diagram has no Dynkin rank")
        return int(self.type.lstrip("ADE~"))

    def __str__(self) -> str:
        return f"{self.kind} {self.type}" if self.type else self.kind


def _arm_lengths(d: CurveDiagram, center: int) -> list[int]:
    arms = []
    for start in d.adjacency[center]:
        length, prev, cur = 1, center, start
        while True:
            nxt = d.adjacency[cur] - {prev}
            if len(nxt) != 1:
                if len(nxt) > 1:
                    return []
                break
            prev, cur = cur, next(iter(nxt))
            length += 1
        arms.append(length)
    return sorted(arms)


def shape_type(d: CurveDiagram) -> str | None:
    """Dynkin label read off the graph shape, or None if it is not ADE.

    Only connected diagrams of (-2)-vertices are recognised.
    """
    n = d.size
    if n == 0 or any(s != -2 for s in d.self_intersections) or not d.is_connected():
        return None
    if any(e.intersection > 1 for e in d.edges):
        if n == 2 and d.edges[0].intersection == 2:
            return "A~1"
        return None
    degrees = [len(a) for a in d.adjacency]
    m = len(d.edges)
    if m == n:
        return f"A~{n - 1}" if all(x == 2 for x in degrees) else None
    if m != n - 1:
        return None
    branch = [v for v in range(n) if degrees[v] >= 3]
    if not branch:
        return f"A{n}"
    if len(branch) == 1:
        v = branch[0]
        arms = _arm_lengths(d, v)
        if degrees[v] == 4:
            return "D~4" if arms == [1, 1, 1, 1] else None
        if degrees[v] != 3 or not arms:
            return None
        table = {
            (1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8",
            (2, 2, 2): "E~6", (1, 3, 3): "E~7", (1, 2, 5): "E~8",
        }
        if arms[0] == arms[1] == 1:
            return f"D{n}"
        return table.get(tuple(arms))
    if len(branch) == 2 and all(degrees[v] == 3 for v in branch):
        leaves = [v for v in range(n) if degrees[v] == 1]
        if len(leaves) == 4 and all(len(d.adjacency[v] & set(branch)) == 1 for v in leaves):
            per = [sum(1 for w in leaves if b in d.adjacency[w]) for b in branch]
            if per == [2, 2]:
                return f"D~{n - 1}"
    return None


def spectral_kind(d: CurveDiagram) -> str:
    n_plus, _, n_zero = signature(d.gram)
    if n_plus:
        return INDEFINITE
    if n_zero == 0:
        return FINITE
    if n_zero == 1:
        (v,) = kernel_basis(d.gram)
        if all(x > 0 for x in v):
            return AFFINE
    return INDEFINITE


def classify(d: CurveDiagram) -> DiagramClass:
    """Finite / affine / indefinite verdict for a connected diagram.

    Raises ValueError for disconnected input (see ``classify_components``)
    and ClassificationMismatch if the shape contradicts the signature.
    """
    if not d.is_connected():
        raise ValueError("classify needs a connected diagram; use classify_components")
    kind = spectral_kind(d)
    shape = shape_type(d)
    if shape is not None:
        expected = AFFINE if "~" in shape else FINITE
        if expected != kind:
            raise ClassificationMismatch(f"shape {shape} but spectrum says {kind}")
    elif kind != INDEFINITE and all(s == -2 for s in d.self_intersections):
        raise ClassificationMismatch(f"spectrum says {kind} but no ADE shape matches")
    return DiagramClass(kind, shape if kind != INDEFINITE else None)


def classify_components(d: CurveDiagram) -> list[tuple[tuple[int, ...], DiagramClass]]:
    return [(comp, classify(d.induced(comp))) for comp in d.components()]


def multiplicities(d: CurveDiagram) -> tuple[int, ...]:
    """Fiber multiplicities: the primitive positive generator of the kernel."""
    if classify(d).kind != AFFINE:
        raise ValueError("multiplicities are defined for affine diagrams only")
    (v,) = kernel_basis(d.gram)
    return v if v[0] > 0 else tuple(-x for x in v)


def euler_number(d: CurveDiagram) -> int:
    """Topological Euler number of a connected configuration of rational curves."""
    if not d.is_connected():
        raise ValueError("euler_number needs a connected diagram")
    return 2 * d.size - sum(e.points for e in d.edges)


def enumerate_affine_subdiagrams(d: CurveDiagram) -> list[tuple[tuple[int, ...], str]]:
    """All vertex subsets inducing a connected affine diagram, sorted by vertex tuple.

    Connected subsets are grown one neighbour at a time. A proper subset of an
    affine or indefinite principal block can only be finite, so growth
    continues from finite subsets only; this visits every connected finite
    or affine subset exactly as an exhaustive search would.
    """
    found: dict[tuple[int, ...], str] = {}
    frontier = {(v,) for v in range(d.size)}
    seen: set[tuple[int, ...]] = set(frontier)
    while frontier:
        grow: set[tuple[int, ...]] = set()
        for sub in frontier:
            c = classify(d.induced(sub))
            if c.kind == AFFINE:
                found[sub] = c.type
            elif c.kind == FINITE:
                nbrs = set().union(*(d.adjacency[v] for v in sub)) - set(sub)
                for w in nbrs:
                    nxt = tuple(sorted(sub + (w,)))
                    if nxt not in seen:
                        seen.add(nxt)
                        grow.add(nxt)
        frontier = grow
    return sorted(found.items())


@dataclass(frozen=True)
class FibrationConfig:
    components: tuple[tuple[tuple[int, ...], str], ...]

    @property
    def total_rank(self) -> int:
        return sum(DiagramClass(AFFINE, t).rank for _, t in self.components)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for comp, _ in self.components for v in comp)

    @property
    def types(self) -> tuple[str, ...]:
        return tuple(t for _, t in self.components)

    def describe(self, d: CurveDiagram) -> str:
        return " + ".join(
            f"{t}[{','.join(d.labels[v] for v in comp)}]" for comp, t in self.components
        )


def fibration_configs(d: CurveDiagram, rank: int = 8) -> list[FibrationConfig]:
    """Disjoint, mutually non-adjacent unions of connected affine subdiagrams of total rank ``rank``."""
    affine = enumerate_affine_subdiagrams(d)
    ranks = [DiagramClass(AFFINE, t).rank for _, t in affine]
    out: list[FibrationConfig] = []

    def extend(start: int, chosen: list[int], used: set[int], total: int) -> None:
        if total == rank:
            out.append(FibrationConfig(tuple(affine[k] for k in chosen)))
            return
        for k in range(start, len(affine)):
            verts, _ = affine[k]
            if total + ranks[k] > rank or used & set(verts) or d.adjacent(verts, used):
                continue
            extend(k + 1, chosen + [k], used | set(verts), total + ranks[k])

    extend(0, [], set(), 0)
    return out


@dataclass(frozen=True)
class VinbergResult:
    passed: bool
    orphans: tuple[tuple[tuple[int, ...], str], ...] = field(default=())

    @property
    def witness(self) -> tuple[tuple[int, ...], str] | None:
        return self.orphans[0] if self.orphans else None


def vinberg_check(d: CurveDiagram, rank: int = 8) -> VinbergResult:
    """Every connected affine subdiagram must sit inside a component of some
    affine configuration of total rank ``rank``."""
    configs = fibration_configs(d, rank)
    comps = [set(comp) for cfg in configs for comp, _ in cfg.components]
    orphans = tuple(
        (verts, t) for verts, t in enumerate_affine_subdiagrams(d)
        if not any(set(verts) <= c for c in comps)
    )
    return VinbergResult(not orphans, orphans)


def dynkin_diagram(name: str) -> CurveDiagram:
    """Standard finite (``A5``, ``D4``, ``E8``) or affine (``A~3``, ``D~6``, ``E~8``) diagram.

    Affine cycles are labelled around the cycle; D and E types list the
    branch vertex's arms in order.
    """
    affine = "~" in name
    letter, n = name[0], int(name.lstrip("ADE~"))
    size = n + 1 if affine else n
    labels = [f"{letter}{k}" for k in range(size)]
    if letter == "A":
        if affine and n == 1:
            return CurveDiagram.from_labels(labels, [(labels[0], labels[1], 2)])
        edges = [(labels[k], labels[k + 1]) for k in range(size - 1)]
        if affine:
            edges.append((labels[-1], labels[0]))
        return CurveDiagram.from_labels(labels, edges)
    if letter == "D":
        if affine and n == 4:
            return CurveDiagram.from_labels(labels, [(labels[0], x) for x in labels[1:]])
        # chain 0..k with two leaves on the last chain vertex (and on the first if affine)
        chain = size - (4 if affine else 2)
        edges = [(labels[k], labels[k + 1]) for k in range(chain - 1)]
        edges += [(labels[chain - 1], labels[chain]), (labels[chain - 1], labels[chain + 1])]
        if affine:
            edges += [(labels[0], labels[chain + 2]), (labels[0], labels[chain + 3])]
        return CurveDiagram.from_labels(labels, edges)
    if letter == "E":
        arms = {
            (False, 6): (1, 2, 2), (False, 7): (1, 2, 3), (False, 8): (1, 2, 4),
            (True, 6): (2, 2, 2), (True, 7): (1, 3, 3), (True, 8): (1, 2, 5),
        }[(affine, n)]
        edges = []
        nxt = 1
        for length in arms:
            prev = labels[0]
            for _ in range(length):
                edges.append((prev, labels[nxt]))
                prev = labels[nxt]
                nxt += 1
        return CurveDiagram.from_labels(labels, edges)
    raise ValueError(f"unknown Dynkin type {name!r}")


def gram_determinant(d: CurveDiagram) -> int:
    return det_exact(d.gram)


def brute_force_affine_subdiagrams(d: CurveDiagram) -> list[tuple[tuple[int, ...], str]]:
    """Exhaustive reference: test every connected vertex subset."""
    out = []
    for k in range(2, d.size + 1):
        for sub in combinations(range(d.size), k):
            if d.is_connected(sub):
                sd = d.induced(sub)
                if spectral_kind(sd) == AFFINE:
                    out.append((sub, shape_type(sd)))
    return sorted(out)
