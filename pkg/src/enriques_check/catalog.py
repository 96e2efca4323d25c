"""Named curve configurations.

Fiber types use ``A~n`` / ``D~n`` / ``E~n``. The remaining entries are the
extra-special crystallographic bases, the configuration ``d1`` with its two
extensions, and the two rejected Coxeter diagrams.
"""
from __future__ import annotations

import re

from .diagram import CurveDiagram, dynkin_diagram

_R = [f"R{k}" for k in range(11)]


def _path(*labels: str) -> list[tuple[str, str]]:
    return list(zip(labels, labels[1:]))


def e8_special() -> CurveDiagram:
    labels = _R[1:10] + ["C"]
    edges = _path("R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "C") + [("R4", "R1")]
    return CurveDiagram.from_labels(labels, edges)


def d8_special() -> CurveDiagram:
    labels = _R[1:10] + ["C"]
    edges = _path("R3", "R4", "R5", "R6", "R7", "R8", "R9", "C") + [("R4", "R1"), ("R8", "R2")]
    return CurveDiagram.from_labels(labels, edges)


def e7a1_special(variant: int) -> CurveDiagram:
    labels = _R[1:11] + ["C"]
    edges = _path("R2", "R3", "R4", "R5", "R6", "R7", "R8", "C", "R9")
    edges += [("R5", "R1"), ("R9", "R10", 2)]
    if variant == 1:
        edges.append(("C", "R10"))
    elif variant != 2:
        raise ValueError("variant is 1 or 2")
    return CurveDiagram.from_labels(labels, edges)


def _d1_edges() -> list[tuple]:
    # outer 8-cycle R4 R3 R2 R0 R8 R7 R6 R5, with R1 on R4 and R9 on R8
    return _path("R4", "R3", "R2", "R0", "R8", "R7", "R6", "R5", "R4") + [("R4", "R1"), ("R8", "R9")]


def d1() -> CurveDiagram:
    return CurveDiagram.from_labels(_R[:10], _d1_edges())


def d2() -> CurveDiagram:
    labels = _R[:10] + ["R1'", "R9'"]
    edges = _d1_edges() + [("R1", "R1'", 2), ("R9", "R9'", 2), ("R1'", "R9'", 2)]
    return CurveDiagram.from_labels(labels, edges)


def d3() -> CurveDiagram:
    """Provisional: the double edges are read off an ambiguous picture."""
    labels = _R[:10] + ["R1'", "R9'"]
    edges = _d1_edges() + [("R1", "R1'", 2), ("R9", "R9'", 2)]
    return CurveDiagram.from_labels(labels, edges)


def remark_reject_1() -> CurveDiagram:
    labels = ["a0", "a1", "a2", "a3", "a4", "a5", "a6", "u1", "d1", "u5", "d5"]
    edges = _path(*labels[:7]) + [("a1", "u1"), ("a1", "d1"), ("a5", "u5"), ("a5", "d5")]
    return CurveDiagram.from_labels(labels, edges)


def remark_reject_2() -> CurveDiagram:
    labels = ["b0", "b1", "b2", "b3", "b4", "b5", "b6", "c1", "c2", "t1", "t2"]
    edges = _path(*labels[:7]) + _path("b2", "c1", "c2") + _path("b6", "t1", "t2", "b6")
    return CurveDiagram.from_labels(labels, edges)


CATALOG = {
    "e8-special": e8_special,
    "d8-special": d8_special,
    "e7a1-special-1": lambda: e7a1_special(1),
    "e7a1-special-2": lambda: e7a1_special(2),
    "d1": d1,
    "d2": d2,
    "d3": d3,
    "remark-reject-1": remark_reject_1,
    "remark-reject-2": remark_reject_2,
}

PROVISIONAL = frozenset({"d3"})
EXTRA_SPECIAL = ("e8-special", "d8-special", "e7a1-special-1", "e7a1-special-2")

# fiber types pictured with a fixed locus, in picture order
FIBER_TYPES = (
    "E~8", "D~8", "A~8", "E~7", "D~7", "A~7", "E~6", "D~6",
    "A~6", "A~5", "D~4", "A~4", "A~3", "A~2", "A~1",
)

_FIBER = re.compile(r"^(A~[1-9]\d*|D~([4-9]|[1-9]\d+)|E~[678])$")


def is_fiber_name(name: str) -> bool:
    return bool(_FIBER.match(name))


def names() -> list[str]:
    return list(CATALOG) + ["A~n (n>=1)", "D~n (n>=4)", "E~6", "E~7", "E~8"]


def get(name: str) -> CurveDiagram:
    if name in CATALOG:
        return CATALOG[name]()
    if is_fiber_name(name):
        return dynkin_diagram(name)
    raise KeyError(f"unknown catalog entry {name!r}")
