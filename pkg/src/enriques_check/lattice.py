"""Integral quadratic lattices given by Gram matrices.

Root lattices use the negative-definite convention (roots have norm -2).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Sequence

from .diagram import dynkin_diagram
from .linalg import (
    IntMatrix, Vector, as_matrix, det_exact, is_symmetric, matmul, signature,
    smith_normal_form, transpose,
)


@dataclass(frozen=True)
class Lattice:
    gram: IntMatrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "gram", as_matrix(self.gram))
        if not is_symmetric(self.gram):
            raise ValueError("Gram matrix must be square and symmetric")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def pair(self, x: Sequence[int], y: Sequence[int]) -> int:
        return sum(xi * gij * yj for xi, row in zip(x, self.gram) for gij, yj in zip(row, y))

    def norm(self, x: Sequence[int]) -> int:
        return self.pair(x, x)

    def gram_of(self, vecs: Sequence[Sequence[int]]) -> IntMatrix:
        return tuple(tuple(self.pair(x, y) for y in vecs) for x in vecs)

    def sublattice(self, vecs: Sequence[Sequence[int]]) -> "Lattice":
        return Lattice(self.gram_of(vecs))


@dataclass(frozen=True)
class LatticeProfile:
    determinant: int
    even: bool
    unimodular: bool
    signature: tuple[int, int, int]


@dataclass(frozen=True)
class AbelianInvariants:
    """Finite abelian group as its invariant factors d1 | d2 | ... (all > 1)."""

    factors: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        f = self.factors
        if any(x <= 1 for x in f) or any(f[k + 1] % f[k] for k in range(len(f) - 1)):
            raise ValueError(f"not an invariant-factor chain: {f}")

    @property
    def order(self) -> int:
        out = 1
        for x in self.factors:
            out *= x
        return out

    def __str__(self) -> str:
        return " x ".join(f"Z/{x}" for x in self.factors) or "0"


def _torsion(diagonal: Iterable[int]) -> AbelianInvariants:
    return AbelianInvariants(tuple(d for d in diagonal if d > 1))


def profile(lat: Lattice) -> LatticeProfile:
    det = det_exact(lat.gram)
    return LatticeProfile(
        determinant=det,
        even=all(lat.gram[k][k] % 2 == 0 for k in range(lat.rank)),
        unimodular=abs(det) == 1,
        signature=signature(lat.gram),
    )


def sublattice_index(lat: Lattice, vecs: Sequence[Sequence[int]]) -> int:
    """Index of the span of ``rank`` vectors (given in lattice coordinates)."""
    if len(vecs) != lat.rank or any(len(v) != lat.rank for v in vecs):
        raise ValueError(f"need exactly {lat.rank} vectors of length {lat.rank}")
    d = det_exact(vecs)
    if d == 0:
        raise ValueError("vectors are dependent: the span has infinite index")
    return abs(d)


def saturation_quotient(lat: Lattice, vecs: Sequence[Sequence[int]]) -> AbelianInvariants:
    """(primitive closure of span) / span, from the SNF of the coordinate matrix."""
    if any(len(v) != lat.rank for v in vecs):
        raise ValueError("vector length does not match the lattice rank")
    snf = smith_normal_form(vecs)
    if snf.rank != len(vecs):
        raise ValueError("vectors are dependent")
    return _torsion(snf.diagonal)


def discriminant_group(lat: Lattice) -> AbelianInvariants:
    if det_exact(lat.gram) == 0:
        raise ValueError("degenerate lattice has no finite discriminant group")
    return _torsion(smith_normal_form(lat.gram).diagonal)


def disc_index(sub_det: int, ambient_det: int) -> int:
    """Index forced by |disc(sub)| = index^2 |disc(ambient)|; raises if not a square."""
    q, r = divmod(abs(sub_det), abs(ambient_det))
    k = isqrt(q)
    if r or k * k != q:
        raise ValueError(f"{sub_det}/{ambient_det} is not a square")
    return k


def direct_sum(*lats: Lattice) -> Lattice:
    n = sum(l.rank for l in lats)
    g = [[0] * n for _ in range(n)]
    off = 0
    for l in lats:
        for i in range(l.rank):
            for j in range(l.rank):
                g[off + i][off + j] = l.gram[i][j]
        off += l.rank
    return Lattice(g)


def root_lattice(name: str) -> Lattice:
    """``A2``, ``D4``, ``E8`` ... with the Gram of the standard root basis."""
    return Lattice(dynkin_diagram(name).gram)


def hyperbolic_plane() -> Lattice:
    return Lattice(((0, 1), (1, 0)))


def e8() -> Lattice:
    return root_lattice("E8")


def roots(lat: Lattice) -> list[Vector]:
    """All norm -2 vectors of a negative-definite root lattice, by reflection closure
    of the basis vectors (assumes the basis consists of roots)."""
    basis = [tuple(int(i == j) for j in range(lat.rank)) for i in range(lat.rank)]
    if any(lat.norm(b) != -2 for b in basis):
        raise ValueError("basis vectors must be roots")
    found = set(basis) | {tuple(-x for x in b) for b in basis}
    todo = list(found)
    while todo:
        x = todo.pop()
        for b in basis:
            y = tuple(xi + lat.pair(x, b) * bi for xi, bi in zip(x, b))
            if y not in found:
                found.add(y)
                todo.append(y)
    return sorted(found)


def find_root_embedding(target: Sequence[Sequence[int]], lat: Lattice) -> list[Vector] | None:
    """Backtracking search for roots of ``lat`` whose Gram matrix equals ``target``."""
    rts = roots(lat)
    target = as_matrix(target)
    n = len(target)
    chosen: list[Vector] = []

    def search() -> bool:
        k = len(chosen)
        if k == n:
            return True
        for r in rts:
            if all(lat.pair(r, chosen[i]) == target[k][i] for i in range(k)):
                chosen.append(r)
                if search():
                    return True
                chosen.pop()
        return False

    return list(chosen) if search() else None


# Root bases of D4+D4 and E6+A2 inside E8, in E8 root-basis coordinates.
# Produced by find_root_embedding (see scripts/find_glue_embeddings.py).
D4D4_IN_E8: tuple[Vector, ...] = (
    (-6, -3, -4, -2, -5, -4, -3, -2), (0, 0, 0, 0, 0, 0, 0, 1),
    (0, 0, 0, 0, 0, 0, 1, 0), (2, 1, 1, 0, 2, 2, 1, 0),
    (-2, -1, -1, 0, -1, 0, 0, 0), (1, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 1, 0, 0, 0), (0, 0, 1, 0, 0, 0, 0, 0),
)
E6A2_IN_E8: tuple[Vector, ...] = (
    (-6, -3, -4, -2, -5, -4, -3, -2), (0, 0, 0, 0, 0, 0, 0, 1),
    (2, 1, 1, 0, 2, 2, 2, 1), (0, 0, 0, 1, 0, 0, 0, 0),
    (5, 2, 4, 2, 4, 3, 2, 1), (0, 1, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, -1, -1, 0, 0), (0, 0, 0, 0, 0, 1, 0, 0),
)


def coordinate_gram(lat: Lattice, vecs: Sequence[Sequence[int]]) -> IntMatrix:
    """C G C^T for the coordinate matrix C of ``vecs``."""
    c = as_matrix(vecs)
    return matmul(matmul(c, lat.gram), transpose(c))
