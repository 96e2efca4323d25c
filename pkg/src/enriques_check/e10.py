"""The odd unimodular lattice Z^{1,10} and the even lattice E10 inside it.

Vectors are coordinate tuples (x0, x1, ..., x10) in the basis e0, ..., e10
with e0^2 = 1 and ei^2 = -1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .lattice import Lattice
from .linalg import Vector, solve_exact

RANK = 11

Z110 = Lattice(tuple(tuple((1 if i == 0 else -1) if i == j else 0 for j in range(RANK)) for i in range(RANK)))


def e(i: int) -> Vector:
    return tuple(int(k == i) for k in range(RANK))


def add(*vs: Sequence[int]) -> Vector:
    return tuple(sum(c) for c in zip(*vs))


def scale(a: int, v: Sequence[int]) -> Vector:
    return tuple(a * x for x in v)


def dot(x: Sequence[int], y: Sequence[int]) -> int:
    """Z^{1,10} pairing."""
    return x[0] * y[0] - sum(a * b for a, b in zip(x[1:], y[1:]))


def k_vector() -> Vector:
    return (-3,) + (1,) * 10


def e10_basis() -> list[Vector]:
    """Root basis of the complement of k10: e0-e1-e2-e3 and e_i - e_{i+1}.

    Its Dynkin diagram is the T-shaped tree with arms 1, 2, 6 around
    e3 - e4 (the E10 diagram).
    """
    alpha0 = add(e(0), scale(-1, e(1)), scale(-1, e(2)), scale(-1, e(3)))
    return [alpha0] + [add(e(i), scale(-1, e(i + 1))) for i in range(1, 10)]


def e10_lattice() -> Lattice:
    return Z110.sublattice(e10_basis())


def e10_coordinates(v: Sequence[int]) -> Vector:
    """Coordinates of v (orthogonal to k10) in ``e10_basis``."""
    basis = e10_basis()
    if dot(v, k_vector()) != 0:
        raise ValueError("vector is not orthogonal to k10")
    sol = solve_exact(e10_lattice().gram, [dot(b, v) for b in basis])
    if any(x.denominator != 1 for x in sol):
        raise ValueError("vector is not in E10")
    return tuple(int(x) for x in sol)


def from_e10_coordinates(c: Sequence[int]) -> Vector:
    return add(*(scale(a, b) for a, b in zip(c, e10_basis())))


def weyl_vector() -> Vector:
    """The vector of E10 pairing to 1 with every vector of ``e10_basis``."""
    sol = solve_exact(e10_lattice().gram, [1] * 10)
    return from_e10_coordinates([int(x) for x in sol])


@dataclass(frozen=True)
class IsotropicSequence:
    vectors: tuple[Vector, ...]
    nef_indices: tuple[int, ...] = ()

    def violations(self, pair=dot) -> list[str]:
        out = []
        for i, f in enumerate(self.vectors):
            if pair(f, f) != 0:
                out.append(f"f{i} has norm {pair(f, f)}")
            for j in range(i):
                if pair(f, self.vectors[j]) != 1:
                    out.append(f"f{j}.f{i} = {pair(f, self.vectors[j])}")
        return out


def isotropic_sequence(vectors: Sequence[Sequence[int]], nef_indices: Sequence[int] = ()) -> IsotropicSequence:
    seq = IsotropicSequence(tuple(tuple(v) for v in vectors), tuple(nef_indices))
    bad = seq.violations()
    if len(seq.vectors) > 10 or bad:
        raise ValueError(f"not an isotropic sequence: {bad or 'more than 10 vectors'}")
    return seq


def standard_isotropic_sequence() -> IsotropicSequence:
    k = k_vector()
    return isotropic_sequence([add(scale(-1, k), e(j)) for j in range(1, 11)])


def reflect(x: Sequence[int], r: Sequence[int], pair=dot) -> Vector:
    """s_r(x) = x + (x.r) r for a (-2)-vector r."""
    if pair(r, r) != -2:
        raise ValueError(f"reflection vector has norm {pair(r, r)}, not -2")
    t = pair(x, r)
    return tuple(a + t * b for a, b in zip(x, r))


def apply_word(word: Sequence[Sequence[int]], x: Sequence[int], pair=dot) -> Vector:
    for r in word:
        x = reflect(x, r, pair)
    return tuple(x)


def chamber_descent(
    v: Sequence[int],
    roots: Sequence[Sequence[int]],
    ample: Sequence[int] | None = None,
    pair=dot,
) -> tuple[Vector, tuple[Vector, ...]]:
    """Reflect ``v`` until it pairs non-negatively with every root.

    Pivot: the root with the most negative pairing, first in list order on
    ties. ``ample`` must have positive norm and pair positively with every
    root that gets used; then its pairing with v drops strictly at each
    step, which bounds the number of steps. Defaults to ``weyl_vector()``.
    """
    h = tuple(ample) if ample is not None else weyl_vector()
    for r in roots:
        if pair(r, r) != -2:
            raise ValueError(f"{tuple(r)} is not a (-2)-vector")
    if pair(h, h) <= 0:
        raise ValueError("reference vector must have positive norm")
    if pair(v, v) < 0 or pair(h, v) <= 0:
        raise ValueError("vector is not in the positive cone")
    x = tuple(v)
    word: list[Vector] = []
    while True:
        pairings = [pair(x, r) for r in roots]
        worst = min(pairings, default=0)
        if worst >= 0:
            return x, tuple(word)
        r = tuple(roots[pairings.index(worst)])
        if pair(h, r) <= 0:
            raise ValueError(f"root {r} is not positive on the reference vector")
        before = pair(h, x)
        x = reflect(x, r, pair)
        assert pair(h, x) < before, "descent did not decrease the reference pairing"
        word.append(r)


@dataclass(frozen=True)
class CanonicalReport:
    ok: bool
    clause: str | None = None
    detail: str = ""
    chain_lengths: tuple[int, ...] = ()

    @property
    def c(self) -> int:
        return len(self.chain_lengths)


def canonical_structure_check(
    seq: IsotropicSequence, roots: Sequence[Sequence[int]], pair=dot
) -> CanonicalReport:
    """Check the canonical form of an isotropic sequence against known (-2)-curves.

    ``seq.nef_indices`` (0-based, starting at 0) mark the nef members. Each
    later member must be the preceding nef member plus a chain
    R_1 + ... + R_s of curves from ``roots`` forming an A_s graph, with the
    nef member meeting R_1 once and the rest of the chain not at all. Pairings
    between different chains are not constrained. Clauses are tested in
    order and the first failure is reported.
    """
    fs = seq.vectors
    ks = tuple(seq.nef_indices)
    rootset = {tuple(r) for r in roots}
    if not ks or ks[0] != 0 or list(ks) != sorted(set(ks)) or ks[-1] >= len(fs):
        return CanonicalReport(False, "indices", f"nef indices {ks} must start at 0 and increase")
    for k in ks:
        for r in roots:
            if pair(fs[k], r) < 0:
                return CanonicalReport(False, "nef", f"f{k}.{tuple(r)} = {pair(fs[k], r)} < 0")
    lengths = []
    bounds = list(ks) + [len(fs)]
    for i, k in enumerate(ks):
        chain = [
            tuple(a - b for a, b in zip(fs[j], fs[j - 1])) for j in range(k + 1, bounds[i + 1])
        ]
        lengths.append(len(chain))
        for m, r in enumerate(chain):
            if r not in rootset:
                return CanonicalReport(False, "chain-curve", f"f{k + m + 1}-f{k + m} = {r} is not a listed curve")
        for m, r in enumerate(chain):
            want = 1 if m == 0 else 0
            if pair(fs[k], r) != want:
                return CanonicalReport(
                    False, "chain-pairing", f"f{k}.R{i},{m + 1} = {pair(fs[k], r)}, expected {want}"
                )
        for a in range(len(chain)):
            for b in range(a + 1, len(chain)):
                want = 1 if b == a + 1 else 0
                if pair(chain[a], chain[b]) != want:
                    return CanonicalReport(False, "chain-graph", f"chain {i} is not of type A{len(chain)}")
    bad = seq.violations(pair)
    if bad:
        return CanonicalReport(False, "isotropic", bad[0])
    return CanonicalReport(True, chain_lengths=tuple(lengths))


# Curves R0..R9 of the configuration d1 in e10_basis coordinates; R1..R9 are
# basis vectors 0..8, R0 is solved for (scripts/embed_d1.py).
D1_IN_E10: tuple[Vector, ...] = (
    (7, 4, 9, 14, 12, 10, 8, 6, 5, 4),
) + tuple(tuple(int(i == j) for j in range(10)) for i in range(9))
