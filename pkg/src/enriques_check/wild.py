"""Local Lefschetz numbers of wild involutions with an isolated fixed point.

Ideals are monomial ideals of k[[u, v]], stored as their minimal exponent
pairs. ``(a, b)`` stands for u^a v^b.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable


def _minimalize(gens: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    gs = set()
    for a, b in gens:
        if a < 0 or b < 0:
            raise ValueError(f"negative exponent in {(a, b)}")
        gs.add((int(a), int(b)))
    return frozenset(
        g for g in gs if not any(h != g and h[0] <= g[0] and h[1] <= g[1] for h in gs)
    )


@dataclass(frozen=True)
class MonomialIdeal2:
    generators: frozenset[tuple[int, int]]

    def __init__(self, generators: Iterable[tuple[int, int]]):
        object.__setattr__(self, "generators", _minimalize(generators))

    def contains(self, a: int, b: int) -> bool:
        return any(g[0] <= a and g[1] <= b for g in self.generators)

    def sorted_generators(self) -> list[tuple[int, int]]:
        return sorted(self.generators, reverse=True)

    def __str__(self) -> str:
        def mono(a, b):
            parts = [f"u^{a}" if a > 1 else "u" * a, f"v^{b}" if b > 1 else "v" * b]
            return "".join(parts) or "1"
        return "(" + ", ".join(mono(a, b) for a, b in self.sorted_generators()) + ")"


UNIT = MonomialIdeal2([(0, 0)])


def _bounds(i: MonomialIdeal2) -> tuple[int, int]:
    pu = [a for a, b in i.generators if b == 0]
    pv = [b for a, b in i.generators if a == 0]
    if not pu or not pv:
        raise ValueError(f"{i} has infinite colength")
    return min(pu), min(pv)


def colength(i: MonomialIdeal2) -> int:
    """Number of monomials not in ``i`` (the staircase under its generators)."""
    mu, mv = _bounds(i)
    return sum(1 for a in range(mu) for b in range(mv) if not i.contains(a, b))


def product(i: MonomialIdeal2, j: MonomialIdeal2) -> MonomialIdeal2:
    return MonomialIdeal2((g[0] + h[0], g[1] + h[1]) for g in i.generators for h in j.generators)


@dataclass(frozen=True)
class WildReport:
    colength_J: int
    dim_J_mod_J2: int
    omega_term: int
    lefschetz: int

    @property
    def decomposition(self) -> tuple[int, int, int]:
        return self.colength_J, self.dim_J_mod_J2, self.omega_term


def lef_point(j: MonomialIdeal2) -> WildReport:
    """Contribution of one isolated fixed point with fixed-point ideal ``j``.

    chi(O/J) + chi(J/J^2) - chi(O/J (x) Omega), where Omega is free of rank 2.
    """
    c1 = colength(j)
    c2 = colength(product(j, j))
    rep = WildReport(c1, c2 - c1, 2 * c1, c1 + (c2 - c1) - 2 * c1)
    assert rep.lefschetz == c2 - 2 * c1
    return rep


@dataclass(frozen=True)
class ChiQuotient:
    value: Fraction

    @property
    def integral(self) -> bool:
        return self.value.denominator == 1


def chi_quotient(chi_z: int) -> ChiQuotient:
    """chi(O_Y) from 2 chi(O_Y) = chi(O_S) + chi(O_Z) with chi(O_S) = 1."""
    return ChiQuotient(Fraction(1 + chi_z, 2))
