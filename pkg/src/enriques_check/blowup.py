"""Divisor classes on blow-ups of P^1 x P^1, possibly at infinitely near points.

A class is a f1 + b f2 - sum_p x_p E_p, where E_p is the total transform of
the exceptional curve of the blow-up at p. These are orthogonal with
E_p^2 = -1 and f1.f2 = 1, f_i^2 = 0. In this basis the proper transform of a
curve with multiplicity m_p at p simply has x_p = m_p.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence


@dataclass(frozen=True)
class PointTree:
    """Blown-up points in order; ``parent`` marks a point infinitely near another."""

    points: tuple[tuple[str, str | None], ...] = ()

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for pid, parent in self.points:
            if pid in seen:
                raise ValueError(f"duplicate point {pid!r}")
            if parent is not None and parent not in seen:
                raise ValueError(f"parent {parent!r} of {pid!r} must come first")
            seen.add(pid)

    @classmethod
    def of(cls, *points: str | tuple[str, str | None]) -> "PointTree":
        return cls(tuple((p, None) if isinstance(p, str) else (p[0], p[1]) for p in points))

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(p for p, _ in self.points)

    def index(self, pid: str) -> int:
        try:
            return self.ids.index(pid)
        except ValueError:
            raise KeyError(f"unknown point {pid!r}") from None

    def parent(self, pid: str) -> str | None:
        return self.points[self.index(pid)][1]

    def children(self, pid: str) -> list[str]:
        self.index(pid)
        return [p for p, q in self.points if q == pid]

    def extend(self, pid: str, parent: str | None = None) -> "PointTree":
        return PointTree(self.points + ((pid, parent),))


@dataclass(frozen=True)
class DivClass:
    bidegree: tuple[int, int]
    excess: tuple[int, ...]
    surface: PointTree

    def __post_init__(self) -> None:
        if len(self.excess) != len(self.surface.points):
            raise ValueError("excess length does not match the number of points")

    def __add__(self, other: "DivClass") -> "DivClass":
        _same(self, other)
        return DivClass(
            (self.bidegree[0] + other.bidegree[0], self.bidegree[1] + other.bidegree[1]),
            tuple(x + y for x, y in zip(self.excess, other.excess)),
            self.surface,
        )

    def __rmul__(self, k: int) -> "DivClass":
        return DivClass((k * self.bidegree[0], k * self.bidegree[1]), tuple(k * x for x in self.excess), self.surface)

    def __neg__(self) -> "DivClass":
        return -1 * self

    def __sub__(self, other: "DivClass") -> "DivClass":
        return self + (-other)

    def coords(self) -> tuple[int, ...]:
        return self.bidegree + self.excess


def _same(c: DivClass, d: DivClass) -> None:
    if c.surface != d.surface:
        raise ValueError("classes live on different surfaces")


def pair(c: DivClass, d: DivClass) -> int:
    _same(c, d)
    (a, b), (a2, b2) = c.bidegree, d.bidegree
    return a * b2 + a2 * b - sum(x * y for x, y in zip(c.excess, d.excess))


def pullback(bidegree: tuple[int, int], surface: PointTree) -> DivClass:
    return DivClass(tuple(bidegree), (0,) * len(surface.points), surface)


def total_exceptional(pid: str, surface: PointTree) -> DivClass:
    """E_p, the total transform of the exceptional curve over p."""
    i = surface.index(pid)
    return DivClass((0, 0), tuple(-int(k == i) for k in range(len(surface.points))), surface)


def exceptional_curve(pid: str, surface: PointTree) -> DivClass:
    """Proper transform of the exceptional curve over p: E_p minus its children."""
    c = total_exceptional(pid, surface)
    for ch in surface.children(pid):
        c = c - total_exceptional(ch, surface)
    return c


def proper_transform(bidegree: tuple[int, int], mult: Mapping[str, int], surface: PointTree) -> DivClass:
    """Proper transform of a curve of the given bidegree with multiplicity mult[p] at p.

    A curve cannot be more singular at an infinitely near point than at the
    point it lies over.
    """
    x = [0] * len(surface.points)
    for pid, m in mult.items():
        if m < 0:
            raise ValueError(f"negative multiplicity at {pid!r}")
        x[surface.index(pid)] = m
    for pid, parent in surface.points:
        if parent is not None and x[surface.index(pid)] > x[surface.index(parent)]:
            raise ValueError(f"multiplicity at {pid!r} exceeds that at {parent!r}")
    return DivClass(tuple(bidegree), tuple(x), surface)


def canonical_class(surface: PointTree) -> DivClass:
    """b^*(-2 f1 - 2 f2) + sum E_p."""
    return DivClass((-2, -2), (-1,) * len(surface.points), surface)


def arithmetic_genus(c: DivClass) -> Fraction:
    """From adjunction: 2 p_a - 2 = (K + C).C."""
    k = canonical_class(c.surface)
    return Fraction(pair(k + c, c), 2) + 1


def divisible_by_two(c: DivClass) -> bool:
    return all(x % 2 == 0 for x in c.coords())


def halve(c: DivClass) -> DivClass:
    if not divisible_by_two(c):
        raise ValueError("class is not divisible by 2")
    return DivClass((c.bidegree[0] // 2, c.bidegree[1] // 2), tuple(x // 2 for x in c.excess), c.surface)


def double_cover_selfint(c: DivClass, in_branch: bool) -> int:
    """Self-intersection upstairs: of C~ with pi^*C = 2 C~ if C is in the branch locus, else of pi^*C."""
    s = pair(c, c)
    if in_branch:
        if s % 2:
            raise ValueError(f"branch component with odd self-intersection {s}")
        return s // 2
    return 2 * s


def double_cover_genus(c: DivClass, branch: DivClass, in_branch: bool) -> Fraction:
    """Arithmetic genus of the preimage of C in the double cover branched along ``branch``.

    Uses K_cover = pi^*(K + branch/2) and adjunction upstairs.
    """
    k_half = canonical_class(c.surface) + halve(branch)
    selfint = double_cover_selfint(c, in_branch)
    k_dot = pair(k_half, c) if in_branch else 2 * pair(k_half, c)
    return Fraction(selfint + k_dot, 2) + 1


def genus_and_dim(a: int, b: int) -> tuple[int, int]:
    """Arithmetic genus of a bidegree (a, b) curve and dimension of its linear system."""
    if a < 0 or b < 0:
        raise ValueError("bidegree must be non-negative")
    return (a - 1) * (b - 1), (a + 1) * (b + 1) - 1


def class_from(coords: Sequence[int], surface: PointTree) -> DivClass:
    return DivClass((coords[0], coords[1]), tuple(coords[2:]), surface)
