"""Exact integer linear algebra.

Matrices are tuples of row tuples holding Python ints, so nothing ever
overflows. Rational work (congruence diagonalisation) goes through
``fractions.Fraction``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

IntMatrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if m and any(len(row) != len(m[0]) for row in m):
        raise ValueError("ragged matrix")
    return m


def shape(m: IntMatrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m: IntMatrix) -> IntMatrix:
    return tuple(zip(*m)) if m else ()


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(m: IntMatrix, v: Sequence[int]) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def is_symmetric(m: IntMatrix) -> bool:
    n, k = shape(m)
    return n == k and all(m[i][j] == m[j][i] for i in range(n) for j in range(i))


def det_exact(m: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    a = [list(row) for row in as_matrix(m)]
    n, k = shape(as_matrix(m))
    if n != k:
        raise ValueError(f"determinant of a non-square {n}x{k} matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for p in range(n - 1):
        if a[p][p] == 0:
            swap = next((r for r in range(p + 1, n) if a[r][p] != 0), None)
            if swap is None:
                return 0
            a[p], a[swap] = a[swap], a[p]
            sign = -sign
        for i in range(p + 1, n):
            for j in range(p + 1, n):
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) // prev
        prev = a[p][p]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SnfResult:
    """``left @ m @ right == diag(diagonal)`` with unimodular transforms."""

    diagonal: tuple[int, ...]
    left: IntMatrix
    right: IntMatrix

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    def diagonal_matrix(self, rows: int, cols: int) -> IntMatrix:
        return tuple(
            tuple(self.diagonal[i] if i == j and i < len(self.diagonal) else 0 for j in range(cols))
            for i in range(rows)
        )


def smith_normal_form(m: Sequence[Sequence[int]]) -> SnfResult:
    """Smith normal form with transforms.

    Pivot choice: entry of smallest absolute value in the active block,
    ties broken by lowest row index and then lowest column index.
    """
    mat = as_matrix(m)
    rows, cols = shape(mat)
    a = [list(r) for r in mat]
    left = [list(r) for r in identity(rows)]
    right = [list(r) for r in identity(cols)]

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i: int, j: int) -> None:
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in right:
            r[i], r[j] = r[j], r[i]

    def add_row(src: int, dst: int, q: int) -> None:
        # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        left[dst] = [x + q * y for x, y in zip(left[dst], left[src])]

    def add_col(src: int, dst: int, q: int) -> None:
        for r in a:
            r[dst] += q * r[src]
        for r in right:
            r[dst] += q * r[src]

    t = 0
    while t < min(rows, cols):
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        done = False
        while not done:
            done = True
            p = a[t][t]
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // p))
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // p))
            # leftover remainders are smaller than the pivot: move one in and redo
            rem = [(abs(a[i][t]), i, None) for i in range(t + 1, rows) if a[i][t]]
            rem += [(abs(a[t][j]), None, j) for j in range(t + 1, cols) if a[t][j]]
            if rem:
                _, i, j = min(rem, key=lambda x: (x[0], x[1] if x[1] is not None else rows, x[2] or 0))
                if i is not None:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                done = False
                continue
            bad = next(
                ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is not None:
                add_row(bad[0], t, 1)
                done = False
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]
        t += 1
    diagonal = tuple(a[i][i] for i in range(min(rows, cols)))
    return SnfResult(diagonal, as_matrix(left), as_matrix(right))


def invariant_factors(m: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return smith_normal_form(m).diagonal


def congruence_diagonal(m: Sequence[Sequence[int]]) -> list[Fraction]:
    """Diagonal of a rational congruence diagonalisation of a symmetric matrix.

    Pivot: first nonzero diagonal entry of the active block. If the block has
    zero diagonal but a nonzero entry a[i][j], row/column j is added to i,
    which makes a[i][i] = 2 a[i][j] nonzero.
    """
    mat = as_matrix(m)
    if not is_symmetric(mat):
        raise ValueError("congruence diagonalisation needs a symmetric matrix")
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    out: list[Fraction] = []
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][i] != 0), None)
        if piv is None:
            off = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0), None)
            if off is None:
                out.extend(Fraction(0) for _ in range(k, n))
                return out
            i, j = off
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            piv = i
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            for r in a:
                r[k], r[piv] = r[piv], r[k]
        p = a[k][k]
        for i in range(k + 1, n):
            if a[i][k] != 0:
                f = a[i][k] / p
                for c in range(k, n):
                    a[i][c] -= f * a[k][c]
                for r in range(k, n):
                    a[r][i] -= f * a[r][k]
        out.append(p)
    return out


def signature(m: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """(n_plus, n_minus, n_zero) of a symmetric integer matrix, exactly."""
    diag = congruence_diagonal(m)
    return (
        sum(1 for d in diag if d > 0),
        sum(1 for d in diag if d < 0),
        sum(1 for d in diag if d == 0),
    )


def primitive(v: Sequence[int]) -> Vector:
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v) if g else tuple(v)


def hermite_rows(vectors: Sequence[Sequence[int]]) -> list[Vector]:
    """Row-style Hermite normal form of the lattice spanned by ``vectors``.

    Pivots are positive and the entries above each pivot are reduced into
    ``[0, pivot)``. Zero rows are dropped.
    """
    a = [list(v) for v in vectors]
    if not a:
        return []
    cols = len(a[0])
    r = 0
    for c in range(cols):
        while True:
            nz = [i for i in range(r, len(a)) if a[i][c] != 0]
            if not nz:
                break
            i = min(nz, key=lambda k: (abs(a[k][c]), k))
            a[r], a[i] = a[i], a[r]
            rest = [k for k in range(r + 1, len(a)) if a[k][c] != 0]
            if not rest:
                break
            for k in rest:
                q = a[k][c] // a[r][c]
                a[k] = [x - q * y for x, y in zip(a[k], a[r])]
        if r < len(a) and a[r][c] != 0:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            for k in range(r):
                q = a[k][c] // a[r][c]
                a[k] = [x - q * y for x, y in zip(a[k], a[r])]
            r += 1
            if r == len(a):
                break
    return [tuple(row) for row in a[:r]]


def kernel_basis(m: Sequence[Sequence[int]]) -> list[Vector]:
    """Z-basis of the integer null space {v : m v = 0}, in Hermite form.

    A single kernel vector is returned primitive with its first nonzero entry
    positive.
    """
    mat = as_matrix(m)
    _, cols = shape(mat)
    snf = smith_normal_form(mat)
    rank = snf.rank
    basis = [tuple(snf.right[i][j] for i in range(cols)) for j in range(rank, cols)]
    return [primitive(v) for v in hermite_rows(basis)]


def solve_exact(m: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction]:
    """Unique solution of m x = b for square nonsingular m, over Q."""
    mat = as_matrix(m)
    n, k = shape(mat)
    if n != k:
        raise ValueError("solve_exact needs a square matrix")
    a = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(mat, b)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[c], a[piv] = a[piv], a[c]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c] / a[c][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [a[r][n] / a[r][r] for r in range(n)]
