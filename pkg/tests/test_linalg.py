import numpy as np
import pytest
import sympy
from hypothesis import given, settings
import hypothesis.strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from enriques_check.linalg import (
    as_matrix, det_exact, hermite_rows, identity, kernel_basis, matmul, matvec,
    signature, smith_normal_form, solve_exact, transpose,
)


def matrices(max_n=5, lo=-6, hi=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.integers(1, max_n).flatmap(
            lambda k: st.lists(st.lists(st.integers(lo, hi), min_size=k, max_size=k), min_size=n, max_size=n)
        )
    )


def square(max_n=5, lo=-6, hi=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)
    )


@st.composite
def symmetric(draw, max_n=6, lo=-5, hi=5):
    n = draw(st.integers(1, max_n))
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = draw(st.integers(lo, hi))
    return m


def test_det_small_cases():
    assert det_exact([[-2]]) == -2
    assert det_exact([[1, 2], [3, 4]]) == -2
    assert det_exact([]) == 1
    assert det_exact([[0, 1], [1, 0]]) == -1
    with pytest.raises(ValueError):
        det_exact([[1, 2]])


def test_isotropic_gram_determinant():
    # 10 x 10 with 0 on the diagonal and 1 elsewhere
    g = [[int(i != j) for j in range(10)] for i in range(10)]
    assert det_exact(g) == -9


@given(square())
def test_det_matches_sympy(m):
    assert det_exact(m) == sympy.Matrix(m).det()


def test_snf_examples():
    assert smith_normal_form([[1, 2], [3, 4]]).diagonal == (1, 2)
    assert smith_normal_form([[2, 0], [0, 3]]).diagonal == (1, 6)
    assert smith_normal_form([[0, 0], [0, 0]]).diagonal == (0, 0)


@given(matrices())
def test_snf_transforms(m):
    res = smith_normal_form(m)
    rows, cols = len(m), len(m[0])
    assert matmul(matmul(res.left, as_matrix(m)), res.right) == res.diagonal_matrix(rows, cols)
    assert abs(det_exact(res.left)) == 1
    assert abs(det_exact(res.right)) == 1
    nz = [d for d in res.diagonal if d]
    assert all(d > 0 for d in nz)
    assert all(nz[k + 1] % nz[k] == 0 for k in range(len(nz) - 1))
    assert all(d == 0 for d in res.diagonal[len(nz):])


@settings(max_examples=60)
@given(matrices(max_n=4))
def test_snf_matches_sympy(m):
    ours = [d for d in smith_normal_form(m).diagonal if d]
    s = sympy_snf(sympy.Matrix(m), domain=sympy.ZZ)
    theirs = sorted(abs(int(s[i, i])) for i in range(min(s.shape)) if s[i, i] != 0)
    assert ours == theirs


def test_signature_examples():
    assert signature([[-2, 2], [2, -2]]) == (0, 1, 1)
    assert signature([[0, 1], [1, 0]]) == (1, 1, 0)
    assert signature([[0, 0], [0, 0]]) == (0, 0, 2)


@given(symmetric())
def test_signature_matches_eigenvalues(m):
    ev = np.linalg.eigvalsh(np.array(m, dtype=float))
    tol = 1e-8
    assert signature(m) == (int((ev > tol).sum()), int((ev < -tol).sum()), int((abs(ev) <= tol).sum()))


@st.composite
def unimodular(draw, n):
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            u[i][j] = draw(st.integers(-2, 2))
    low = [[int(i == j) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            low[i][j] = draw(st.integers(-2, 2))
    return matmul(as_matrix(u), as_matrix(low))


@given(symmetric(max_n=5).flatmap(lambda m: st.tuples(st.just(m), unimodular(len(m)))))
def test_congruence_invariance(pair):
    m, u = pair
    conj = matmul(matmul(transpose(u), as_matrix(m)), u)
    assert signature(conj) == signature(m)
    assert det_exact(conj) == det_exact(m)
    assert sorted(smith_normal_form(conj).diagonal) == sorted(smith_normal_form(m).diagonal)


@given(symmetric(max_n=5))
def test_snf_det_signature_agree(m):
    diag = smith_normal_form(m).diagonal
    prod = 1
    for d in diag:
        prod *= d
    assert abs(det_exact(m)) == prod
    assert signature(m)[2] == sum(1 for d in diag if d == 0)


def test_kernel_of_affine_a1():
    assert kernel_basis([[-2, 2], [2, -2]]) == [(1, 1)]


@given(matrices(max_n=4))
def test_kernel_basis_spans_null_space(m):
    ker = kernel_basis(m)
    cols = len(m[0])
    assert all(not any(matvec(as_matrix(m), v)) for v in ker)
    assert len(ker) == cols - sympy.Matrix(m).rank()
    # a basis of the integer kernel, not just of a finite-index sublattice
    if ker:
        assert set(smith_normal_form(ker).diagonal) == {1}


def test_hermite_rows_reduces():
    assert hermite_rows([[2, 4], [1, 3]]) == [(1, 1), (0, 2)]


@given(square(max_n=4))
def test_solve_exact(m):
    if det_exact(m) == 0:
        with pytest.raises(ValueError):
            solve_exact(m, [1] * len(m))
        return
    b = list(range(1, len(m) + 1))
    x = solve_exact(m, b)
    assert [sum(a * xi for a, xi in zip(row, x)) for row in m] == b


def test_identity_is_neutral():
    m = as_matrix([[1, 2], [3, 4]])
    assert matmul(identity(2), m) == m
