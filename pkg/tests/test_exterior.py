from math import comb

import pytest
from hypothesis import given, strategies as st

from dilationk.exterior import (SubsetIndex, adjugate_compound_b, b1_closed_form,
                                bd1_closed_form, compound_c, enumerate_subsets, graded_family,
                                laplace_identity_diag, laplace_identity_offdiag, minor,
                                product_sign, reverse_basis, tau_pair_sign, tau_sign)
from dilationk.linalg import IntegerMatrix, determinant
from dilationk.stability import NotADilationError
from dilationk.verify import permutation_determinant

from conftest import EXAMPLES, dilations, int_matrices


def S(d, *el):
    return SubsetIndex(d, tuple(el))


def test_enumerate_examples():
    assert [str(s) for s in enumerate_subsets(3, 2)] == ["{1,2}", "{1,3}", "{2,3}"]
    assert enumerate_subsets(2, 0) == [S(2)]
    four = enumerate_subsets(4, 2)
    assert len(four) == 6 and four[0] == S(4, 1, 2) and four[-1] == S(4, 3, 4)
    assert [s.rank for s in four] == list(range(6))
    with pytest.raises(ValueError):
        enumerate_subsets(2, 3)


def test_subset_validation():
    with pytest.raises(ValueError):
        S(3, 2, 1)
    with pytest.raises(ValueError):
        S(3, 4)
    assert S(4, 1, 3).complement() == S(4, 2, 4)
    assert S(4, 1, 3).zero_based == (0, 2)


@pytest.mark.parametrize("k, sign", [
    (S(3, 1, 2, 3), 1), (S(2, 1), 1), (S(2, 2), -1), (S(3, 2, 3), 1), (S(4), 1),
])
def test_tau_sign_examples(k, sign):
    assert tau_sign(k) == sign


@pytest.mark.parametrize("d", range(1, 7))
def test_sign_formula_exhaustive(d):
    for n in range(d + 1):
        basis = enumerate_subsets(d, n)
        for k in basis:
            for j in basis:
                assert tau_pair_sign(k, j) == product_sign(k, j)


def test_minor_examples():
    a = EXAMPLES["det5"]
    assert minor(a, S(2, 1), S(2, 2)) == 1
    assert minor(a, S(2, 1, 2), S(2, 1, 2)) == 5
    assert minor(a, S(2), S(2)) == 1
    with pytest.raises(ValueError):
        minor(a, S(2, 1), S(2, 1, 2))


def test_compound_examples():
    assert compound_c([[1, 1], [-1, 1]], 1) == [[1, -1], [1, 1]]
    a = IntegerMatrix([[2, -1, 0], [1, 3, 2], [0, 1, -1]])
    assert compound_c(a, 1) == a.T
    assert compound_c(a, 3) == [[determinant(a)]]
    assert compound_c(a, 0) == [[1]]


def test_adjugate_compound_examples():
    # entries in the lexicographic basis; the f_k basis form is the reversed one
    b = adjugate_compound_b(EXAMPLES["det5"], 1)
    assert b == [[2, 1], [-1, 2]]
    assert reverse_basis(b) == [[2, -1], [1, 2]]
    b = adjugate_compound_b(EXAMPLES["neg2"], 1)
    assert b == [[0, 2], [1, 0]]
    assert reverse_basis(b) == [[0, 1], [2, 0]]
    for a in EXAMPLES.values():
        assert adjugate_compound_b(a, 0) == [[abs(determinant(a))]]
        assert adjugate_compound_b(a, 2) == [[1 if determinant(a) > 0 else -1]]


def test_adjugate_compound_requires_dilation():
    with pytest.raises(NotADilationError):
        adjugate_compound_b([[1, 0], [0, 2]], 1)
    assert adjugate_compound_b([[1, 0], [0, 2]], 1, certify=False) == [[2, 0], [0, 1]]


@given(dilations(1, 4, -4, 4))
def test_b_times_c_is_scalar(a):
    fam = graded_family(a)
    for n in range(a.rows + 1):
        target = IntegerMatrix.scalar(abs(fam.det), comb(a.rows, n))
        assert fam.b[n] @ fam.c[n] == target
        assert fam.c[n] @ fam.b[n] == target


def test_laplace_examples():
    assert laplace_identity_diag(EXAMPLES["det5"], 1, S(2, 1)) == 5
    assert laplace_identity_diag(EXAMPLES["neg5"], 1, S(2, 2)) == -5
    assert laplace_identity_offdiag(EXAMPLES["det5"], 1, S(2, 1), S(2, 2)) == 0
    eye = IntegerMatrix.identity(4)
    for n in (1, 2, 3):
        for j in enumerate_subsets(4, n):
            assert laplace_identity_diag(eye, n, j) == 1
    assert laplace_identity_offdiag(IntegerMatrix.identity(2), 1, S(2, 1), S(2, 2)) == 0
    with pytest.raises(ValueError):
        laplace_identity_diag(eye, 0, S(4))
    with pytest.raises(ValueError):
        laplace_identity_offdiag(eye, 1, S(4, 1), S(4, 1))


def doctored(a, j, l):
    """A with the columns J' replaced, in order, by the columns L' of A."""
    cols = [list(a.col(c)) for c in range(a.cols)]
    for dst, src in zip(j.complement().zero_based, l.complement().zero_based):
        cols[dst] = list(a.col(src))
    return [[cols[c][r] for c in range(a.cols)] for r in range(a.rows)]


@given(int_matrices(2, 4, -6, 6), st.data())
def test_laplace_equals_doctored_determinant(a, data):
    d = a.rows
    n = data.draw(st.integers(1, d - 1))
    basis = enumerate_subsets(d, n)
    j = data.draw(st.sampled_from(basis))
    l = data.draw(st.sampled_from(basis))
    expected = permutation_determinant(doctored(a, j, l))
    if j == l:
        assert laplace_identity_diag(a, n, j) == expected == determinant(a)
    else:
        assert laplace_identity_offdiag(a, n, j, l) == expected == 0


def test_closed_form_examples():
    assert b1_closed_form([[1, 1], [-1, 1]]) == [[1, 1], [-1, 1]]
    assert bd1_closed_form(EXAMPLES["det5"], basis="f") == [[2, -1], [1, 2]]
    assert adjugate_compound_b([[-2]], 0) == [[2]]
    assert adjugate_compound_b([[-2]], 1) == [[-1]]


@given(dilations(2, 4, -4, 4))
def test_closed_forms_match(a):
    assert b1_closed_form(a) == adjugate_compound_b(a, 1)
    assert bd1_closed_form(a) == adjugate_compound_b(a, a.rows - 1)


@given(int_matrices(1, 4, -4, 4), int_matrices(1, 4, -4, 4))
def test_compound_functoriality(a, b):
    if a.rows != b.rows:
        return
    for n in range(a.rows + 1):
        assert compound_c(a @ b, n) == compound_c(b, n) @ compound_c(a, n)


@given(int_matrices(1, 4, -4, 4))
def test_sylvester_franke(a):
    d, det = a.rows, determinant(a)
    for n in range(1, d + 1):
        assert determinant(compound_c(a, n)) == det ** comb(d - 1, n - 1)


@given(int_matrices(1, 5, -6, 6), st.data())
def test_minor_matches_permutation_sum(a, data):
    d = a.rows
    n = data.draw(st.integers(0, min(d, 4)))
    k = data.draw(st.sampled_from(enumerate_subsets(d, n)))
    j = data.draw(st.sampled_from(enumerate_subsets(d, n)))
    sub = a.submatrix(k.zero_based, j.zero_based).tolist()
    assert minor(a, k, j) == (permutation_determinant(sub) if n else 1)
