from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dilationk.bimodule import (FilterBank, OmegaMatrix, alpha, build_filterbank,
                                check_orthonormal, degree_one_exponent_matrix, inner,
                                kernel_representatives, module_action, omega, reconstruct,
                                transfer)
from dilationk.exterior import compound_c
from dilationk.laurent import LaurentPolynomial as LP
from dilationk.linalg import IntegerMatrix, SingularMatrixError, determinant
from dilationk.stability import NotADilationError

from conftest import EXAMPLES, dilations

A2 = IntegerMatrix([[2]])
z = LP.monomial((1,))
one1 = LP.constant(1)


def mono(*e, c=1):
    return LP.monomial(e, c)


def test_laurent_arithmetic():
    f = mono(1, 0) + mono(0, -1, c=Fraction(1, 2))
    assert f * f == mono(2, 0) + mono(1, -1) + mono(0, -2, c=Fraction(1, 4))
    assert f - f == LP.zero(2) and not (f - f)
    assert f.conj() == mono(-1, 0) + mono(0, 1, c=Fraction(1, 2))
    assert 3 * LP.constant(2) == 3
    assert str(mono(3)) == "z1^3"
    assert str(mono(0, 1) - mono(0, 0)) == "-1 + z2"
    with pytest.raises(ValueError):
        mono(1) + mono(1, 0)


def test_alpha_examples():
    assert alpha(A2, z) == mono(2)
    assert alpha(A2, LP.constant(1, 7)) == 7
    a = EXAMPLES["neg2"]
    assert alpha(a, mono(1, 0)) == mono(0, 1)
    assert alpha(a, mono(0, 1)) == mono(2, 0)
    with pytest.raises(ValueError):
        alpha(a, z)


def test_transfer_examples():
    assert transfer(A2, one1) == 1
    assert transfer(A2, mono(2)) == z
    assert transfer(A2, z) == LP.zero(1)
    with pytest.raises(SingularMatrixError):
        transfer([[1, 0], [0, 0]], mono(0, 0))


def test_inner_and_action_examples():
    assert inner(A2, one1, one1) == 1
    assert inner(A2, z, z) == 1
    assert inner(A2, one1, z) == LP.zero(1)
    assert module_action(A2, z, one1) == z
    assert module_action(A2, z, z) == mono(3)
    assert module_action(A2, one1, z) == alpha(A2, z)


monos = lambda d: st.builds(
    lambda e, c: LP.monomial(tuple(e), c),
    st.lists(st.integers(-5, 5), min_size=d, max_size=d),
    st.sampled_from([1, -1, 2, Fraction(1, 3)]))


def polys(d, max_terms=3):
    return st.lists(monos(d), min_size=1, max_size=max_terms).map(lambda ms: sum(ms[1:], ms[0]))


@given(st.data())
def test_exel_axioms(data):
    a = data.draw(dilations(1, 3, -3, 3))
    d = a.rows
    f, g = data.draw(polys(d)), data.draw(polys(d))
    assert transfer(a, alpha(a, f) * g) == f * transfer(a, g)
    assert alpha(a, f * g) == alpha(a, f) * alpha(a, g)
    assert transfer(a, alpha(a, f)) == f
    # positivity of <f, f> on the constant term
    assert inner(a, f, f).constant_term() >= 0


@pytest.mark.parametrize("a, gammas", [
    ([[2]], [(0,), (1,)]),
    (EXAMPLES["neg2"], [(0, 0), (1, 0)]),
    ([[5]], [(0,), (1,), (2,), (3,), (4,)]),
])
def test_filterbank_examples(a, gammas):
    fb = build_filterbank(a)
    assert list(fb.gammas) == gammas
    assert check_orthonormal(fb).ok


def test_filterbank_rejects_non_dilation():
    with pytest.raises(NotADilationError):
        build_filterbank([[1, 0], [0, 2]])


def test_orthonormal_failures():
    bad = FilterBank(A2, 2, ((0,), (2,)))
    rep = check_orthonormal(bad)
    assert not rep.ok and rep.pair == (0, 1)
    dup = FilterBank(IntegerMatrix([[3]]), 3, ((0,), (1,), (1,)))
    rep = check_orthonormal(dup)
    assert not rep.ok and rep.pair == (1, 2)
    short = FilterBank(IntegerMatrix([[3]]), 3, ((0,), (1,)))
    assert not check_orthonormal(short).ok


@given(dilations(1, 3, -4, 4))
def test_every_filterbank_is_orthonormal(a):
    fb = build_filterbank(a)
    rep = check_orthonormal(fb)
    assert rep.ok, rep.detail
    assert len(fb.gammas) == abs(determinant(a))
    assert rep.numeric_max_error is not None and rep.numeric_max_error < 1e-9


def test_kernel_representatives():
    assert kernel_representatives(A2) == [(0,), (Fraction(1, 2),)]
    assert kernel_representatives(EXAMPLES["neg2"]) == [(0, 0), (Fraction(1, 2), 0)]
    for a in EXAMPLES.values():
        pts = kernel_representatives(a)
        assert len(pts) == abs(determinant(a))
        for p in pts:
            img = IntegerMatrix(a).apply(p)
            assert all(Fraction(x).denominator == 1 for x in img)


def test_reconstruct_examples():
    fb = build_filterbank(A2)
    assert reconstruct(fb, one1) == 1
    assert reconstruct(fb, mono(3)) == mono(3)


@given(st.data())
def test_reconstruction_property(data):
    a = data.draw(dilations(1, 3, -3, 3))
    f = data.draw(polys(a.rows, max_terms=8))
    assert reconstruct(build_filterbank(a), f) == f


def test_omega_examples():
    fb = build_filterbank(A2)
    assert omega(fb, z) == OmegaMatrix([[LP.zero(1), z], [one1, LP.zero(1)]])
    assert omega(fb, one1) == OmegaMatrix.scalar(one1, 2)
    fb = build_filterbank(EXAMPLES["det5"])
    f = mono(1, -2)
    assert omega(fb, alpha(fb.a, f)) == OmegaMatrix.scalar(f, 5)


@given(st.data())
def test_omega_is_a_homomorphism(data):
    a = data.draw(dilations(1, 2, -3, 3).filter(lambda m: abs(determinant(m)) <= 10))
    fb = build_filterbank(a)
    f, g = data.draw(polys(a.rows)), data.draw(polys(a.rows))
    assert omega(fb, f * g) == omega(fb, f) @ omega(fb, g)
    assert omega(fb, f + g).entries == [[x + y for x, y in zip(r, s)]
                                        for r, s in zip(omega(fb, f).entries,
                                                        omega(fb, g).entries)]
    assert omega(fb, alpha(a, f)) == OmegaMatrix.scalar(f, fb.n)


def test_degree_one_bridge():
    for a in EXAMPLES.values():
        assert degree_one_exponent_matrix(a) == compound_c(a, 1) == IntegerMatrix(a).T
