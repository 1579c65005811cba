import math

import pytest
from hypothesis import given, strategies as st

from dilationk.linalg import IntegerMatrix, determinant, rational_inverse
from dilationk.smith import (coset_representatives, hermite_basis, hermite_box_representatives,
                             reduce_mod_lattice, smith_normal_form, column_lattice_basis)

from conftest import int_matrices


@pytest.mark.parametrize("m, factors", [
    ([[3, 0], [0, 0]], (3, 0)),
    ([[2, 4], [6, 8]], (2, 4)),
    ([[1, -1], [-2, 1]], (1, 1)),
    ([[0, 0], [0, 0]], (0, 0)),
    ([[6]], (6,)),
    ([[-4]], (4,)),
    ([[2, 0], [0, 3]], (1, 6)),
])
def test_smith_examples(m, factors):
    dec = smith_normal_form(m)
    assert dec.factors == factors
    assert dec.u @ IntegerMatrix(m) @ dec.v == dec.s


def _minor_gcds(m, k):
    """gcd of all k x k minors: the k-th determinantal divisor."""
    import itertools
    rows, cols = m.shape
    g = 0
    for r in itertools.combinations(range(rows), k):
        for c in itertools.combinations(range(cols), k):
            g = math.gcd(g, determinant(m.submatrix(r, c)))
    return g


rect = st.tuples(st.integers(1, 4), st.integers(1, 4)).flatmap(
    lambda s: st.lists(st.lists(st.integers(-6, 6), min_size=s[1], max_size=s[1]),
                       min_size=s[0], max_size=s[0])).map(IntegerMatrix)


@given(rect)
def test_smith_properties(m):
    dec = smith_normal_form(m)
    assert dec.u @ m @ dec.v == dec.s
    assert abs(determinant(dec.u)) == 1 and abs(determinant(dec.v)) == 1
    f = dec.factors
    assert len(f) == min(m.shape)
    assert all(x >= 0 for x in f)
    for a, b in zip(f, f[1:]):
        assert (b % a == 0) if a else b == 0
    # determinantal divisors: d_k = f_1 ... f_k
    prod = 1
    for k in range(1, len(f) + 1):
        prod *= f[k - 1]
        assert _minor_gcds(m, k) == prod


def test_hermite_basis_shape():
    basis = hermite_basis([[2, 4], [6, 8]])
    assert basis == [[2, 0], [0, 4]]
    assert reduce_mod_lattice((5, -3), basis) == (1, 1)


@pytest.mark.parametrize("m, reps", [
    ([[2]], [(0,), (1,)]),
    ([[0, 2], [1, 0]], [(0, 0), (1, 0)]),
    ([[3]], [(0,), (1,), (2,)]),
    ([[-3]], [(0,), (1,), (2,)]),
])
def test_coset_examples(m, reps):
    assert coset_representatives(m) == reps


def _coset_key(m, det, x):
    # x = y mod m Z^d  iff  adj(m)(x - y) = 0 mod det
    adj = (rational_inverse(m) * det).to_integer()
    return tuple(v % det for v in adj.apply(x))


@given(int_matrices(1, 3, -4, 4))
def test_cosets_are_a_transversal(m):
    det = determinant(m)
    if det == 0:
        return
    reps = coset_representatives(m)
    assert len(reps) == abs(det)
    assert reps[0] == (0,) * m.rows
    assert len({_coset_key(m, det, r) for r in reps}) == abs(det)
    assert _coset_key(m, det, m.col(0)) == _coset_key(m, det, reps[0])
    # both routes give the same canonical list
    assert reps == hermite_box_representatives(m)
    basis = column_lattice_basis(m)
    assert all(reduce_mod_lattice(r, basis) == r for r in reps)


def test_coset_rejects_singular():
    with pytest.raises(ValueError):
        coset_representatives([[1, 2], [2, 4]])
