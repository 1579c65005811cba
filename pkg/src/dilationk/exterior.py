"""Compound and adjugate-compound matrices on the exterior powers of Z^d.

Subsets are 1-based, matching the way bases e_J of the n-th exterior power
are usually written; the basis of grade n is the lexicographic list of
n-subsets of {1..d}.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .linalg import (IntegerMatrix, SingularMatrixError, as_integer_matrix, determinant,
                     rational_inverse)
from .stability import require_dilation


@dataclass(frozen=True, order=True)
class SubsetIndex:
    d: int
    elements: tuple[int, ...]

    def __post_init__(self):
        el = self.elements
        if any(b <= a for a, b in zip(el, el[1:])):
            raise ValueError(f"subset {el} is not strictly increasing")
        if el and (el[0] < 1 or el[-1] > self.d):
            raise ValueError(f"subset {el} not within 1..{self.d}")

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def rank(self) -> int:
        """Position in the lexicographic enumeration of n-subsets."""
        return _rank_table(self.d, self.n)[self.elements]

    def complement(self) -> "SubsetIndex":
        s = set(self.elements)
        return SubsetIndex(self.d, tuple(i for i in range(1, self.d + 1) if i not in s))

    @property
    def zero_based(self) -> tuple[int, ...]:
        return tuple(i - 1 for i in self.elements)

    def __str__(self):
        return "{" + ",".join(map(str, self.elements)) + "}"


@lru_cache(maxsize=None)
def _subsets(d: int, n: int) -> tuple[SubsetIndex, ...]:
    return tuple(SubsetIndex(d, c) for c in itertools.combinations(range(1, d + 1), n))


@lru_cache(maxsize=None)
def _rank_table(d: int, n: int) -> dict:
    return {s.elements: i for i, s in enumerate(_subsets(d, n))}


def enumerate_subsets(d: int, n: int) -> list[SubsetIndex]:
    if not 0 <= n <= d:
        raise ValueError(f"subset size {n} out of range 0..{d}")
    return list(_subsets(d, n))


def permutation_sign(seq) -> int:
    """Sign of a sequence of distinct integers, by inversion count."""
    inv = sum(1 for i, j in itertools.combinations(range(len(seq)), 2) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


def tau_sign(k: SubsetIndex) -> int:
    """Sign of the permutation listing K ascending, then its complement ascending."""
    return permutation_sign(k.elements + k.complement().elements)


def tau_pair_sign(k: SubsetIndex, j: SubsetIndex) -> int:
    """(-1)^deg(tau_K tau_J)."""
    return tau_sign(k) * tau_sign(j)


def product_sign(k: SubsetIndex, j: SubsetIndex) -> int:
    """prod_i (-1)^(j_i + k_i); agrees with tau_pair_sign for |K| = |J|."""
    return -1 if (sum(k.elements) + sum(j.elements)) % 2 else 1


def minor(a, k: SubsetIndex, j: SubsetIndex) -> int:
    """det of the submatrix with rows K and columns J (1 for empty sets)."""
    a = as_integer_matrix(a)
    if k.n != j.n:
        raise ValueError(f"minor needs |K| = |J|, got {k.n} and {j.n}")
    if (k.elements and k.elements[-1] > a.rows) or (j.elements and j.elements[-1] > a.cols):
        raise ValueError("subset index outside the matrix")
    return determinant(a.submatrix(k.zero_based, j.zero_based))


def _grade(a: IntegerMatrix, n: int) -> int:
    if not a.is_square:
        raise ValueError("square matrix required")
    d = a.rows
    if not 0 <= n <= d:
        raise ValueError(f"grade {n} out of range 0..{d}")
    return d


def compound_c(a, n: int) -> IntegerMatrix:
    """Matrix of the n-th exterior power of A^T: (J, K) entry det A_{K,J}."""
    a = as_integer_matrix(a)
    d = _grade(a, n)
    basis = _subsets(d, n)
    return IntegerMatrix([[minor(a, kk, jj) for kk in basis] for jj in basis], len(basis))


def _signed_complement_minors(a: IntegerMatrix, d: int, n: int) -> list[list[int]]:
    basis = _subsets(d, n)
    comps = [s.complement() for s in basis]
    signs = [tau_sign(s) for s in basis]
    return [[signs[p] * signs[q] * minor(a, comps[p], comps[q]) for q in range(len(basis))]
            for p in range(len(basis))]


def adjugate_compound_b(a, n: int, certify: bool = True) -> IntegerMatrix:
    """B_n with B_n C_n = |det A| 1, in the lexicographic basis of grade n.

    (K, L) entry (-1)^deg(tau_K tau_L) det A_{K',L'}, negated when det A < 0.
    Grade 0 gives [|det A|] and grade d gives [sign det A].  With
    ``certify=False`` any nonsingular matrix is accepted.
    """
    a = as_integer_matrix(a)
    d = _grade(a, n)
    if certify:
        det = require_dilation(a).det
    else:
        det = determinant(a)
        if det == 0:
            raise ValueError("adjugate compound needs det A != 0")
    rows = _signed_complement_minors(a, d, n)
    if det < 0:
        rows = [[-x for x in r] for r in rows]
    return IntegerMatrix(rows, comb(d, n))


def laplace_identity_diag(a, n: int, j: SubsetIndex) -> int:
    """sum_K (-1)^deg(tau_K tau_J) det A_{K,J} det A_{K',J'}; equals det A."""
    a = as_integer_matrix(a)
    d = _grade(a, n)
    if not 1 <= n <= d - 1:
        raise ValueError(f"grade {n} out of range 1..{d - 1}")
    jc = j.complement()
    return sum(tau_pair_sign(k, j) * minor(a, k, j) * minor(a, k.complement(), jc)
               for k in _subsets(d, n))


def laplace_identity_offdiag(a, n: int, j: SubsetIndex, l: SubsetIndex) -> int:
    """sum_K (-1)^deg(tau_K tau_J) det A_{K,J} det A_{K',L'}; equals 0 for J != L."""
    a = as_integer_matrix(a)
    d = _grade(a, n)
    if not 1 <= n <= d - 1:
        raise ValueError(f"grade {n} out of range 1..{d - 1}")
    if j == l:
        raise ValueError("J = L: use laplace_identity_diag")
    lc = l.complement()
    return sum(tau_pair_sign(k, j) * minor(a, k, j) * minor(a, k.complement(), lc)
               for k in _subsets(d, n))


def b1_closed_form(a) -> IntegerMatrix:
    """|det A| (A^T)^-1, which is B_1 in the basis e_1..e_d."""
    a = as_integer_matrix(a)
    det = determinant(a)
    if det == 0:
        raise SingularMatrixError("matrix is singular")
    return (rational_inverse(a.transpose()) * abs(det)).to_integer()


def reverse_basis(m: IntegerMatrix) -> IntegerMatrix:
    """Conjugate by the order-reversing permutation.

    In grade d-1, listing f_k = e_{{1..d} minus {k}} for k = 1..d is the
    lexicographic basis read backwards, so this converts between the two.
    """
    r = m.rows
    return IntegerMatrix([[m[r - 1 - i, r - 1 - j] for j in range(r)] for i in range(r)], r)


def bd1_closed_form(a, basis: str = "lex") -> IntegerMatrix:
    """B_{d-1} from the entries of A.

    In the complement basis f_k the (k, l) entry is (-1)^(k+l) a_kl, negated
    when det A < 0.  ``basis="lex"`` (default) returns it relabelled to the
    lexicographic basis used by :func:`adjugate_compound_b`; ``basis="f"``
    returns the f_k form.
    """
    a = as_integer_matrix(a)
    det = determinant(a)
    if det == 0:
        raise SingularMatrixError("matrix is singular")
    d = a.rows
    s = -1 if det < 0 else 1
    f_form = IntegerMatrix([[s * (-1) ** (k + l) * a[k, l] for l in range(d)]
                            for k in range(d)], d)
    if basis == "f":
        return f_form
    if basis != "lex":
        raise ValueError(f"unknown basis {basis!r}")
    return reverse_basis(f_form)


@dataclass(frozen=True)
class GradedFamily:
    a: IntegerMatrix
    det: int
    c: dict
    b: dict

    @property
    def d(self) -> int:
        return self.a.rows


def graded_family(a, certify: bool = True) -> GradedFamily:
    a = as_integer_matrix(a)
    d = a.rows
    det = require_dilation(a).det if certify else determinant(a)
    c = {n: compound_c(a, n) for n in range(d + 1)}
    b = {n: adjugate_compound_b(a, n, certify=False) for n in range(d + 1)}
    return GradedFamily(a, det, c, b)
