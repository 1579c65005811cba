"""The Exel system (C(T^d), alpha_A, L) restricted to trigonometric polynomials.

On characters everything is exact: alpha sends z^p to z^(A^T p), and the
fibre average L keeps z^m (as z^((A^T)^-1 m)) precisely when m lies in
A^T Z^d and kills it otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .laurent import LaurentPolynomial
from .linalg import (IntegerMatrix, SingularMatrixError, as_integer_matrix, determinant,
                     rational_inverse)
from .smith import coset_representatives
from .stability import require_dilation


def _dim_check(a: IntegerMatrix, f: LaurentPolynomial):
    if not a.is_square or a.rows != f.d:
        raise ValueError(f"matrix {a.rows}x{a.cols} does not act on d={f.d} polynomials")


@lru_cache(maxsize=256)
def _transpose_inverse(a: IntegerMatrix):
    if determinant(a) == 0:
        raise SingularMatrixError("transfer operator needs a nonsingular matrix")
    return rational_inverse(a.transpose())


@lru_cache(maxsize=256)
def _transpose_adjugate(a: IntegerMatrix) -> tuple[tuple[tuple[int, ...], ...], int]:
    """(adj(A^T), det A) as plain ints, so (A^T)^-1 m = adj m / det."""
    det = determinant(a)
    inv = _transpose_inverse(a)
    adj = tuple(tuple(int(x * det) for x in inv.row(i)) for i in range(a.rows))
    return adj, det


def alpha(a, f: LaurentPolynomial) -> LaurentPolynomial:
    """f o sigma_A: exponent p goes to A^T p."""
    a = as_integer_matrix(a)
    _dim_check(a, f)
    at = a.transpose()
    return f.map_exponents(at.apply)


def in_transpose_lattice(a, m) -> tuple | None:
    """(A^T)^-1 m if it is integral, else None."""
    adj, det = _transpose_adjugate(as_integer_matrix(a))
    out = []
    for row in adj:
        q, r = divmod(sum(x * y for x, y in zip(row, m)), det)
        if r:
            return None
        out.append(q)
    return tuple(out)


def transfer(a, f: LaurentPolynomial) -> LaurentPolynomial:
    """Fibre-averaging transfer operator L evaluated on characters."""
    a = as_integer_matrix(a)
    _dim_check(a, f)
    out = {}
    for e, c in f.terms.items():
        pre = in_transpose_lattice(a, e)
        if pre is not None:
            out[pre] = c  # (A^T)^-1 is injective, so no collisions
    return LaurentPolynomial._raw(f.d, out)


def inner(a, f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    """<f, g> = L(f* g), conjugate-linear in f."""
    return transfer(a, f.conj() * g)


def module_action(a_mat, m: LaurentPolynomial, a: LaurentPolynomial) -> LaurentPolynomial:
    """Right action m . a = m alpha(a)."""
    return m * alpha(a_mat, a)


@dataclass(frozen=True)
class FilterBank:
    a: IntegerMatrix
    n: int
    gammas: tuple[tuple[int, ...], ...]

    @property
    def d(self) -> int:
        return self.a.rows

    def filters(self) -> list[LaurentPolynomial]:
        return [LaurentPolynomial.monomial(g) for g in self.gammas]

    def as_list(self) -> list[list[int]]:
        return [list(g) for g in self.gammas]


def build_filterbank(a) -> FilterBank:
    """Monomial filter bank {z^gamma}: gamma runs over Z^d / A^T Z^d."""
    a = as_integer_matrix(a)
    cert = require_dilation(a)
    gammas = coset_representatives(a.transpose())
    return FilterBank(a, abs(cert.det), tuple(gammas))


@dataclass(frozen=True)
class OrthonormalityReport:
    ok: bool
    pair: tuple[int, int] | None
    detail: str
    numeric_max_error: float | None

    def as_dict(self) -> dict:
        return {"ok": self.ok, "pair": list(self.pair) if self.pair else None,
                "detail": self.detail, "numeric_max_error": self.numeric_max_error}


def kernel_representatives(a) -> list[tuple[Fraction, ...]]:
    """Points x in [0,1)^d with A x in Z^d: the |det A| elements of ker sigma_A."""
    a = as_integer_matrix(a)
    if determinant(a) == 0:
        raise SingularMatrixError("kernel of sigma_A is infinite for singular A")
    inv = rational_inverse(a)
    pts = {tuple(Fraction(x) % 1 for x in inv.apply(k)) for k in coset_representatives(a)}
    return sorted(pts)


PAIRWISE_LIMIT = 64
NUMERIC_LIMIT = 512


def _numeric_gram(points, gammas):
    x = np.array([[float(v) for v in p] for p in points])
    g = np.array(gammas, dtype=float)
    chars = np.exp(2j * np.pi * (g @ x.T))  # chars[j, s] = gamma_j(zeta_s)
    return (chars.conj() @ chars.T) / len(points)


def check_orthonormal(fb: FilterBank) -> OrthonormalityReport:
    """Exact check that <m_j, m_k> = delta_jk, plus an advisory numeric check.

    The exact verdict uses the fact that <z^g, z^h> is 1 when h - g lies in
    A^T Z^d and 0 otherwise, so the filters are orthonormal iff the points
    (A^T)^-1 gamma are distinct mod Z^d and there are |det A| of them.  For
    small banks every pairing is also evaluated literally with ``inner``.
    The numeric check averages characters over ker sigma_A and never
    changes ``ok``.
    """
    a = fb.a
    adj, det = _transpose_adjugate(a)
    n = abs(det)
    seen = {}
    verdict = None
    for k, g in enumerate(fb.gammas):
        # (A^T)^-1 g mod Z^d, scaled by det to stay in integers
        key = tuple(sum(x * y for x, y in zip(row, g)) % det for row in adj)
        if key in seen:
            j = seen[key]
            verdict = ((j, k), f"<m_{j}, m_{k}> = 1: gamma_{k} - gamma_{j} lies in A^T Z^d")
            break
        seen[key] = k
    if verdict is None and len(fb.gammas) != n:
        verdict = (None, f"{len(fb.gammas)} filters but |det A| = {n}")
    if verdict is None and len(fb.gammas) <= PAIRWISE_LIMIT:
        one, zero = LaurentPolynomial.constant(fb.d), LaurentPolynomial.zero(fb.d)
        filt = fb.filters()
        for j, mj in enumerate(filt):
            for k, mk in enumerate(filt):
                got = inner(a, mj, mk)
                if got != (one if j == k else zero):
                    verdict = ((j, k), f"<m_{j}, m_{k}> = {got}")
                    break
            if verdict:
                break
    numeric = None
    if 0 < len(fb.gammas) <= NUMERIC_LIMIT:
        gram = _numeric_gram(kernel_representatives(a), fb.gammas)
        numeric = float(np.abs(gram - np.eye(len(fb.gammas))).max())
    if verdict is None:
        return OrthonormalityReport(True, None, "orthonormal", numeric)
    return OrthonormalityReport(False, verdict[0], verdict[1], numeric)


def reconstruct(fb: FilterBank, f: LaurentPolynomial) -> LaurentPolynomial:
    """sum_j m_j . <m_j, f>; returns f for an orthonormal basis."""
    total = LaurentPolynomial.zero(f.d)
    for m in fb.filters():
        total = total + module_action(fb.a, m, inner(fb.a, m, f))
    return total


class OmegaMatrix:
    """Square matrix of Laurent polynomials, stored row-wise."""

    def __init__(self, entries):
        self.entries = [list(r) for r in entries]
        self.n = len(self.entries)

    def __getitem__(self, jk):
        j, k = jk
        return self.entries[j][k]

    def __matmul__(self, other: "OmegaMatrix") -> "OmegaMatrix":
        n = self.n
        d = self.entries[0][0].d
        out = [[LaurentPolynomial.zero(d) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for k in range(n):
                x = self.entries[i][k]
                if not x:
                    continue
                for j in range(n):
                    y = other.entries[k][j]
                    if y:
                        out[i][j] = out[i][j] + x * y
        return OmegaMatrix(out)

    def __eq__(self, other):
        if not isinstance(other, OmegaMatrix):
            return NotImplemented
        return self.entries == other.entries

    @classmethod
    def scalar(cls, f: LaurentPolynomial, n: int) -> "OmegaMatrix":
        zero = LaurentPolynomial.zero(f.d)
        return cls([[f if i == j else zero for j in range(n)] for i in range(n)])

    def __repr__(self):
        return "OmegaMatrix([" + ", ".join(
            "[" + ", ".join(str(x) for x in r) + "]" for r in self.entries) + "])"


def omega(fb: FilterBank, f: LaurentPolynomial) -> OmegaMatrix:
    """(<m_j, f m_k>)_{j,k}."""
    filt = fb.filters()
    return OmegaMatrix([[inner(fb.a, mj, f * mk) for mk in filt] for mj in filt])


def degree_one_exponent_matrix(a) -> IntegerMatrix:
    """Column k is the exponent of alpha(z_k): the action of alpha on degree-one monomials."""
    a = as_integer_matrix(a)
    d = a.rows
    cols = []
    for k in range(d):
        e = tuple(int(i == k) for i in range(d))
        (img,) = alpha(a, LaurentPolynomial.monomial(e)).terms
        cols.append(img)
    return IntegerMatrix([[cols[k][i] for k in range(d)] for i in range(d)], d)
