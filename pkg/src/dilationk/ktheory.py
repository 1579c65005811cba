"""K-groups of the Exel crossed product C(T^d) x_{alpha_A, L} N.

Every grade n contributes coker(1 - B_n) to K_(n mod 2).  When det A > 1
the top map 1 - B_d vanishes, and its kernel (a copy of Z) contributes a
free summand to the opposite parity through the split exact sequence.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .exterior import adjugate_compound_b
from .groups import AbelianGroup, cokernel
from .linalg import IntegerMatrix, as_integer_matrix, determinant
from .stability import require_dilation

CASE_POS_ODD = "det>1/odd-d"
CASE_POS_EVEN = "det>1/even-d"
CASE_NEG = "det<-1"

COROLLARY_D1_NOTE = (
    "corollary-discrepancy: for d=1 and N<-1 the one-dimensional closed form "
    "K_0 = Z/(N-1) disagrees with the grade sum, which gives Z/(|N|-1) because "
    "B_0 = |N|; the grade-sum value is reported")
DIMENSION_NOTE = (
    "dimension note: d = 1 lies outside the usual d >= 2 dilation-matrix setting; "
    "it is computed with the same grade sums as every other dimension")


class InternalConsistencyError(AssertionError):
    """A proven identity failed: indicates an implementation bug."""


@dataclass(frozen=True)
class Summand:
    n: int
    parity: int
    matrix: IntegerMatrix
    group: AbelianGroup
    role: str = "coker"  # "coker" for coker(1-B_n), "ker" for the free ker(1-B_d) summand

    def as_dict(self) -> dict:
        return {"n": self.n, "parity": self.parity, "role": self.role,
                "matrix": self.matrix.tolist(), "cokernel": self.group.as_dict()}


@dataclass(frozen=True)
class IdentityClass:
    """Image of [1] in the grade-0 summand Z/(|det A| - 1)."""

    residue: int
    modulus: int

    @property
    def is_zero(self) -> bool:
        return self.residue == 0

    def as_dict(self) -> dict:
        return {"residue": self.residue, "modulus": self.modulus, "zero": self.is_zero}

    def __str__(self):
        return "0" if self.is_zero else f"{self.residue} mod {self.modulus}"


@dataclass(frozen=True)
class KTheoryResult:
    d: int
    det: int
    case_tag: str
    k0: AbelianGroup
    k1: AbelianGroup
    summands: tuple[Summand, ...]
    identity_class: IdentityClass
    notes: tuple[str, ...] = field(default=())

    def group(self, i: int) -> AbelianGroup:
        return self.k0 if i == 0 else self.k1


def case_tag(d: int, det: int) -> str:
    if det > 1:
        return CASE_POS_ODD if d % 2 else CASE_POS_EVEN
    if det < -1:
        return CASE_NEG
    raise ValueError(f"|det A| = {abs(det)} < 2")


def one_minus_b(a, n: int) -> IntegerMatrix:
    b = adjugate_compound_b(a, n)
    return IntegerMatrix.identity(b.rows) - b


def identity_class(a) -> IdentityClass:
    det = require_dilation(a).det
    modulus = abs(det) - 1
    return IdentityClass(1 % modulus, modulus)


def kgroups(a) -> KTheoryResult:
    a = as_integer_matrix(a)
    cert = require_dilation(a)
    d, det = a.rows, cert.det
    tag = case_tag(d, det)
    summands = []
    for n in range(d + 1):
        m = one_minus_b(a, n)
        summands.append(Summand(n, n % 2, m, cokernel(m)))
    if det > 1:
        top = summands[-1].matrix
        if any(top.entries):
            raise InternalConsistencyError("1 - B_d is nonzero although det A > 1")
        summands.append(Summand(d, (d + 1) % 2, top, AbelianGroup(1), role="ker"))
    k = [AbelianGroup.direct_sum(s.group for s in summands if s.parity == i) for i in (0, 1)]
    notes = []
    if d == 1:
        notes.append(DIMENSION_NOTE)
        if det < -1:
            notes.append(COROLLARY_D1_NOTE)
    return KTheoryResult(d, det, tag, k[0], k[1], tuple(summands),
                         identity_class(a), tuple(notes))


@dataclass(frozen=True)
class InjectivityRecord:
    n: int
    det: int
    expected: str

    def as_dict(self) -> dict:
        return {"n": self.n, "det_one_minus_b": self.det, "expected": self.expected}


def injectivity_report(a) -> list[InjectivityRecord]:
    """det(1 - B_n) per grade, checked against the known signs and values."""
    a = as_integer_matrix(a)
    cert = require_dilation(a)
    d, det = a.rows, cert.det
    out = []
    for n in range(d + 1):
        val = determinant(one_minus_b(a, n))
        if n == 0:
            expected, ok = f"{1 - abs(det)}", val == 1 - abs(det)
        elif n == d:
            target = 0 if det > 1 else 2
            expected, ok = str(target), val == target
        else:
            expected, ok = "nonzero", val != 0
        if not ok:
            raise InternalConsistencyError(
                f"det(1 - B_{n}) = {val}, expected {expected}")
        out.append(InjectivityRecord(n, val, expected))
    return out


def kgroups_2x2(a) -> tuple[AbelianGroup, AbelianGroup]:
    """Closed-form K-groups for 2x2 dilation matrices, written out from the entries."""
    a = as_integer_matrix(a)
    if a.shape != (2, 2):
        raise ValueError("kgroups_2x2 needs a 2x2 matrix")
    (a11, a12), (a21, a22) = a.tolist()
    det = a11 * a22 - a12 * a21
    t = AbelianGroup.from_cyclic([abs(det) - 1])
    if det > 1:
        k0 = t + AbelianGroup(1)
        k1 = AbelianGroup(1) + cokernel([[1 - a11, a12], [a21, 1 - a22]])
    elif det < -1:
        k0 = t + AbelianGroup(0, (2,))
        k1 = cokernel([[1 + a11, -a12], [-a21, 1 + a22]])
    else:
        raise ValueError("|det A| must exceed 1")
    return k0, k1

