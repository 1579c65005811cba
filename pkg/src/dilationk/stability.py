"""Deciding whether an integer matrix is a dilation.

The decision is exact: all eigenvalues of A lie outside the closed unit disk
iff the reversed characteristic polynomial (whose roots are the reciprocals)
has every root strictly inside the unit disk, which the integer Schur-Cohn
recursion settles without floating point.  Float eigenvalues are recorded
only as an advisory cross-check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .linalg import (IntegerMatrix, as_integer_matrix, characteristic_polynomial,
                     determinant)


class NotADilationError(ValueError):
    """Raised when an operation requires a dilation matrix."""

    def __init__(self, certificate: "DilationCertificate"):
        self.certificate = certificate
        super().__init__(f"not a dilation matrix: {certificate.reason}")


@dataclass(frozen=True)
class SchurCohnStep:
    degree: int
    leading: int
    constant: int
    ok: bool
    note: str = ""

    def as_dict(self) -> dict:
        return {"degree": self.degree, "leading": self.leading,
                "constant": self.constant, "ok": self.ok, "note": self.note}


@dataclass(frozen=True)
class DilationCertificate:
    is_dilation: bool
    det: int
    charpoly: tuple[int, ...]
    evidence: tuple[SchurCohnStep, ...]
    float_eigenvalue_crosscheck: tuple[float, ...]
    reason: str = ""

    @property
    def d(self) -> int:
        return len(self.charpoly) - 1

    def as_dict(self) -> dict:
        return {
            "is_dilation": self.is_dilation,
            "det": self.det,
            "charpoly": list(self.charpoly),
            "evidence": [s.as_dict() for s in self.evidence],
            "float_eigenvalue_moduli": list(self.float_eigenvalue_crosscheck),
            "reason": self.reason,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "DilationCertificate":
        return cls(data["is_dilation"], data["det"], tuple(data["charpoly"]),
                   tuple(SchurCohnStep(**s) for s in data["evidence"]),
                   tuple(data["float_eigenvalue_moduli"]), data.get("reason", ""))


def schur_cohn_steps(coeffs_ascending) -> list[SchurCohnStep]:
    """Run the Schur-Cohn recursion for "all roots strictly in |z| < 1".

    Each step checks |a_0| < |a_n| and replaces p by
    (a_n p(z) - a_0 p*(z)) / z, which keeps the number of roots inside the
    disk minus one.  The last step's ``ok`` is the verdict.
    """
    p = list(coeffs_ascending)
    while p and p[-1] == 0:
        p.pop()
    steps = []
    while len(p) > 1:
        n = len(p) - 1
        a0, an = p[0], p[-1]
        if abs(a0) > abs(an):
            steps.append(SchurCohnStep(n, an, a0, False, "|a_0| > |a_n|: a root lies outside"))
            return steps
        if abs(a0) == abs(an):
            steps.append(SchurCohnStep(
                n, an, a0, False,
                "degenerate step |a_0| = |a_n|: boundary root (|lambda| = 1) or reciprocal pair"))
            return steps
        steps.append(SchurCohnStep(n, an, a0, True))
        nxt = [an * p[k] - a0 * p[n - k] for k in range(1, n + 1)]
        g = math.gcd(*nxt)
        p = [c // g for c in nxt]
    steps.append(SchurCohnStep(0, p[0] if p else 0, p[0] if p else 0, bool(p),
                               "constant remainder" if p else "zero polynomial"))
    return steps


def _float_moduli(a: IntegerMatrix) -> tuple[float, ...]:
    if a.rows == 0:
        return ()
    eig = np.linalg.eigvals(np.array(a.tolist(), dtype=float))
    return tuple(sorted(float(abs(x)) for x in eig))


def certify_dilation(a) -> DilationCertificate:
    """Exact certificate that every complex eigenvalue of ``a`` has |lambda| > 1."""
    a = as_integer_matrix(a)
    if not a.is_square:
        raise ValueError(f"certify_dilation needs a square matrix, got {a.rows}x{a.cols}")
    if a.rows == 0:
        raise ValueError("empty matrix")
    det = determinant(a)
    cp = tuple(characteristic_polynomial(a))
    moduli = _float_moduli(a)
    if det == 0:
        step = SchurCohnStep(a.rows, 1, 0, False, "det = 0: zero eigenvalue")
        return DilationCertificate(False, det, cp, (step,), moduli, "zero eigenvalue")
    # cp is highest-first, so it is already the reversed polynomial ascending
    steps = schur_cohn_steps(cp)
    ok = steps[-1].ok
    reason = ""
    if not ok:
        reason = steps[-1].note
        near = [m for m in moduli if abs(m - 1.0) < 1e-9]
        if near:
            reason += f"; float check finds unit-modulus eigenvalue(s) {near}"
    if ok and abs(det) < 2:
        raise AssertionError("certified dilation with |det| < 2")
    return DilationCertificate(ok, det, cp, tuple(steps), moduli, reason)


def require_dilation(a) -> DilationCertificate:
    cert = certify_dilation(a)
    if not cert.is_dilation:
        raise NotADilationError(cert)
    return cert


@dataclass(frozen=True)
class NormDecayResult:
    """First n with ||A^-n|| < epsilon, or ``n is None`` if not within n_max."""

    epsilon: float
    n_max: int
    n: int | None
    norms: tuple[float, ...] = field(default=())

    @property
    def decayed(self) -> bool:
        return self.n is not None

    def as_dict(self) -> dict:
        return {"epsilon": self.epsilon, "n_max": self.n_max, "n": self.n,
                "decayed": self.decayed, "norms": list(self.norms)}


def spectral_norm(m) -> float:
    return float(np.linalg.norm(np.array([[float(x) for x in r] for r in m.tolist()]), 2))


def norm_decay(a, epsilon: float, n_max: int) -> NormDecayResult:
    a = as_integer_matrix(a)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    require_dilation(a)
    inv = a ** -1
    power = inv
    norms = []
    for n in range(1, n_max + 1):
        val = spectral_norm(power)
        norms.append(val)
        if val < epsilon:
            return NormDecayResult(epsilon, n_max, n, tuple(norms))
        power = power @ inv
    return NormDecayResult(epsilon, n_max, None, tuple(norms))
