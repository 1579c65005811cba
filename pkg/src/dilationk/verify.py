"""Self-checking identity suites and the brute-force oracles they lean on.

Each suite returns a :class:`SuiteResult`; a failed check records a short
description (at most ``MAX_FAILURES`` are kept) rather than raising.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import comb

from .bimodule import (alpha, build_filterbank, check_orthonormal, degree_one_exponent_matrix,
                       omega, OmegaMatrix, reconstruct, transfer)
from .exterior import (adjugate_compound_b, b1_closed_form, bd1_closed_form, compound_c,
                       enumerate_subsets, laplace_identity_diag, laplace_identity_offdiag,
                       permutation_sign, product_sign, tau_pair_sign)
from .groups import cokernel
from .ktheory import InternalConsistencyError, injectivity_report, kgroups, kgroups_2x2
from .laurent import LaurentPolynomial
from .linalg import IntegerMatrix, determinant
from .smith import smith_normal_form
from .stability import certify_dilation

MAX_FAILURES = 10
ENTRY_RANGE = (-9, 9)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)
    failure_count: int = 0
    skipped: int = 0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def check(self, ok: bool, what) -> bool:
        self.checks += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_FAILURES:
                self.failures.append(what() if callable(what) else str(what))
        return ok

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checks": self.checks,
                "failure_count": self.failure_count, "failures": list(self.failures),
                "skipped": self.skipped}

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f", {self.skipped} skipped" if self.skipped else ""
        return f"[{status}] {self.name}: {self.checks} checks{extra}"


# -- oracles ------------------------------------------------------------------

def permutation_determinant(m) -> int:
    """Leibniz expansion; only for small matrices."""
    rows = m.tolist() if hasattr(m, "tolist") else [list(r) for r in m]
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        term = permutation_sign(perm)
        for i, j in enumerate(perm):
            term *= rows[i][j]
            if not term:
                break
        total += term
    return total


# -- random inputs -------------------------------------------------------------

def random_integer_matrix(rng: random.Random, d: int, lo: int = ENTRY_RANGE[0],
                          hi: int = ENTRY_RANGE[1]) -> IntegerMatrix:
    return IntegerMatrix([[rng.randint(lo, hi) for _ in range(d)] for _ in range(d)], d)


def random_dilation(rng: random.Random, d: int, lo: int = ENTRY_RANGE[0],
                    hi: int = ENTRY_RANGE[1], max_abs_det: int | None = None,
                    max_tries: int = 100000) -> IntegerMatrix:
    """Rejection-sample a certified dilation matrix."""
    for _ in range(max_tries):
        a = random_integer_matrix(rng, d, lo, hi)
        cert = certify_dilation(a)
        if cert.is_dilation and (max_abs_det is None or abs(cert.det) <= max_abs_det):
            return a
    raise RuntimeError(f"no dilation matrix found in {max_tries} draws")


def random_dilations(seed: int, dims, count: int, **kw) -> list[IntegerMatrix]:
    """``count`` dilation matrices cycling through ``dims``."""
    rng = random.Random(seed)
    dims = list(dims)
    return [random_dilation(rng, dims[i % len(dims)], **kw) for i in range(count)]


# -- suites ---------------------------------------------------------------------

def identity_suite(matrices) -> SuiteResult:
    """B_n C_n = C_n B_n = |det A| 1 for every grade."""
    res = SuiteResult("adjugate-compound identity")
    for a in matrices:
        det = abs(determinant(a))
        for n in range(a.rows + 1):
            b, c = adjugate_compound_b(a, n), compound_c(a, n)
            target = IntegerMatrix.scalar(det, b.rows)
            res.check(b @ c == target and c @ b == target,
                      lambda: f"A={a.tolist()} n={n}")
    return res


def laplace_suite(matrices) -> SuiteResult:
    """Diagonal Laplace sums give det A, off-diagonal ones give 0."""
    res = SuiteResult("laplace identities")
    for a in matrices:
        d = a.rows
        det = determinant(a)
        for n in range(1, d):
            basis = enumerate_subsets(d, n)
            for j in basis:
                res.check(laplace_identity_diag(a, n, j) == det,
                          lambda: f"diag A={a.tolist()} n={n} J={j}")
                for l in basis:
                    if l != j:
                        res.check(laplace_identity_offdiag(a, n, j, l) == 0,
                                  lambda: f"offdiag A={a.tolist()} n={n} J={j} L={l}")
    return res


def sign_suite(d_max: int) -> SuiteResult:
    """(-1)^deg(tau_K tau_J) equals prod (-1)^(j_i + k_i), exhaustively."""
    res = SuiteResult("sign formula")
    for d in range(1, d_max + 1):
        for n in range(d + 1):
            basis = enumerate_subsets(d, n)
            for k in basis:
                for j in basis:
                    res.check(tau_pair_sign(k, j) == product_sign(k, j),
                              lambda: f"d={d} K={k} J={j}")
    return res


def injectivity_suite(matrices) -> SuiteResult:
    """det(1 - B_n) != 0 for 0 < n < d, and 1 - B_d in {0, 2} by sign of det."""
    res = SuiteResult("injectivity of 1 - B_n")
    for a in matrices:
        try:
            recs = injectivity_report(a)
            res.check(len(recs) == a.rows + 1, f"A={a.tolist()} incomplete report")
        except InternalConsistencyError as exc:
            res.check(False, f"A={a.tolist()}: {exc}")
            continue
        det = determinant(a)
        top = IntegerMatrix.identity(1) - adjugate_compound_b(a, a.rows)
        res.check(top[0, 0] == (0 if det > 1 else 2), lambda: f"A={a.tolist()} 1-B_d={top}")
    return res


def closed_form_suite(matrices) -> SuiteResult:
    """B_1 = |det A| (A^T)^-1 and the entrywise B_(d-1) formula."""
    res = SuiteResult("B_1 and B_(d-1) closed forms")
    for a in matrices:
        d = a.rows
        res.check(b1_closed_form(a) == adjugate_compound_b(a, 1, certify=False),
                  lambda: f"B_1 A={a.tolist()}")
        res.check(bd1_closed_form(a) == adjugate_compound_b(a, d - 1, certify=False),
                  lambda: f"B_(d-1) A={a.tolist()}")
    return res


def closed_form_2x2_suite(matrices) -> SuiteResult:
    res = SuiteResult("2x2 closed forms")
    for a in matrices:
        if a.rows != 2:
            res.skipped += 1
            continue
        r = kgroups(a)
        k0, k1 = kgroups_2x2(a)
        res.check((r.k0, r.k1) == (k0, k1),
                  lambda: f"A={a.tolist()} engine=({r.k0}; {r.k1}) closed=({k0}; {k1})")
    return res


def determinant_oracle_suite(matrices) -> SuiteResult:
    res = SuiteResult("Bareiss vs permutation expansion")
    for a in matrices:
        res.check(determinant(a) == permutation_determinant(a), lambda: f"A={a.tolist()}")
    return res


def smith_suite(matrices) -> SuiteResult:
    res = SuiteResult("Smith reconstruction")
    for m in matrices:
        dec = smith_normal_form(m)
        f = dec.factors
        diag_ok = all(dec.s[i, j] == 0 for i in range(dec.s.rows) for j in range(dec.s.cols)
                      if i != j)
        chain_ok = (all(x >= 0 for x in f)
                    and all(b % a == 0 if a else b == 0 for a, b in zip(f, f[1:])))
        res.check(dec.u @ m @ dec.v == dec.s, lambda: f"u m v != s for {m.tolist()}")
        res.check(abs(determinant(dec.u)) == 1 and abs(determinant(dec.v)) == 1,
                  lambda: f"non-unimodular transform for {m.tolist()}")
        res.check(diag_ok and chain_ok, lambda: f"bad Smith form {dec.s.tolist()}")
        if m.is_square:
            det = determinant(m)
            if det:
                prod = 1
                for x in f:
                    prod *= x
                res.check(prod == abs(det), lambda: f"factor product for {m.tolist()}")
    return res


def functoriality_suite(pairs) -> SuiteResult:
    """C_n(AB) = C_n(B) C_n(A)."""
    res = SuiteResult("compound functoriality")
    for a, b in pairs:
        ab = a @ b
        for n in range(a.rows + 1):
            res.check(compound_c(ab, n) == compound_c(b, n) @ compound_c(a, n),
                      lambda: f"A={a.tolist()} B={b.tolist()} n={n}")
    return res


def sylvester_franke_suite(matrices) -> SuiteResult:
    """det C_n = (det A)^binom(d-1, n-1), with det C_n by permutation expansion."""
    res = SuiteResult("Sylvester-Franke")
    for a in matrices:
        d, det = a.rows, determinant(a)
        for n in range(1, d + 1):
            c = compound_c(a, n)
            if c.rows > 6:
                got = determinant(c)
            else:
                got = permutation_determinant(c)
            res.check(got == det ** comb(d - 1, n - 1), lambda: f"A={a.tolist()} n={n}")
    return res


def filterbank_suite(matrices) -> SuiteResult:
    res = SuiteResult("filter bank orthonormality")
    for a in matrices:
        fb = build_filterbank(a)
        rep = check_orthonormal(fb)
        res.check(rep.ok and fb.gammas[0] == (0,) * a.rows,
                  lambda: f"A={a.tolist()}: {rep.detail}")
        if rep.numeric_max_error is None:
            res.skipped += 1
        else:
            res.check(rep.numeric_max_error < 1e-6,
                      lambda: f"A={a.tolist()} numeric error {rep.numeric_max_error}")
    return res


OMEGA_LIMIT = 24


def _random_monomial(rng, d, span=6):
    return LaurentPolynomial.monomial(tuple(rng.randint(-span, span) for _ in range(d)),
                                      rng.choice([1, 2, -1, 3]))


def bimodule_suite(instances, seed: int = 0) -> SuiteResult:
    """Exel-system identities on random monomials.

    ``instances`` is a list of matrices; each yields one random instance
    (f, g).  Omega checks are skipped when |det A| exceeds ``OMEGA_LIMIT``.
    """
    res = SuiteResult("bimodule identities")
    rng = random.Random(seed)
    banks = {}
    for a in instances:
        d = a.rows
        f, g = _random_monomial(rng, d), _random_monomial(rng, d)
        res.check(transfer(a, alpha(a, f) * g) == f * transfer(a, g),
                  lambda: f"transfer axiom A={a.tolist()} f={f} g={g}")
        res.check(alpha(a, f * g) == alpha(a, f) * alpha(a, g)
                  and alpha(a, LaurentPolynomial.constant(d)) == LaurentPolynomial.constant(d),
                  lambda: f"alpha multiplicativity A={a.tolist()}")
        res.check(transfer(a, alpha(a, f)) == f, lambda: f"L o alpha A={a.tolist()} f={f}")
        res.check(degree_one_exponent_matrix(a) == compound_c(a, 1),
                  lambda: f"degree-one bridge A={a.tolist()}")
        fb = banks.get(a) or banks.setdefault(a, build_filterbank(a))
        res.check(reconstruct(fb, f) == f, lambda: f"reconstruction A={a.tolist()} f={f}")
        if fb.n > OMEGA_LIMIT:
            res.skipped += 1
            continue
        of, og = omega(fb, f), omega(fb, g)
        res.check(omega(fb, f * g) == of @ og,
                  lambda: f"omega multiplicativity A={a.tolist()} f={f} g={g}")
        res.check(omega(fb, alpha(a, f)) == OmegaMatrix.scalar(f, fb.n),
                  lambda: f"omega o alpha A={a.tolist()} f={f}")
        res.check(omega(fb, LaurentPolynomial.constant(d))
                  == OmegaMatrix.scalar(LaurentPolynomial.constant(d), fb.n),
                  lambda: f"omega unital A={a.tolist()}")
    return res


def cokernel_invariance_suite(rng: random.Random, matrices, trials: int = 2) -> SuiteResult:
    """coker(m) is unchanged by m -> u m v for unimodular u, v."""
    res = SuiteResult("cokernel invariance")
    for m in matrices:
        base = cokernel(m)
        for _ in range(trials):
            u, v = random_unimodular(rng, m.rows), random_unimodular(rng, m.cols)
            res.check(cokernel(u @ m @ v) == base, lambda: f"m={m.tolist()}")
    return res


def random_unimodular(rng: random.Random, n: int, steps: int = 6) -> IntegerMatrix:
    rows = IntegerMatrix.identity(n).tolist()
    for _ in range(steps):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        q = rng.randint(-3, 3)
        rows[i] = [x + q * y for x, y in zip(rows[i], rows[j])]
    if n and rng.random() < 0.5:
        rows[0] = [-x for x in rows[0]]
    rng.shuffle(rows)
    return IntegerMatrix(rows, n)


def run_all(matrices, seed: int = 0) -> list[SuiteResult]:
    """Every suite applicable to the given dilation matrices."""
    rng = random.Random(seed)
    d_max = max(a.rows for a in matrices)
    small = [a for a in matrices if a.rows <= 4]
    pairs = [(a, random_integer_matrix(rng, a.rows)) for a in small]
    return [
        identity_suite(matrices),
        laplace_suite(matrices),
        sign_suite(max(d_max, 1)),
        injectivity_suite(matrices),
        closed_form_suite(matrices),
        closed_form_2x2_suite(matrices),
        determinant_oracle_suite(small),
        smith_suite([IntegerMatrix.identity(a.rows) - a for a in matrices] + list(matrices)),
        functoriality_suite(pairs),
        sylvester_franke_suite(small),
        filterbank_suite(matrices),
        bimodule_suite(matrices, seed=seed),
    ]
