"""Smith and Hermite normal forms over the integers.

The Smith form drives cokernel computations; the Hermite basis gives a
canonical reduction of vectors modulo a full-rank lattice, used to list
coset representatives deterministically.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .linalg import IntegerMatrix, as_integer_matrix, rational_inverse


@dataclass(frozen=True)
class SmithDecomposition:
    """``u @ m @ v == s`` with u, v unimodular and s diagonal.

    ``factors`` is the diagonal of ``s`` (length ``min(rows, cols)``):
    nonnegative, each dividing the next, zeros last.
    """

    u: IntegerMatrix
    s: IntegerMatrix
    v: IntegerMatrix
    factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for f in self.factors if f)


def _pick_pivot(a, t, rows, cols):
    # smallest |entry|, ties broken by row-major position
    best = None
    for i in range(t, rows):
        for j in range(t, cols):
            x = a[i][j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
    return best


def smith_normal_form(m) -> SmithDecomposition:
    m = as_integer_matrix(m)
    rows, cols = m.shape
    a = m.tolist()
    u = IntegerMatrix.identity(rows).tolist()
    v = IntegerMatrix.identity(cols).tolist()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for r in a:
            r[dst] += q * r[src]
        for r in v:
            r[dst] += q * r[src]

    for t in range(min(rows, cols)):
        while True:
            best = _pick_pivot(a, t, rows, cols)
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(i, t)
            if j != t:
                swap_cols(j, t)
            p = a[t][t]
            clean = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    clean = clean and a[i][t] == 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    clean = clean and a[t][j] == 0
            if not clean:
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % p), None)
            if bad is None:
                break
            # pull the offending row up so its remainder becomes a smaller pivot
            add_row(t, bad[0], 1)
        if best is None:
            break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    factors = tuple(a[i][i] for i in range(min(rows, cols)))
    return SmithDecomposition(IntegerMatrix(u), IntegerMatrix(a, cols),
                              IntegerMatrix(v), factors)


def hermite_basis(gens) -> list[list[int]]:
    """Row-style Hermite basis of the lattice spanned by the rows of ``gens``.

    Returned rows are in echelon form with positive pivots and entries above
    each pivot reduced into ``[0, pivot)``.
    """
    gens = as_integer_matrix(gens)
    a = gens.tolist()
    ncols = gens.cols
    r = 0
    for c in range(ncols):
        rest = a[r:]
        while True:
            nz = [row for row in rest if row[c]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda row: abs(row[c]))
            piv = nz[0]
            for row in nz[1:]:
                q = row[c] // piv[c]
                row[:] = [x - q * y for x, y in zip(row, piv)]
        nz = [row for row in rest if row[c]]
        if not nz:
            continue
        piv = nz[0]
        if piv[c] < 0:
            piv[:] = [-x for x in piv]
        a = a[:r] + [piv] + [row for row in rest if row is not piv]
        r += 1
    basis = a[:r]
    pivots = [next(j for j, x in enumerate(row) if x) for row in basis]
    for i, (row, pc) in enumerate(zip(basis, pivots)):
        for k in range(i):
            q = basis[k][pc] // row[pc]
            if q:
                basis[k] = [x - q * y for x, y in zip(basis[k], row)]
    return basis


def reduce_mod_lattice(vec, basis) -> tuple[int, ...]:
    """Canonical representative of ``vec`` modulo a full-rank Hermite basis."""
    vec = list(vec)
    for row in basis:
        pc = next(j for j, x in enumerate(row) if x)
        q = vec[pc] // row[pc]
        if q:
            vec = [x - q * y for x, y in zip(vec, row)]
    return tuple(vec)


def column_lattice_basis(m) -> list[list[int]]:
    """Hermite basis for the lattice ``m Z^d`` spanned by the columns of m."""
    return hermite_basis(as_integer_matrix(m).transpose())


def coset_representatives(m) -> list[tuple[int, ...]]:
    """Transversal of ``Z^d / m Z^d`` for nonsingular square m.

    Generated from the Smith decomposition (``m = U^-1 S V^-1`` so the
    box ``{U^-1 t : 0 <= t_i < s_i}`` is a transversal), then reduced to
    Hermite-canonical form and sorted with the zero vector first.
    """
    m = as_integer_matrix(m)
    dec = smith_normal_form(m)
    if 0 in dec.factors:
        raise ValueError("coset representatives need a nonsingular matrix")
    u_inv = rational_inverse(dec.u).to_integer()
    basis = column_lattice_basis(m)
    reps = {reduce_mod_lattice(u_inv.apply(t), basis)
            for t in itertools.product(*(range(s) for s in dec.factors))}
    return sorted(reps, key=lambda r: (any(r), r))


def hermite_box_representatives(m) -> list[tuple[int, ...]]:
    """Same transversal enumerated directly from the Hermite diagonal."""
    basis = column_lattice_basis(m)
    d = as_integer_matrix(m).rows
    if len(basis) != d:
        raise ValueError("lattice is not full rank")
    diag = [row[i] for i, row in enumerate(basis)]
    reps = [tuple(t) for t in itertools.product(*(range(h) for h in diag))]
    return sorted(reps, key=lambda r: (any(r), r))
