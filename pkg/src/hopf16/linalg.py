"""Exact dense linear algebra over Q(zeta_16).

Matrices are plain lists of rows of CycNum.  Everything is small here
(at most a few hundred rows), so straightforward fraction-free-ish Gaussian
elimination is plenty fast and, being exact, needs no tolerances.
"""

from __future__ import annotations

from .cyclo import CycNum, ONE, ZERO, cyc


def zeros(rows: int, cols: int):
    return [[ZERO] * cols for _ in range(rows)]


def identity(n: int):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    out = zeros(rows, cols)
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            aik = ai[k]
            if aik.is_zero():
                continue
            bk = b[k]
            for j in range(cols):
                if not bk[j].is_zero():
                    oi[j] = oi[j] + aik * bk[j]
    return out


def mat_vec(a, v):
    return [
        sum((ai[j] * v[j] for j in range(len(v)) if not v[j].is_zero()), ZERO)
        for ai in a
    ]


def transpose(a):
    return [list(col) for col in zip(*a)]


def rref(matrix):
    """Reduced row echelon form; returns (rows, pivot_column_indices)."""
    m = [list(row) for row in matrix]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if not m[i][c].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inv()
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(matrix) -> int:
    return len(rref(matrix)[1])


def nullspace(matrix):
    """Basis of {x : A x = 0} as a list of column vectors."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    m, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -m[r][f]
        basis.append(v)
    return basis


def solve(matrix, rhs):
    """One exact solution of A x = b, or None if the system is inconsistent.

    ``rhs`` is a single column given as a flat list.
    """
    if not matrix:
        return []
    ncols = len(matrix[0])
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    m, pivots = rref(aug)
    if ncols in pivots:
        return None  # inconsistent: pivot in the rhs column
    x = [ZERO] * ncols
    for r, p in enumerate(pivots):
        x[p] = m[r][ncols]
    return x


def inv_matrix(matrix):
    n = len(matrix)
    aug = [list(row) + ident_row for row, ident_row in zip(matrix, identity(n))]
    m, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in m]


def det_nonzero(matrix) -> bool:
    """Exact nonsingularity test (rank == size)."""
    return rank(matrix) == len(matrix)


def from_ints(rows):
    """Convenience: build a CycNum matrix from ints/Fractions/literals."""
    return [[cyc(x) for x in row] for row in rows]
