"""Dense linear algebra over exact scalars (and a float fallback).

Row reduction is fraction-free-naive Gaussian elimination; fine at the 16-,
32- and few-hundred-row sizes this package ever sees.  Entries may be QC,
Fraction, int, or python complex -- anything supporting +, -, *, / and a
zero test via :func:`superkit.exactnum.scal_is_zero`.
"""

from __future__ import annotations

from .exactnum import QC, coerce, scal_is_zero


def _clone(mat):
    return [[coerce(x) for x in row] for row in mat]


def row_echelon(mat, tol=0.0):
    """Reduce in place; return (matrix, pivot column list)."""
    m = _clone(mat)
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if not scal_is_zero(m[i][c], tol):
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(rows):
            if i != r and not scal_is_zero(m[i][c], tol):
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(mat, tol=0.0):
    return len(row_echelon(mat, tol)[1])


def null_space(mat, tol=0.0):
    """Basis of the right null space, as a list of column vectors."""
    if not mat:
        return []
    rref, pivots = row_echelon(mat, tol)
    cols = len(mat[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [QC(0)] * cols
        v[fc] = QC(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r][fc]
        basis.append(v)
    return basis


def solve(mat, rhs, tol=0.0):
    """One solution of mat @ x = rhs, or None if inconsistent."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    aug = [list(mat[i]) + [rhs[i]] for i in range(rows)]
    rref, pivots = row_echelon(aug, tol)
    for r in range(len(pivots), rows):
        if not scal_is_zero(rref[r][cols], tol):
            return None
    x = [QC(0)] * cols
    for r, pc in enumerate(pivots):
        if pc == cols:
            return None
        x[pc] = rref[r][cols]
    return x


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    zero = coerce(0)
    out = [[zero] * cols for _ in range(rows)]
    for i in range(rows):
        arow = a[i]
        orow = out[i]
        for k in range(inner):
            x = arow[k]
            if scal_is_zero(x):
                continue
            brow = b[k]
            for j in range(cols):
                y = brow[j]
                if not scal_is_zero(y):
                    orow[j] = orow[j] + x * y
    return out


def mat_vec(a, v):
    return [sum_scalars(a[i][k] * v[k] for k in range(len(v))) for i in range(len(a))]


def sum_scalars(it):
    s = coerce(0)
    for x in it:
        s = s + x
    return s


def same_span(basis_a, basis_b, tol=0.0):
    """True iff the two lists of vectors span the same subspace."""
    if not basis_a and not basis_b:
        return True
    dim = len(basis_a[0]) if basis_a else len(basis_b[0])
    ra = rank(list(basis_a), tol) if basis_a else 0
    rb = rank(list(basis_b), tol) if basis_b else 0
    rboth = rank(list(basis_a) + list(basis_b), tol)
    return ra == rb == rboth and (dim >= 0)
