"""Exact Gaussian elimination over Q(zeta_N).

Vectors are lists of CycNum; matrices are lists of rows.
"""
from __future__ import annotations

from .cyclofield import CycNum, cyc_inv


def rref(rows, ncols=None):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero()), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = cyc_inv(rows[r][c])
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def reduce_against(vec, basis, pivots):
    """Remainder of vec after eliminating the pivot columns of an rref basis."""
    v = list(vec)
    for row, c in zip(basis, pivots):
        if not v[c].is_zero():
            f = v[c]
            v = [a - f * b for a, b in zip(v, row)]
    return v


def in_span(vec, basis, pivots) -> bool:
    return all(x.is_zero() for x in reduce_against(vec, basis, pivots))


def transpose(mat):
    return [list(col) for col in zip(*mat)]


def solve(mat, rhs):
    """One solution x of mat @ x = rhs, or None when inconsistent."""
    if not mat:
        return []
    nrows, ncols = len(mat), len(mat[0])
    aug = [list(mat[i]) + [rhs[i]] for i in range(nrows)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    zero = rhs[0] * 0 if rhs else mat[0][0] * 0
    x = [zero] * ncols
    for row, c in zip(red, pivots):
        x[c] = row[ncols]
    return x


def nullspace(mat, ncols=None):
    """Basis of {x : mat @ x = 0}."""
    ncols = len(mat[0]) if mat else ncols
    red, pivots = rref(mat, ncols)
    if mat:
        zero, one = mat[0][0] * 0, mat[0][0] * 0 + 1
    else:
        zero, one = CycNum.zero(), CycNum.one()
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, c in zip(red, pivots):
            v[c] = -row[f]
        out.append(v)
    return out


def mat_vec(mat, vec):
    out = []
    for row in mat:
        acc = vec[0] * 0
        for a, b in zip(row, vec):
            if not a.is_zero() and not b.is_zero():
                acc = acc + a * b
        out.append(acc)
    return out


def mat_mul(a, b):
    bt = transpose(b)
    return [[_dot(r, c) for c in bt] for r in a]


def _dot(r, c):
    acc = r[0] * 0
    for x, y in zip(r, c):
        if not x.is_zero() and not y.is_zero():
            acc = acc + x * y
    return acc


def determinant_is_zero(mat) -> bool:
    return rank(mat) < len(mat)
