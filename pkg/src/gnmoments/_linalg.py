"""Exact dense linear algebra over Q on lists of lists of Fractions."""
from __future__ import annotations

from fractions import Fraction

from .exact import to_rational


def as_matrix(M) -> list[list[Fraction]]:
    rows = [[to_rational(x) for x in row] for row in M]
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix must be square")
    return rows


def symmetric_inertia(M) -> tuple[int, int, int]:
    """(nu_plus, nu_zero, nu_minus) by symmetric congruence elimination.

    A nonzero diagonal entry is used as a 1x1 pivot. When the remaining
    diagonal is all zero but some off-diagonal b is not, the 2x2 block
    [[0, b], [b, 0]] is used; it contributes one positive and one negative
    square. Sylvester's law plus Haynsworth additivity give the count.
    """
    A = as_matrix(M)
    n = len(A)
    for i in range(n):
        for j in range(i):
            if A[i][j] != A[j][i]:
                raise ValueError("matrix is not symmetric")
    pos = neg = 0
    while A:
        size = len(A)
        k = next((i for i in range(size) if A[i][i] != 0), None)
        if k is not None:
            piv = A[k][k]
            if piv > 0:
                pos += 1
            else:
                neg += 1
            rest = [i for i in range(size) if i != k]
            col = [A[i][k] / piv for i in range(size)]
            A = [[A[i][j] - col[i] * A[k][j] for j in rest] for i in rest]
            continue
        pair = next(((i, j) for i in range(size) for j in range(i + 1, size) if A[i][j] != 0), None)
        if pair is None:
            break
        i0, j0 = pair
        b = A[i0][j0]
        pos += 1
        neg += 1
        rest = [i for i in range(size) if i not in (i0, j0)]
        A = [
            [A[r][c] - (A[r][i0] * A[j0][c] + A[r][j0] * A[i0][c]) / b for c in rest]
            for r in rest
        ]
    return pos, n - pos - neg, neg


def det(M) -> Fraction:
    """Determinant by Bareiss elimination with row pivoting."""
    A = as_matrix(M)
    n = len(A)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if A[k][k] == 0:
            r = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if r is None:
                return Fraction(0)
            A[k], A[r] = A[r], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def leading_minors(M) -> list[Fraction]:
    """det of the leading k x k blocks, k = 1..size.

    Plain Bareiss without pivoting yields every leading minor as the running
    pivot while the pivots stay nonzero. Once a pivot vanishes the remaining
    minors are computed one by one with the pivoted routine.
    """
    A = as_matrix(M)
    n = len(A)
    out: list[Fraction] = []
    prev = Fraction(1)
    k = 0
    while k < n:
        if A[k][k] == 0:
            break
        out.append(A[k][k])
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev
        prev = A[k][k]
        k += 1
    B = as_matrix(M)
    for size in range(len(out) + 1, n + 1):
        out.append(det([row[:size] for row in B[:size]]))
    return out


def rank(M) -> int:
    A = [[to_rational(x) for x in row] for row in M]
    if not A:
        return 0
    rows, cols = len(A), len(A[0])
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        for i in range(r + 1, rows):
            if A[i][c] != 0:
                f = A[i][c] / A[r][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        r += 1
        if r == rows:
            break
    return r


def solve(A, b) -> list[Fraction] | None:
    """One solution of A x = b (free variables set to 0), or None if inconsistent."""
    rows = [[to_rational(x) for x in row] + [to_rational(v)] for row, v in zip(A, b)]
    if not rows:
        return []
    ncols = len(rows[0]) - 1
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * bb for a, bb in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    if any(row[-1] != 0 for row in rows[r:]):
        return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = rows[i][-1]
    return x
