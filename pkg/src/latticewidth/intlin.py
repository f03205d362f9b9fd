"""Small exact integer linear algebra: column Hermite form with transform."""
from __future__ import annotations

from .polygon import ext_gcd


def column_hermite(rows):
    """Column-style Hermite reduction.

    Returns ``(H, U, pivots)`` with ``M @ U == H``, ``U`` unimodular and ``H``
    in column echelon form: ``pivots[r]`` is the pivot column of row ``r`` (or
    None), pivot entries are positive and entries left of a pivot are reduced
    into ``[0, pivot)``.  Matrices are lists of lists of Python ints.
    """
    H = [list(r) for r in rows]
    k = len(H[0]) if H else 0
    U = [[int(i == j) for j in range(k)] for i in range(k)]

    def colop(i, j, a, b, c, d):
        # (col_i, col_j) <- (a*col_i + b*col_j, c*col_i + d*col_j)
        for M in (H, U):
            for row in M:
                x, y = row[i], row[j]
                row[i], row[j] = a * x + b * y, c * x + d * y

    pivots = []
    col = 0
    for r in range(len(H)):
        if col >= k:
            pivots.append(None)
            continue
        for j in range(col + 1, k):
            x, y = H[r][col], H[r][j]
            if y == 0:
                continue
            g, s, t = ext_gcd(x, y)
            colop(col, j, s, t, -y // g, x // g)
        if H[r][col] == 0:
            pivots.append(None)
            continue
        if H[r][col] < 0:
            for M in (H, U):
                for row in M:
                    row[col] = -row[col]
        p = H[r][col]
        for j in range(col):
            q = H[r][j] // p
            if q:
                colop(j, col, 1, -q, 0, 1)
        pivots.append(col)
        col += 1
    return H, U, pivots


def solve_integer(rows, rhs):
    """One integer solution x of ``M x = rhs`` and a kernel basis, or None.

    The kernel basis is returned as a list of integer vectors.
    """
    H, U, pivots = column_hermite(rows)
    k = len(U)
    y = [0] * k
    for r, c in enumerate(pivots):
        acc = rhs[r] - sum(H[r][j] * y[j] for j in range(k) if j != c)
        if c is None:
            if acc != 0:
                return None
            continue
        q, rem = divmod(acc, H[r][c])
        if rem:
            return None
        y[c] = q
    x = [sum(U[i][j] * y[j] for j in range(k)) for i in range(k)]
    rank = sum(c is not None for c in pivots)
    kernel = [[U[i][j] for i in range(k)] for j in range(rank, k)]
    return x, kernel


def matvec(rows, x):
    return [sum(a * b for a, b in zip(row, x)) for row in rows]
