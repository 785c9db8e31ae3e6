"""Exact dense linear algebra over mpq.

Matrices are lists (or tuples) of row tuples. Sizes here are desk scale
(n <= 6 or so), so plain fraction-pivot Gaussian elimination is enough.
"""

from gmpy2 import mpq

ZERO = mpq(0)
ONE = mpq(1)


def _echelon(rows):
    """Row-reduce a copy of `rows`; returns (echelon rows, pivot columns)."""
    m = [list(map(mpq, r)) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    return len(_echelon(rows)[1])


def det(rows):
    """Determinant of a square matrix, exact."""
    m = [list(map(mpq, r)) for r in rows]
    n = len(m)
    d = ONE
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pr is None:
            return ZERO
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            d = -d
        d *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return d


def solve(rows, rhs):
    """Solve a square system A x = b. Returns a tuple, or None if singular."""
    n = len(rows)
    m = [list(map(mpq, r)) + [mpq(b)] for r, b in zip(rows, rhs, strict=True)]
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pr is None:
            return None
        m[c], m[pr] = m[pr], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return tuple(m[i][n] for i in range(n))


def invert(rows):
    """Inverse of a square matrix as a list of row tuples, or None."""
    n = len(rows)
    m = [list(map(mpq, r)) + [ONE if j == i else ZERO for j in range(n)]
         for i, r in enumerate(rows)]
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pr is None:
            return None
        m[c], m[pr] = m[pr], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return [tuple(m[i][n:]) for i in range(n)]


def matvec(rows, v):
    return tuple(sum(a * b for a, b in zip(r, v, strict=True)) for r in rows)


def nullspace(rows, ncols):
    """Basis of {x : A x = 0} for an ncols-wide matrix, as mpq tuples."""
    if not rows:
        return [tuple(ONE if j == i else ZERO for j in range(ncols)) for i in range(ncols)]
    ech, pivots = _echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        x = [ZERO] * ncols
        x[fc] = ONE
        for r, pc in enumerate(pivots):
            x[pc] = -ech[r][fc]
        basis.append(tuple(x))
    return basis
