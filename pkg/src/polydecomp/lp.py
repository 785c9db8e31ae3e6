"""Exact rational linear programming.

Two-phase primal simplex on a dense tableau with Bland's pivoting rule,
which guarantees termination without any perturbation. All arithmetic is
mpq; there are no tolerances.

The public entry point solves

    maximize  c . x   subject to  A x <= b,   x free,

by splitting each free variable into a difference of nonnegatives and
adding slack (and, where needed, artificial) columns.
"""

from dataclasses import dataclass

from gmpy2 import mpq

ZERO = mpq(0)
ONE = mpq(1)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    x: tuple | None  # values of the original free variables
    value: object | None  # objective at the optimum


def _pivot(T, basis, row, col):
    piv = T[row][col]
    inv = 1 / piv
    T[row] = [a * inv for a in T[row]]
    prow = T[row]
    for i, r in enumerate(T):
        if i != row and r[col] != 0:
            f = r[col]
            T[i] = [a - f * b for a, b in zip(r, prow)]
    basis[row] = col


def _simplex(T, basis, ncols):
    """Run Bland's rule to optimality on a feasible tableau.

    T has m constraint rows plus a final objective row holding reduced
    costs for maximization (entry > 0 means entering improves).
    Returns OPTIMAL or UNBOUNDED.
    """
    m = len(T) - 1
    obj = T[m]
    while True:
        col = next((j for j in range(ncols) if obj[j] > 0), None)
        if col is None:
            return OPTIMAL
        # Ratio test, Bland tie-break on the leaving basic variable index.
        best = None
        for i in range(m):
            a = T[i][col]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return UNBOUNDED
        _pivot(T, basis, best[1], col)
        obj = T[m]


def solve_lp_max(objective, rows, rhs) -> LPResult:
    """Maximize objective . x over {x : rows x <= rhs} with x free.

    `objective` has length n; `rows` is a sequence of length-n rows.
    """
    n = len(objective)
    m = len(rows)
    objective = [mpq(v) for v in objective]

    # Columns: x+ (n), x- (n), slacks (m), then artificials as needed.
    def widen(row):
        return [mpq(v) for v in row] + [-mpq(v) for v in row]

    A = []
    b = []
    for row, bi in zip(rows, rhs, strict=True):
        r = widen(row) + [ZERO] * m
        r[2 * n + len(A)] = ONE
        bi = mpq(bi)
        if bi < 0:
            r = [-a for a in r]
            bi = -bi
        A.append(r)
        b.append(bi)

    base = 2 * n + m
    art_rows = [i for i in range(m) if A[i][2 * n + i] < 0]
    nart = len(art_rows)
    ncols = base + nart
    for r in A:
        r.extend([ZERO] * nart)
    basis = [0] * m
    for i in range(m):
        if A[i][2 * n + i] > 0:
            basis[i] = 2 * n + i
    for k, i in enumerate(art_rows):
        A[i][base + k] = ONE
        basis[i] = base + k

    T = [A[i] + [b[i]] for i in range(m)]

    if nart:
        # Phase 1: maximize -(sum of artificials).
        obj = [ZERO] * (ncols + 1)
        for j in range(base, ncols):
            obj[j] = -ONE
        T.append(obj)
        for i in range(m):
            if basis[i] >= base:
                T[m] = [a + c for a, c in zip(T[m], T[i])]
        if _simplex(T, basis, ncols) != OPTIMAL or T[m][-1] != 0:
            return LPResult(INFEASIBLE, None, None)
        # Pivot any artificial still basic (at zero) out, or drop its row.
        for i in range(m):
            if basis[i] >= base:
                col = next((j for j in range(base) if T[i][j] != 0), None)
                if col is not None:
                    _pivot(T, basis, i, col)
        keep = [i for i in range(m) if basis[i] < base]
        T = [T[i] for i in keep]
        basis = [basis[i] for i in keep]
        m = len(T)
        T = [row[:base] + row[-1:] for row in T]
        ncols = base

    # Phase 2 objective row: reduced costs of the real objective.
    obj = [ZERO] * (ncols + 1)
    for j in range(n):
        obj[j] = objective[j]
        obj[n + j] = -objective[j]
    T.append(obj)
    for i in range(m):
        j = basis[i]
        if T[m][j] != 0:
            f = T[m][j]
            T[m] = [a - f * c for a, c in zip(T[m], T[i])]

    status = _simplex(T, basis, ncols)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, None, None)

    xs = [ZERO] * ncols
    for i in range(m):
        xs[basis[i]] = T[i][-1]
    x = tuple(xs[j] - xs[n + j] for j in range(n))
    value = sum(c * v for c, v in zip(objective, x))
    return LPResult(OPTIMAL, x, value)


def feasible(rows, rhs) -> bool:
    """Exact feasibility of {x : rows x <= rhs}."""
    n = len(rows[0]) if rows else 0
    res = solve_lp_max([ZERO] * n, rows, rhs)
    return res.status == OPTIMAL
