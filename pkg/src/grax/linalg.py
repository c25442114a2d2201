"""Exact dense linear algebra over cyclotomic fields.

Matrices are lists of lists of CycloNum.  Everything is plain Gaussian
elimination; exactness makes pivoting a non-issue beyond nonzero search.
"""

from __future__ import annotations

from grax.cyclotomic import CycloNum

ZERO = CycloNum.from_rational(0)
ONE = CycloNum.from_rational(1)


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = ZERO
            for t in range(k):
                x = a[i][t]
                if not x.is_zero():
                    acc = acc + x * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def mat_identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_det(m):
    n = len(m)
    if n == 0:
        return ONE
    a = [list(row) for row in m]
    det = ONE
    for c in range(n):
        pivot = next((r for r in range(c, n) if not a[r][c].is_zero()), None)
        if pivot is None:
            return ZERO
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            det = -det
        det = det * a[c][c]
        inv = a[c][c].inverse()
        for r in range(c + 1, n):
            if not a[r][c].is_zero():
                f = a[r][c] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def mat_rank(m):
    if not m or not m[0]:
        return 0
    a = [list(row) for row in m]
    rows, cols = len(a), len(a[0])
    rank = 0
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if not a[r][c].is_zero()), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = a[rank][c].inverse()
        a[rank] = [x * inv for x in a[rank]]
        for r in range(rows):
            if r != rank and not a[r][c].is_zero():
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def mat_inverse(m):
    """Inverse of a square matrix; returns None if singular."""
    n = len(m)
    a = [list(row) + list(e) for row, e in zip(m, mat_identity(n))]
    for c in range(n):
        pivot = next((r for r in range(c, n) if not a[r][c].is_zero()), None)
        if pivot is None:
            return None
        a[c], a[pivot] = a[pivot], a[c]
        inv = a[c][c].inverse()
        a[c] = [x * inv for x in a[c]]
        for r in range(n):
            if r != c and not a[r][c].is_zero():
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def mat_adjugate(m):
    """det(m) * m^(-1) for nonsingular m (the classical adjugate)."""
    det = mat_det(m)
    if det.is_zero():
        raise ValueError("adjugate via inverse needs a nonsingular matrix")
    inv = mat_inverse(m)
    return [[det * e for e in row] for row in inv], det


def left_kernel(m):
    """Basis rows of {x : x * m = 0} for an r-by-c matrix."""
    rows = len(m)
    if rows == 0:
        return []
    # x * m = 0  <=>  m^T x^T = 0; row-reduce m^T.
    cols = len(m[0])
    a = [[m[r][c] for r in range(rows)] for c in range(cols)]
    n = rows
    pivots = []
    rank = 0
    for c in range(n):
        pivot = next((r for r in range(rank, len(a)) if not a[r][c].is_zero()), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = a[rank][c].inverse()
        a[rank] = [x * inv for x in a[rank]]
        for r in range(len(a)):
            if r != rank and not a[r][c].is_zero():
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[rank])]
        pivots.append(c)
        rank += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [ZERO] * n
        vec[fc] = ONE
        for r, pc in enumerate(pivots):
            vec[pc] = -a[r][fc]
        basis.append(vec)
    return basis


def solve_right(a, b):
    """Solve x * a = b for row vectors b (list of rows); None if inconsistent."""
    # x * a = b  <=>  a^T x^T = b^T columnwise
    rows = len(a)
    cols = len(a[0]) if rows else 0
    out = []
    at = [[a[r][c] for r in range(rows)] for c in range(cols)]
    for brow in b:
        aug = [list(at[i]) + [brow[i]] for i in range(cols)]
        sol = _solve_aug(aug, rows)
        if sol is None:
            return None
        out.append(sol)
    return out


def _solve_aug(aug, nvars):
    m = len(aug)
    rank = 0
    pivots = []
    for c in range(nvars):
        pivot = next((r for r in range(rank, m) if not aug[r][c].is_zero()), None)
        if pivot is None:
            continue
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        inv = aug[rank][c].inverse()
        aug[rank] = [x * inv for x in aug[rank]]
        for r in range(m):
            if r != rank and not aug[r][c].is_zero():
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[rank])]
        pivots.append(c)
        rank += 1
    for r in range(rank, m):
        if not aug[r][nvars].is_zero():
            return None
    sol = [ZERO] * nvars
    for r, c in enumerate(pivots):
        sol[c] = aug[r][nvars]
    return sol
