"""Dense linear algebra over either scalar backend.

Matrices are lists of row lists, vectors are flat lists.  Accumulators
start from the integer 0, which interoperates with both backends, and the
inner loops skip exact zeros, which keeps the sparse structure-constant
arithmetic fast enough for the 19-dimensional models.

Elimination pivots on the first nonzero entry for exact scalars and on the
largest magnitude for floats; on a field both are exact, floats just need
the stability.
"""

from __future__ import annotations

from .scalars import is_zero


def vec_zeros(n):
    return [0] * n


def mat_zeros(n, m=None):
    m = n if m is None else m
    return [[0] * m for _ in range(n)]


def mat_identity(n):
    out = mat_zeros(n)
    for i in range(n):
        out[i][i] = 1
    return out


def vec_add(x, y):
    return [a + b for a, b in zip(x, y)]


def vec_sub(x, y):
    return [a - b for a, b in zip(x, y)]


def vec_scale(c, x):
    return [c * a for a in x]


def mat_add(A, B):
    return [vec_add(r, s) for r, s in zip(A, B)]


def mat_sub(A, B):
    return [vec_sub(r, s) for r, s in zip(A, B)]


def mat_scale(c, A):
    return [vec_scale(c, r) for r in A]


def mat_transpose(A):
    return [list(col) for col in zip(*A)]


def mat_vec(A, x):
    out = [0] * len(A)
    for i, row in enumerate(A):
        acc = 0
        for a, b in zip(row, x):
            if a and b:
                acc = acc + a * b
        out[i] = acc
    return out


def mat_mul(A, B):
    n, m = len(A), len(B[0])
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai, Oi = A[i], out[i]
        for t, a in enumerate(Ai):
            if not a:
                continue
            Bt = B[t]
            for j, b in enumerate(Bt):
                if b:
                    Oi[j] = Oi[j] + a * b
    return out


def mat_commutator(A, B):
    return mat_sub(mat_mul(A, B), mat_mul(B, A))


def mat_trace(A):
    acc = 0
    for i in range(len(A)):
        acc = acc + A[i][i]
    return acc


def flatten(A):
    return [x for row in A for x in row]


def _is_exact(rows):
    for row in rows:
        for x in row:
            if isinstance(x, float):
                return False
    return True


def _promote_row(row):
    """Replace bare ints by Fractions so exact elimination never hits int/int."""
    from fractions import Fraction

    return [Fraction(x) if isinstance(x, int) else x for x in row]


def _pivot_row(rows, col, start, exact):
    if exact:
        for r in range(start, len(rows)):
            if rows[r][col]:
                return r
        return None
    best, best_abs = None, 0.0
    for r in range(start, len(rows)):
        a = abs(rows[r][col])
        if a > best_abs:
            best, best_abs = r, a
    if best is None or is_zero(rows[best][col], scale=_row_scale(rows)):
        return None
    return best


def _row_scale(rows):
    s = 0.0
    for row in rows:
        for x in row:
            a = abs(float(x))
            if a > s:
                s = a
    return s if s else 1.0


def _eliminate(aug, ncols, exact):
    """Forward elimination in place over the first `ncols` columns.

    Returns the list of pivot columns.  `aug` rows may be longer than
    `ncols` (augmented right-hand sides ride along).
    """
    pivots = []
    rank = 0
    for col in range(ncols):
        r = _pivot_row(aug, col, rank, exact)
        if r is None:
            continue
        aug[rank], aug[r] = aug[r], aug[rank]
        piv = aug[rank][col]
        prow = aug[rank]
        for r2 in range(len(aug)):
            if r2 == rank:
                continue
            f = aug[r2][col]
            if not f:
                continue
            ratio = f / piv
            row2 = aug[r2]
            for c2 in range(col, len(prow)):
                if prow[c2]:
                    row2[c2] = row2[c2] - ratio * prow[c2]
            row2[col] = 0 * row2[col]  # kill rounding residue exactly
        pivots.append(col)
        rank += 1
        if rank == ncols:
            break
    return pivots


def solve_many(A, rhs_columns):
    """Solve A x = b for several right-hand sides at once.

    A may be overdetermined; requires full column rank.  Returns
    (solutions, inconsistent) where `solutions` is a list of coordinate
    vectors (None where inconsistent) and `inconsistent` lists the indices
    of right-hand sides that are not in the column span.
    """
    n, m = len(A), len(A[0])
    k = len(rhs_columns)
    exact = _is_exact(A) and _is_exact(rhs_columns)
    scale = 1.0 if exact else max(_row_scale(A), _row_scale(rhs_columns))
    aug = [list(A[i]) + [rhs_columns[j][i] for j in range(k)] for i in range(n)]
    if exact:
        aug = [_promote_row(r) for r in aug]
    pivots = _eliminate(aug, m, exact)
    if len(pivots) < m:
        return None, None
    sols, bad = [], []
    for j in range(k):
        x = [0] * m
        ok = True
        for rank, col in enumerate(pivots):
            x[col] = aug[rank][m + j] / aug[rank][col]
        for r in range(len(pivots), n):
            if not is_zero(aug[r][m + j], scale=scale):
                ok = False
                break
        if ok:
            sols.append(x)
        else:
            sols.append(None)
            bad.append(j)
    return sols, bad


def mat_rank(A):
    exact = _is_exact(A)
    rows = [_promote_row(r) if exact else list(r) for r in A]
    return len(_eliminate(rows, len(A[0]), exact))


def nullspace(A):
    """Basis of the kernel of A (columns as unknowns)."""
    n, m = len(A), len(A[0])
    exact = _is_exact(A)
    rows = [_promote_row(r) if exact else list(r) for r in A]
    pivots = _eliminate(rows, m, exact)
    pivot_set = set(pivots)
    free = [c for c in range(m) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [0] * m
        v[fc] = 1
        for rank, col in enumerate(pivots):
            v[col] = -rows[rank][fc] / rows[rank][col]
        basis.append(v)
    return basis


def mat_inverse(A):
    """Inverse of a square matrix; returns None if singular."""
    n = len(A)
    exact = _is_exact(A)
    aug = [list(A[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    if exact:
        aug = [_promote_row(r) for r in aug]
    pivots = _eliminate(aug, n, exact)
    if len(pivots) < n:
        return None
    inv = mat_zeros(n)
    for rank, col in enumerate(pivots):
        piv = aug[rank][col]
        for j in range(n):
            inv[col][j] = aug[rank][n + j] / piv
    return inv


def gram_matrix(g, vectors):
    """Pairwise inner products g(v_i, v_j) for a list of coordinate vectors."""
    gv = [mat_vec(g, v) for v in vectors]
    out = mat_zeros(len(vectors))
    for i, vi in enumerate(vectors):
        for j, gvj in enumerate(gv):
            acc = 0
            for a, b in zip(vi, gvj):
                if a and b:
                    acc = acc + a * b
            out[i][j] = acc
    return out


def bilinear(g, x, y):
    """Evaluate the bilinear form with matrix g on vectors x, y."""
    acc = 0
    for a, b in zip(x, mat_vec(g, y)):
        if a and b:
            acc = acc + a * b
    return acc
