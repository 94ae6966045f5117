"""Integer matrices: Smith and Hermite normal forms, integer kernels.

Matrices are plain lists of lists of Python ints.
"""

from math import gcd


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(A, B):
    cols = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in A]


def int_det(M):
    from .linalg import det
    return det(M)


def smith_normal_form(M):
    """Return ``(U, D, V)`` with ``U*M*V == D``.

    ``U`` and ``V`` are unimodular, ``D`` is diagonal with nonnegative
    entries ``d1 | d2 | ...``.  Works by repeated gcd reduction of rows and
    columns around the smallest nonzero entry; no randomisation.
    """
    rows = len(M)
    cols = len(M[0])
    D = [list(r) for r in M]
    U = identity(rows)
    V = identity(cols)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for R in D:
            R[i], R[j] = R[j], R[i]
        for R in V:
            R[i], R[j] = R[j], R[i]

    def add_row(dst, src, k):
        # row_dst += k * row_src
        D[dst] = [a + k * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, k):
        for R in D:
            R[dst] += k * R[src]
        for R in V:
            R[dst] += k * R[src]

    for t in range(min(rows, cols)):
        while True:
            # move the smallest nonzero entry of the trailing block to (t, t)
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    v = D[i][j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = D[t][t]
            clean = True
            for i in range(t + 1, rows):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    if D[i][t]:
                        clean = False
            for j in range(t + 1, cols):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    if D[t][j]:
                        clean = False
            if not clean:
                continue
            # enforce divisibility of the trailing block by the pivot
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if D[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            D[t] = [-v for v in D[t]]
            U[t] = [-v for v in U[t]]
    return U, D, V


def smith_diagonal(M):
    _, D, _ = smith_normal_form(M)
    return [D[i][i] for i in range(min(len(D), len(D[0])))]


def hermite_normal_form(rows):
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Returns the nonzero rows only: pivots positive, strictly increasing in
    column, entries above each pivot reduced into ``[0, pivot)``.
    """
    if not rows:
        return []
    H = [list(r) for r in rows]
    m, n = len(H), len(H[0])
    r = 0
    for c in range(n):
        if r == m:
            break
        # gcd-combine column c of rows r.. into row r
        for i in range(r + 1, m):
            a, b = H[r][c], H[i][c]
            if b == 0:
                continue
            g, s, t = _xgcd(a, b)
            ra, rb = H[r], H[i]
            H[r] = [s * x + t * y for x, y in zip(ra, rb)]
            H[i] = [(a // g) * y - (b // g) * x for x, y in zip(ra, rb)]
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
        p = H[r][c]
        for i in range(r):
            q = H[i][c] // p
            if q:
                H[i] = [x - q * y for x, y in zip(H[i], H[r])]
        r += 1
    return [row for row in H[:r]]


def _xgcd(a, b):
    """(g, s, t) with s*a + t*b == g == gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def integer_kernel(M, ncols=None):
    """Lattice basis (as rows) of ``{v in Z^n : M v = 0}``."""
    if ncols is None:
        ncols = len(M[0])
    if not M:
        return identity(ncols)
    _, D, V = smith_normal_form(M)
    r = sum(1 for i in range(min(len(D), ncols)) if D[i][i])
    return [[V[i][j] for i in range(ncols)] for j in range(r, ncols)]
