"""Fraction-free exact linear algebra over the rationals.

All routines first scale each row to integers (which does not change the
row space) and then run Bareiss-style elimination, so every intermediate
entry is a minor of the scaled input and no rational arithmetic is needed.
"""

from fractions import Fraction
from math import gcd, lcm


def integer_rows(M):
    """Scale each row of a rational matrix to a primitive integer row."""
    out = []
    for row in M:
        row = [c if isinstance(c, int) else Fraction(c) for c in row]
        d = lcm(1, *(c.denominator for c in row if isinstance(c, Fraction)))
        ints = [int(c * d) for c in row]
        g = gcd(*ints)
        if g > 1:
            ints = [c // g for c in ints]
        out.append(ints)
    return out


def bareiss_rref(M):
    """Fraction-free reduced row echelon form of an integer matrix.

    Uses the Bareiss-Montante update ``r_i <- (p*r_i - r_i[c]*r_k) / p_prev``
    on every non-pivot row, so at the end every pivot entry equals the same
    integer ``D`` (the last pivot) and the pivot columns form ``D`` times the
    identity.

    Returns ``(R, pivots, D)``; ``R`` holds only the nonzero rows.
    """
    R = [list(r) for r in M]
    rows = len(R)
    cols = len(R[0]) if rows else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = None
        best = None
        for i in range(r, rows):
            v = R[i][c]
            if v:
                # smallest pivot keeps intermediate entries short
                size = abs(v)
                if best is None or size < best:
                    piv, best = i, size
                    if size == 1:
                        break
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        prow = R[r]
        p = prow[c]
        for i in range(rows):
            if i == r:
                continue
            row = R[i]
            f = row[c]
            if f == 0:
                if p != prev:
                    R[i] = [(p * v) // prev for v in row]
                continue
            R[i] = [(p * v - f * w) // prev for v, w in zip(row, prow)]
        pivots.append(c)
        prev = p
        r += 1
    return R[:r], pivots, prev


def rank(M):
    if not M or not M[0]:
        return 0
    return len(bareiss_rref(integer_rows(M))[1])


def _normalize(vec):
    g = gcd(*vec)
    if g == 0:
        return tuple(vec)
    for v in vec:
        if v:
            if v < 0:
                g = -g
            break
    return tuple(v // g for v in vec)


def exact_kernel(M, ncols=None):
    """Basis of the right null space of a rational matrix.

    Each basis vector is an integer tuple with content 1 whose first nonzero
    entry is positive.  Vectors are listed in increasing order of their free
    column, and each one vanishes on every other free column.
    """
    if ncols is None:
        ncols = len(M[0]) if M else 0
    if not M:
        return [_normalize([1 if j == i else 0 for j in range(ncols)]) for i in range(ncols)]
    R, pivots, D = bareiss_rref(integer_rows(M))
    pivset = set(pivots)
    basis = []
    for j in range(ncols):
        if j in pivset:
            continue
        vec = [0] * ncols
        vec[j] = D
        for row, pc in zip(R, pivots):
            vec[pc] = -row[j]
        basis.append(_normalize(vec))
    return basis


def det(M):
    """Determinant of a square integer matrix by Bareiss elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        p = A[k][k]
        rowk = A[k]
        for i in range(k + 1, n):
            rowi = A[i]
            f = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (p * rowi[j] - f * rowk[j]) // prev
            rowi[k] = 0
        prev = p
    return sign * A[n - 1][n - 1]


def mat_vec(M, v):
    return [sum(a * b for a, b in zip(row, v)) for row in M]


def transpose(M):
    return [list(col) for col in zip(*M)]


def mat_mul(A, B):
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]
