"""Rational eigenvalues of a rectangular linear pencil P0 - c*P1.

Both invariant searches reduce to the same question: for which rational c
does ``P0 - c*P1`` (a tall matrix with more rows than columns) have a
nontrivial kernel, and what is that kernel?

For real c the pencil loses column rank exactly when the Gram determinant
``g(c) = det((P0 - cP1)^T (P0 - cP1))`` vanishes (Cauchy-Binet writes g as
a sum of squared maximal minors).  So the rational eigenvalues are among
the rational roots of g.  g is computed exactly by evaluating the Gram
determinant at 2n + 1 integer points and interpolating.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .algebra import Poly, exact_kernel, rational_roots
from .algebra.linalg import det, rank as matrix_rank
from .algebra.roots import int_poly_gcd, squarefree_part


@dataclass(frozen=True)
class PencilReport:
    """Diagnostics from one pencil solve.

    ``rank`` is the column rank over the function field Q(c).  When it is
    smaller than ``columns`` every c is an eigenvalue (``family`` is set)
    and no candidate list is produced.  ``extension_poly`` is divisible by
    the minimal polynomial of every irrational eigenvalue.
    """

    degree: object
    columns: int
    rank: int
    candidate_poly: Poly
    extension_poly: Poly
    eigenspaces: tuple  # ((c, (vec, ...)), ...) sorted by c
    verified: tuple = ()

    @property
    def family(self):
        return self.rank < self.columns or any(len(b) > 1 for _, b in self.eigenspaces)


def _scale_pair(P0, P1):
    den = 1
    for M in (P0, P1):
        for row in M:
            for v in row:
                if isinstance(v, Fraction):
                    den = lcm(den, v.denominator)
    return ([[int(v * den) for v in row] for row in P0],
            [[int(v * den) for v in row] for row in P1])


def _gram(A, B):
    """A^T B for integer matrices given as row lists."""
    cols_a = list(zip(*A))
    cols_b = list(zip(*B))
    return [[sum(a * b for a, b in zip(ca, cb)) for cb in cols_b] for ca in cols_a]


def _sample_points(k):
    pts = [0]
    i = 1
    while len(pts) < k:
        pts.append(i)
        if len(pts) < k:
            pts.append(-i)
        i += 1
    return pts


def interpolate(points, values):
    """Exact Newton interpolation through (points[i], values[i])."""
    n = len(points)
    coef = [Fraction(v) for v in values]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (points[i] - points[i - j])
    p = Poly.constant(coef[-1])
    for i in range(n - 2, -1, -1):
        p = p * Poly((-points[i], 1)) + coef[i]
    return p


def gram_determinant(P0, P1):
    """g(c) = det((P0 - cP1)^T (P0 - cP1)) as an exact polynomial in c."""
    A, B = _scale_pair(P0, P1)
    n = len(A[0])
    G0 = _gram(A, A)
    G2 = _gram(B, B)
    AB = _gram(A, B)
    G1 = [[-(AB[i][j] + AB[j][i]) for j in range(n)] for i in range(n)]
    pts = _sample_points(2 * n + 1)
    vals = []
    for t in pts:
        t2 = t * t
        G = [[G0[i][j] + t * G1[i][j] + t2 * G2[i][j] for j in range(n)] for i in range(n)]
        vals.append(det(G))
    return interpolate(pts, vals)


def _projected_determinant(A, B, rng):
    """det(R (A - cB)) for a random small integer R, as a polynomial in c."""
    rows, n = len(A), len(A[0])
    R = [[rng.randint(-3, 3) for _ in range(rows)] for _ in range(n)]
    RA = [[sum(r * A[k][j] for k, r in enumerate(Rrow) if r) for j in range(n)] for Rrow in R]
    RB = [[sum(r * B[k][j] for k, r in enumerate(Rrow) if r) for j in range(n)] for Rrow in R]
    pts = _sample_points(n + 1)
    vals = [det([[a - t * b for a, b in zip(ra, rb)] for ra, rb in zip(RA, RB)]) for t in pts]
    return interpolate(pts, vals)


def _function_field_rank(A, B):
    n = len(A[0])
    best = 0
    for t in _sample_points(n + 1):
        M = [[a - t * b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]
        best = max(best, matrix_rank(M))
        if best == n:
            break
    return best


def solve_pencil(P0, P1, label=None, projections=2, seed=0):
    """Rational eigenvalues and integer kernel bases of the pencil ``P0 - c*P1``."""
    n = len(P0[0]) if P0 else 0
    if n == 0:
        return PencilReport(label, 0, 0, Poly.constant(1), Poly.constant(1), ())
    A, B = _scale_pair(P0, P1)
    g = gram_determinant(A, B)
    if g.is_zero():
        r = _function_field_rank(A, B)
        return PencilReport(label, n, r, g, Poly(), ())
    roots = sorted(rational_roots(g))
    spaces = []
    for c in roots:
        M = [[a - c * b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]
        basis = exact_kernel(M, n)
        if basis:
            spaces.append((c, tuple(basis)))
    ext = _extension_factor(g, roots, A, B, projections, seed)
    return PencilReport(label, n, n, g, ext, tuple(spaces))


def _extension_factor(g, roots, A, B, projections, seed):
    h = squarefree_part(g.integer_coeffs())
    hp = Poly(h)
    for r in roots:
        hp = hp.exact_div(Poly((-r, 1)))
    if hp.degree <= 0:
        return Poly.constant(1)
    rng = random.Random(seed)
    h = hp.integer_coeffs()
    for _ in range(projections):
        d = _projected_determinant(A, B, rng)
        if d.is_zero():
            continue
        h = int_poly_gcd(h, d.integer_coeffs())
        if len(h) <= 1:
            return Poly.constant(1)
    return Poly(h)
