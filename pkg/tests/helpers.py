"""Shared constructors for tests."""

import random
from fractions import Fraction

from skewdyn.algebra import Poly, PolyMatrix
from skewdyn.system import gauge_conjugate, system

X = Poly.x()


def P(*coeffs):
    return Poly(coeffs)


def mat(rows):
    """Matrix from entries given as ints, Fractions or coefficient lists."""
    return PolyMatrix([[Poly(e) if isinstance(e, (list, tuple)) else e for e in row] for row in rows])


def sysm(rows):
    return system(mat(rows))


RIGID = [[1, 1], [[0, 1], [1, 1]]]


def rigid():
    return sysm(RIGID)


def random_poly(rng, degree, lo=-3, hi=3):
    return Poly([rng.randint(lo, hi) for _ in range(degree + 1)])


def elementary(rng, n, degree):
    """I + p(x) E_ij with i != j, deg p <= degree."""
    i, j = rng.sample(range(n), 2)
    rows = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
    M = PolyMatrix(rows)
    entries = [[M[a, b] for b in range(n)] for a in range(n)]
    entries[i][j] = random_poly(rng, rng.randint(0, degree))
    return PolyMatrix(entries)


def random_gauge(rng, n=2, factors=4, degree=2):
    T = PolyMatrix.identity(n)
    for _ in range(rng.randint(1, factors)):
        T = T * elementary(rng, n, degree)
    return T


NONZERO = [Fraction(v) for v in (1, -1, 2, -2, 3, -3, 4, Fraction(1, 2), 5, Fraction(-1, 3))]


def random_diagonal(rng, n=2, pool=NONZERO):
    return sysm([[rng.choice(pool) if i == j else 0 for j in range(n)] for i in range(n)])


def random_conjugated(rng, n=2, factors=4, degree=2):
    """(diagonal system, gauge T, conjugated system) with A = T(x+1) diag T(x)^{-1}."""
    base = random_diagonal(rng, n)
    T = random_gauge(rng, n, factors, degree)
    # gauge_conjugate(base, T^{-1}) = T(x+1) base T(x)^{-1}
    s = gauge_conjugate(base, T.inverse())
    return base, T, s


def rng_for(seed):
    return random.Random(seed)
