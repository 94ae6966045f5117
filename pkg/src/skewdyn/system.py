"""Skew-linear automorphisms f(x, y) = (x + 1, A(x) y) of A^1 x A^N."""

from dataclasses import dataclass
from fractions import Fraction

from .algebra import NotUnimodularError, PolyMatrix, polymatrix_det


class InvalidSystemError(ValueError):
    """The matrix does not lie in GL_N(Q[x])."""

    def __init__(self, determinant):
        self.determinant = determinant
        if determinant.is_zero():
            msg = "determinant is zero"
        else:
            msg = f"determinant {determinant} is not constant"
        super().__init__(msg)


@dataclass(frozen=True)
class SkewSystem:
    A: PolyMatrix
    det_constant: Fraction

    @property
    def n(self):
        return self.A.n

    @property
    def degree(self):
        """Largest x-degree among the entries of A."""
        return max(self.A.max_degree, 0)

    def is_constant_diagonal(self):
        return self.A.is_constant() and self.A.is_diagonal()

    def diagonal_entries(self):
        return [self.A[i, i].coeff(0) for i in range(self.n)]


@dataclass(frozen=True)
class PointState:
    x: Fraction
    y: tuple

    @classmethod
    def of(cls, x, y):
        return cls(Fraction(x), tuple(Fraction(v) for v in y))


@dataclass(frozen=True)
class GaugeTransform:
    """A matrix T in GL_N(Q[x]); acts by (x, y) -> (x, T(x) y)."""

    T: PolyMatrix

    def __post_init__(self):
        d = polymatrix_det(self.T)
        if d.is_zero() or not d.is_constant():
            raise NotUnimodularError(d)

    def inverse(self):
        return GaugeTransform(self.T.inverse())

    def __matmul__(self, other):
        return GaugeTransform(self.T * other.T)

    @classmethod
    def identity(cls, n):
        return cls(PolyMatrix.identity(n))


def validate(n, matrix):
    """Check that ``matrix`` is an n x n element of GL_n(Q[x])."""
    if not isinstance(matrix, PolyMatrix):
        matrix = PolyMatrix(matrix)
    if matrix.n != n:
        raise ValueError(f"matrix is {matrix.n}x{matrix.n}, expected {n}x{n}")
    d = polymatrix_det(matrix)
    if d.is_zero() or not d.is_constant():
        raise InvalidSystemError(d)
    return SkewSystem(matrix, d.lead)


def system(matrix):
    """Shorthand for :func:`validate` with the dimension read off the matrix."""
    if not isinstance(matrix, PolyMatrix):
        matrix = PolyMatrix(matrix)
    return validate(matrix.n, matrix)


def apply(s, p):
    Ax = s.A(p.x)
    y = tuple(sum((a * b for a, b in zip(row, p.y)), Fraction(0)) for row in Ax)
    return PointState(p.x + 1, y)


def orbit(s, p, steps):
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    out = [p]
    for _ in range(steps):
        p = apply(s, p)
        out.append(p)
    return out


def cocycle(s, m):
    """A(x+m-1) ... A(x+1) A(x), so that f^m(x, y) = (x + m, cocycle(x) y)."""
    if m < 1:
        raise ValueError("cocycle needs m >= 1")
    C = s.A
    for k in range(1, m):
        C = s.A.shift(k) * C
    return C


def gauge_conjugate(s, T):
    """System with matrix T(x+1)^{-1} A(x) T(x)."""
    if isinstance(T, GaugeTransform):
        T = T.T
    Tinv_next = T.shift(1).inverse()
    return validate(s.n, Tinv_next * (s.A * T))


def power_system(s, m):
    """The system whose unit step is f^m, in the rescaled base coordinate x' = x/m.

    Its matrix is cocycle(m)(m x'); a skew line w'(x') of it corresponds to
    the f^m-invariant line w(x) = w'(x/m) of ``s``.
    """
    return validate(s.n, cocycle(s, m).scale(m))


def pullback_poly(s, P, m=1):
    """P composed with f^m for m >= 0."""
    if m == 0:
        return P
    return P.substitute(m, cocycle(s, m))


def pushforward_poly(s, P, m):
    """P composed with f^{-m}; negative m gives the pullback P o f^{|m|}."""
    if m == 0:
        return P
    if m < 0:
        return pullback_poly(s, P, -m)
    # f^{-m}(x, y) = (x - m, C(x - m)^{-1} y) with C the m-step cocycle
    Cinv = cocycle(s, m).shift(-m).inverse()
    return P.substitute(-m, Cinv)


__all__ = [
    "InvalidSystemError", "SkewSystem", "PointState", "GaugeTransform",
    "validate", "system", "apply", "orbit", "cocycle", "gauge_conjugate",
    "power_system", "pullback_poly", "pushforward_poly",
]
