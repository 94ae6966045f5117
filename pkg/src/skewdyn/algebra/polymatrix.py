"""Square matrices with polynomial entries."""

from fractions import Fraction

from .poly import Poly


class NotUnimodularError(ValueError):
    """Raised when a matrix is not invertible over Q[x]."""

    def __init__(self, determinant, message=None):
        self.determinant = determinant
        super().__init__(message or f"determinant {determinant} is not a nonzero constant")


def _to_poly(e):
    if isinstance(e, Poly):
        return e
    if isinstance(e, (list, tuple)):
        return Poly(e)
    return Poly.constant(e)


class PolyMatrix:
    """Immutable n x n matrix over Q[x]."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(_to_poly(e) for e in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("PolyMatrix must be square and non-empty")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries):
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols):
        n = len(cols)
        return cls([[cols[j][i] for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "PolyMatrix([" + ", ".join(
            "[" + ", ".join(str(e) for e in row) + "]" for row in self.rows) + "])"

    @property
    def max_degree(self):
        return max(e.degree for row in self.rows for e in row)

    def is_constant(self):
        return all(e.is_constant() for row in self.rows for e in row)

    def is_diagonal(self):
        return all(not self.rows[i][j] for i in range(self.n) for j in range(self.n) if i != j)

    def map(self, fn):
        return PolyMatrix([[fn(e) for e in row] for row in self.rows])

    def shift(self, a):
        """Return M(x + a)."""
        return self.map(lambda e: e.shift(a))

    def scale(self, a):
        """Return M(a*x)."""
        return self.map(lambda e: e.scale(a))

    def __call__(self, value):
        return [[e(value) for e in row] for row in self.rows]

    def __add__(self, other):
        return PolyMatrix([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return PolyMatrix([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            return self.map(lambda e: e * other)
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        n = self.n
        cols = [other.column(j) for j in range(n)]
        out = []
        for row in self.rows:
            new = []
            for col in cols:
                acc = Poly()
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                new.append(acc)
            out.append(new)
        return PolyMatrix(out)

    __rmul__ = __mul__

    def apply(self, vec):
        """Matrix times a vector of polynomials (or rationals)."""
        out = []
        for row in self.rows:
            acc = Poly()
            for a, b in zip(row, vec):
                acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def transpose(self):
        return PolyMatrix([self.column(j) for j in range(self.n)])

    def minor(self, i, j):
        return [[e for jj, e in enumerate(row) if jj != j]
                for ii, row in enumerate(self.rows) if ii != i]

    def det(self):
        return polymatrix_det(self)

    def inverse(self):
        return polymatrix_inverse(self)


def _det_grid(grid):
    """Bareiss determinant of a square grid of Poly; divisions are exact."""
    n = len(grid)
    if n == 0:
        return Poly.constant(1)
    if n == 1:
        return grid[0][0]
    if n == 2:
        return grid[0][0] * grid[1][1] - grid[0][1] * grid[1][0]
    A = [list(r) for r in grid]
    sign = 1
    prev = Poly.constant(1)
    for k in range(n - 1):
        if not A[k][k]:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return Poly()
        p = A[k][k]
        for i in range(k + 1, n):
            f = A[i][k]
            for j in range(k + 1, n):
                A[i][j] = (p * A[i][j] - f * A[k][j]).exact_div(prev)
            A[i][k] = Poly()
        prev = p
    return A[n - 1][n - 1] * sign


def polymatrix_det(M):
    """Exact determinant of a polynomial matrix."""
    return _det_grid(M.rows)


def adjugate(M):
    n = M.n
    if n == 1:
        return PolyMatrix([[1]])
    cof = [[_det_grid(M.minor(i, j)) * (-1 if (i + j) % 2 else 1) for j in range(n)]
           for i in range(n)]
    return PolyMatrix(cof).transpose()


def polymatrix_inverse(M):
    """Inverse of a matrix in GL_n(Q[x]) as adjugate / det.

    Raises :class:`NotUnimodularError` if the determinant is zero or not constant.
    """
    d = polymatrix_det(M)
    if d.is_zero() or not d.is_constant():
        raise NotUnimodularError(d)
    return adjugate(M) * (1 / d.lead)
