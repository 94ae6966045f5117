"""Reduction of 2-dimensional systems to a constant diagonal matrix.

Pipeline for ``straighten``:

1. Look for a skew line (c, v).  Complete v to a determinant-one gauge T0;
   conjugating by T0 makes A upper triangular with constant diagonal
   (c, det/c) and some polynomial b(x) in the corner.
2. Kill the corner with the shear [[1, u], [0, 1]], where u solves
   a2*u(x+1) - a1*u(x) = b(x).
3. If no line exists up to the bound, look for a pair of lines swapped by
   f, i.e. a skew line of the two-step map.  In the basis of that pair the
   matrix is constant and anti-diagonal; its eigenvalues are either
   rational (and step 1 applies to the constant matrix) or conjugate
   irrationals, in which case the characteristic polynomial is returned
   as a certificate.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .algebra import Poly, PolyMatrix, poly_bezout, rational_roots
from .invariants import canonical_vector, lines_at_degree, skew_line_reports
from .system import GaugeTransform, gauge_conjugate, power_system


@dataclass(frozen=True)
class Step:
    kind: str          # "line", "off-diagonal", "two-cycle" or "already-diagonal"
    gauge: PolyMatrix
    detail: dict


@dataclass(frozen=True)
class StraightForm:
    B: tuple           # (a1, a2)
    gauge: GaugeTransform
    provenance: tuple  # of Step; their gauges multiply (left to right) to ``gauge``

    def verify(self, s):
        target = PolyMatrix.diagonal(list(self.B))
        if gauge_conjugate(s, self.gauge).A != target:
            return False
        T = PolyMatrix.identity(s.n)
        for step in self.provenance:
            T = T * step.gauge
        return T == self.gauge.T and self.B[0] * self.B[1] == s.det_constant


@dataclass(frozen=True)
class Diagonalized:
    form: StraightForm
    max_degree: int


@dataclass(frozen=True)
class NoInvariantUpToBound:
    max_degree: int


@dataclass(frozen=True)
class ExtensionCertificate:
    """Invariant lines exist only over the field generated by a root of ``poly``."""

    poly: Poly
    max_degree: int
    gauge: GaugeTransform  # brings A to the constant matrix whose char. polynomial is ``poly``


def unimodular_completion(v):
    """2x2 matrix with first column v and determinant 1."""
    v1, v2 = v
    if v1.is_zero() and v2.is_zero():
        raise ValueError("unimodular_completion: zero vector")
    g, p, q = poly_bezout(v1, v2)
    if g != Poly.constant(1):
        raise ValueError(f"unimodular_completion: entries share the factor {g}")
    return PolyMatrix([[v1, -q], [v2, p]])


def triangular_reduce(s, line):
    """Conjugate so that the line becomes the first axis; returns (system, gauge)."""
    if s.n != 2:
        raise ValueError("triangular_reduce needs N = 2")
    if not line.verify(s):
        raise ValueError(f"not a skew line of this system: {line}")
    T0 = unimodular_completion(line.v)
    reduced = gauge_conjugate(s, T0)
    if reduced.A[1, 0] or reduced.A[0, 0] != Poly.constant(line.c):
        raise ArithmeticError("triangular reduction failed")
    return reduced, GaugeTransform(T0)


def solve_off_diagonal(a1, a2, b):
    """u with a2*u(x+1) - a1*u(x) == b(x).

    For a1 != a2 the solution is unique and has the degree of b.  For
    a1 == a2 solutions differ by constants; the one with u(0) = 0 is returned.
    """
    a1, a2 = Fraction(a1), Fraction(a2)
    if a1 == 0 or a2 == 0:
        raise ValueError("a1 and a2 must be nonzero")
    if b.is_zero():
        return Poly()
    d = b.degree
    if a1 != a2:
        # coeff of x^j: (a2 - a1) u_j + a2 * sum_{k>j} C(k, j) u_k
        u = [Fraction(0)] * (d + 1)
        for j in range(d, -1, -1):
            tail = sum((comb(k, j) * u[k] for k in range(j + 1, d + 1)), Fraction(0))
            u[j] = (b.coeff(j) - a2 * tail) / (a2 - a1)
        return Poly(u)
    a = a1
    # a * (u(x+1) - u(x)): coeff of x^j is a * sum_{k>j} C(k, j) u_k
    u = [Fraction(0)] * (d + 2)
    for j in range(d, -1, -1):
        tail = sum((comb(k, j) * u[k] for k in range(j + 2, d + 2)), Fraction(0))
        u[j + 1] = (b.coeff(j) / a - tail) / (j + 1)
    return Poly(u)


def _shear(u):
    return PolyMatrix([[1, u], [0, 1]])


def _choose_line(lines):
    # lowest degree, then larger |c|, then larger c, then lexicographic v
    return min(lines, key=lambda ln: (ln.degree, -abs(ln.c), -ln.c, [p.coeffs for p in ln.v]))


def straighten_with_line(s, line):
    """Steps 1 and 2 of the pipeline for a known skew line."""
    tri, T0 = triangular_reduce(s, line)
    a1 = tri.A[0, 0].coeff(0)
    a2 = tri.A[1, 1].coeff(0)
    b = tri.A[0, 1]
    steps = [Step("line", T0.T, {"c": line.c, "v": line.v})]
    T = T0.T
    if b:
        u = solve_off_diagonal(a1, a2, b)
        U = _shear(u)
        steps.append(Step("off-diagonal", U, {"a1": a1, "a2": a2, "b": b, "u": u}))
        T = T * U
    form = StraightForm((a1, a2), GaugeTransform(T), tuple(steps))
    if not form.verify(s):
        raise ArithmeticError("straightening identity failed")
    return form


def two_cycle_basis(s, w):
    """Gauge whose columns span the line w and its image under f."""
    w = canonical_vector(w)
    img = s.A.shift(-1).apply(tuple(p.shift(-1) for p in w))
    wt = canonical_vector(img)
    T0 = PolyMatrix.from_columns([w, wt])
    return GaugeTransform(T0)


def straighten(s, max_degree):
    """Return a Diagonalized, NoInvariantUpToBound or ExtensionCertificate verdict."""
    if s.n != 2:
        raise ValueError("straighten is implemented for N = 2 only")
    if s.is_constant_diagonal():
        a1, a2 = s.diagonal_entries()
        I = PolyMatrix.identity(2)
        form = StraightForm((a1, a2), GaugeTransform(I), (Step("already-diagonal", I, {}),))
        return Diagonalized(form, max_degree)

    reports = skew_line_reports(s, max_degree, stop_at_first=True)
    lines = [ln for rep in reports for ln in rep.verified]
    if lines:
        return Diagonalized(straighten_with_line(s, _choose_line(lines)), max_degree)

    # pairs of lines exchanged by f: skew lines of f^2 in the rescaled coordinate
    ps = power_system(s, 2)
    reports2 = skew_line_reports(ps, max_degree, stop_at_first=True)
    lines2 = [ln for rep in reports2 for ln in rep.verified]
    if not lines2:
        return NoInvariantUpToBound(max_degree)
    w2 = _choose_line(lines2)
    w = tuple(p.scale(Fraction(1, 2)) for p in w2.v)
    T0 = two_cycle_basis(s, w)
    base = gauge_conjugate(s, T0)
    if not base.A.is_constant():
        raise ArithmeticError("two-cycle basis did not produce a constant matrix")
    M = base.A(0)
    char = Poly((M[0][0] * M[1][1] - M[0][1] * M[1][0], -(M[0][0] + M[1][1]), 1))
    step = Step("two-cycle", T0.T, {"w": canonical_vector(w), "matrix": M})
    if not rational_roots(char):
        return ExtensionCertificate(char, max_degree, T0)
    if base.is_constant_diagonal():
        a1, a2 = base.diagonal_entries()
        form = StraightForm((a1, a2), T0, (step,))
    else:
        inner = straighten_with_line(base, _choose_line(lines_at_degree(base, 0).verified))
        form = StraightForm(inner.B, GaugeTransform(T0.T * inner.gauge.T),
                            (step,) + inner.provenance)
    if not form.verify(s):
        raise ArithmeticError("straightening identity failed")
    return Diagonalized(form, max_degree)


__all__ = [
    "Step", "StraightForm", "Diagonalized", "NoInvariantUpToBound", "ExtensionCertificate",
    "unimodular_completion", "triangular_reduce", "solve_off_diagonal",
    "straighten", "straighten_with_line", "two_cycle_basis",
]
