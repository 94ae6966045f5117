"""Invariant line subbundles, semi-invariant polynomials and periods.

A skew line is a polynomial vector v(x) with A(x) v(x) = c v(x+1); its
span is a rank-one subbundle carried to itself by f.  A semi-invariant is
a polynomial P with P(x+1, A(x) y) = q P(x, y); its zero set is an
invariant hypersurface.  Both are found degree by degree as the rational
eigenvalues of a pencil built on coefficient spaces (see :mod:`.pencil`).

Completeness holds only up to the degree bounds passed in.

Since y -> A(x) y is linear, pulling back a polynomial that is homogeneous
of degree h in y gives another such polynomial.  The pullback therefore
splits into independent blocks, one per y-degree, and semi-invariants
are searched block by block.
"""

from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb, gcd, lcm

from .algebra import MultiPoly, Poly, bidegree_monomials, monomial_key, poly_gcd
from .pencil import solve_pencil
from .system import pullback_poly, pushforward_poly


@dataclass(frozen=True)
class SkewLine:
    c: Fraction
    v: tuple  # of Poly

    @classmethod
    def canonical(cls, c, v):
        return cls(Fraction(c), canonical_vector(v))

    @property
    def degree(self):
        return max(p.degree for p in self.v)

    def verify(self, s):
        if self.c == 0 or all(p.is_zero() for p in self.v):
            return False
        lhs = s.A.apply(self.v)
        rhs = tuple(p.shift(1) * self.c for p in self.v)
        if lhs != rhs:
            return False
        g = Poly()
        for p in self.v:
            g = poly_gcd(g, p)
        return g == Poly.constant(1)

    def __str__(self):
        return f"c={self.c}, v=({', '.join(str(p) for p in self.v)})"


@dataclass(frozen=True)
class SemiInvariant:
    q: Fraction
    basis: tuple  # of MultiPoly

    def verify(self, s):
        return all(is_semi_invariant(s, P, self.q) for P in self.basis)


def canonical_vector(v):
    """Scale a polynomial vector to integer coefficients with content 1.

    The sign is fixed by making the leading coefficient of the first entry
    of maximal degree positive.
    """
    v = tuple(p if isinstance(p, Poly) else Poly(p) for p in v)
    coeffs = [c for p in v for c in p.coeffs]
    if not any(coeffs):
        return v
    d = lcm(1, *(c.denominator for c in coeffs))
    g = gcd(*(int(c * d) for c in coeffs))
    top = max(p.degree for p in v)
    lead = next(p.lead for p in v if p.degree == top)
    scale = Fraction(d, g) * (1 if lead > 0 else -1)
    return tuple(p * scale for p in v)


def _line_sort_key(line):
    return (line.degree, -abs(line.c), -line.c, [p.coeffs for p in line.v])


# -- skew lines -------------------------------------------------------------

def line_pencil(s, m):
    """Coefficient matrices of v -> A v and v -> v(x+1) on degree-<= m vectors."""
    n, d = s.n, s.degree
    rows = n * (m + d + 1)
    cols = n * (m + 1)
    PA = [[Fraction(0)] * cols for _ in range(rows)]
    PS = [[Fraction(0)] * cols for _ in range(rows)]
    for j in range(n):
        for i in range(m + 1):
            col = j * (m + 1) + i
            for k in range(n):
                for t, a in enumerate(s.A[k, j].coeffs):
                    PA[k * (m + d + 1) + i + t][col] += a
            for t in range(i + 1):
                PS[j * (m + d + 1) + t][col] += comb(i, t)
    return PA, PS


def lines_at_degree(s, m):
    """Pencil solve for skew lines with deg v <= m; returns a PencilReport."""
    PA, PS = line_pencil(s, m)
    report = solve_pencil(PA, PS, label=m)
    found = []
    for c, basis in report.eigenspaces:
        if c == 0:
            continue
        for vec in basis:
            v = tuple(Poly(vec[j * (m + 1):(j + 1) * (m + 1)]) for j in range(s.n))
            line = SkewLine.canonical(c, v)
            if not line.verify(s):
                raise ArithmeticError(f"pencil produced an invalid skew line {line}")
            found.append(line)
    return replace(report, verified=tuple(sorted(found, key=_line_sort_key)))


def skew_line_reports(s, max_degree, stop_at_first=False):
    """Run the pencil for m = 0..max_degree; one report per degree searched.

    Stops early once N lines with pairwise distinct c are known: such lines
    span Q(x)^N and no further line can exist.  With ``stop_at_first`` it
    stops at the first degree where any line appears.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    reports = []
    seen = {}
    for m in range(max_degree + 1):
        rep = lines_at_degree(s, m)
        new = [ln for ln in rep.verified if ln not in seen]
        for ln in new:
            seen[ln] = m
        reports.append(replace(rep, verified=tuple(new)))
        if stop_at_first and seen:
            break
        if len({ln.c for ln in seen}) >= s.n and len(seen) == s.n:
            break
    return reports


def skew_eigenvectors(s, max_degree):
    """All skew lines (c rational) with deg v <= max_degree, deduplicated."""
    out = []
    for rep in skew_line_reports(s, max_degree):
        out.extend(rep.verified)
    return out


# -- semi-invariants ----------------------------------------------------------

def semi_invariant_pencil(s, monomials):
    """Pullback and inclusion matrices on the span of ``monomials``.

    The codomain is indexed by every monomial appearing in a pullback,
    together with the domain monomials themselves.
    """
    images = [pullback_poly(s, MultiPoly(s.n + 1, {mu: 1})) for mu in monomials]
    target = set(monomials)
    for P in images:
        target.update(P.terms)
    target = sorted(target, key=monomial_key)
    index = {mu: i for i, mu in enumerate(target)}
    rows = len(target)
    P0 = [[Fraction(0)] * len(monomials) for _ in range(rows)]
    P1 = [[Fraction(0)] * len(monomials) for _ in range(rows)]
    for j, (mu, P) in enumerate(zip(monomials, images)):
        for e, c in P.terms.items():
            P0[index[e]][j] = c
        P1[index[mu]][j] = Fraction(1)
    return P0, P1


def _eigenspaces_on(s, monomials, label):
    P0, P1 = semi_invariant_pencil(s, monomials)
    report = solve_pencil(P0, P1, label=label)
    result = []
    for q, basis in report.eigenspaces:
        if q == 0:
            continue
        polys = tuple(
            MultiPoly(s.n + 1, {mu: c for mu, c in zip(monomials, vec) if c}).primitive()
            for vec in basis)
        inv = SemiInvariant(q, polys)
        if not inv.verify(s):
            raise ArithmeticError(f"pencil produced an invalid semi-invariant for q={q}")
        result.append(inv)
    result.sort(key=lambda si: -si.q)
    return replace(report, verified=tuple(result))


def semi_invariant_report(s, h, max_x):
    if h < 1 or max_x < 0:
        raise ValueError("need h >= 1 and max_x >= 0")
    monomials = bidegree_monomials(s.n, max_x, h, min_y=h)
    return _eigenspaces_on(s, monomials, (h, max_x))


def semi_invariants(s, h, max_x):
    """Semi-invariants homogeneous of degree h in y with x-degree <= max_x, one entry per q."""
    return list(semi_invariant_report(s, h, max_x).verified)


def semi_invariants_dense(s, max_y, max_x):
    """Direct computation over the full mixed space 1 <= |J| <= max_y (no block split)."""
    monomials = bidegree_monomials(s.n, max_x, max_y, min_y=1)
    return list(_eigenspaces_on(s, monomials, (max_y, max_x)).verified)


def semi_invariants_total(s, max_y, max_x):
    """Merge the per-degree eigenspaces for 1 <= h <= max_y by eigenvalue q."""
    if max_y < 1:
        raise ValueError("max_y must be >= 1")
    merged = {}
    for h in range(1, max_y + 1):
        for inv in semi_invariants(s, h, max_x):
            merged.setdefault(inv.q, []).extend(inv.basis)
    return [SemiInvariant(q, tuple(merged[q])) for q in sorted(merged, reverse=True)]


def is_semi_invariant(s, P, q):
    """Exact test of P(x + 1, A(x) y) == q P(x, y)."""
    return pullback_poly(s, P) == P * Fraction(q)


def period_search(s, P, max_period):
    """Least m in 1..max_period with P o f^{-m} proportional to P, else None."""
    if P.is_zero():
        raise ValueError("period_search needs a nonzero polynomial")
    if max_period < 1:
        raise ValueError("max_period must be >= 1")
    Q = P
    for m in range(1, max_period + 1):
        Q = pushforward_poly(s, Q, 1)
        if Q.proportional_to(P) is not None:
            return m
    return None
