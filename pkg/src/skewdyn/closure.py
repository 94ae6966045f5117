"""Zariski geometry of orbits at bounded degree.

``density_probe`` computes every polynomial of bidegree <= (E, D) that
vanishes on an initial stretch of an orbit.  The remaining functions treat
constant diagonal systems, where the fiber dynamics is the cyclic group
generated by diag(a):

* the relation lattice {I : a^I = 1} gives the binomial equations of the
  closure of the orbit of b under that group;
* the torsion order of Z^n / lattice is the number of connected
  components of the closure of the cyclic group.

The group computed here is the closure of <diag(a)>, which is contained in
the stabiliser group of all invariant subvarieties; its component count
is what period bounds are checked against.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod

from sympy import factorint

from .algebra import MultiPoly, bidegree_monomials, exact_kernel
from .algebra.smith import hermite_normal_form, integer_kernel, smith_normal_form
from .invariants import is_semi_invariant
from .system import orbit


class InsufficientPointsError(ValueError):
    def __init__(self, required, given):
        self.required = required
        self.given = given
        super().__init__(
            f"density probe needs at least {required} orbit points "
            f"(one per monomial), got {given}")


class NotDiagonalError(ValueError):
    """The operation only applies to constant diagonal systems."""


@dataclass(frozen=True)
class VanishingBasis:
    max_x: int
    max_y: int
    points_used: int
    monomials: tuple
    basis: tuple  # of MultiPoly


@dataclass(frozen=True)
class RelationLattice:
    n: int
    basis: tuple  # of int tuples, Hermite reduced

    @property
    def rank(self):
        return len(self.basis)


@dataclass(frozen=True)
class ClosureDescription:
    lattice: RelationLattice
    binomials: tuple  # of MultiPoly
    dimension: int
    components: int
    zero_coordinates: tuple = ()


def monomial_count(n, max_x, max_y):
    return (max_x + 1) * comb(max_y + n, n)


def density_probe(s, start, points, max_x, max_y):
    """Kernel of the evaluation matrix of x^i y^J (i <= max_x, |J| <= max_y) on the orbit."""
    if max_x < 0 or max_y < 0:
        raise ValueError("degree bounds must be nonnegative")
    required = monomial_count(s.n, max_x, max_y)
    if points < required:
        raise InsufficientPointsError(required, points)
    monos = bidegree_monomials(s.n, max_x, max_y)
    pts = orbit(s, start, points - 1)
    rows = []
    for p in pts:
        coords = (p.x,) + p.y
        powers = [[Fraction(1)] for _ in coords]
        row = []
        for e in monos:
            v = Fraction(1)
            for k, ex in enumerate(e):
                if ex:
                    pw = powers[k]
                    while len(pw) <= ex:
                        pw.append(pw[-1] * coords[k])
                    v *= pw[ex]
            row.append(v)
        rows.append(row)
    kernel = exact_kernel(rows, len(monos))
    basis = tuple(
        MultiPoly(s.n + 1, {e: c for e, c in zip(monos, vec) if c}).primitive() for vec in kernel)
    return VanishingBasis(max_x, max_y, points, tuple(monos), basis)


def _prime_exponents(q):
    q = Fraction(q)
    out = dict(factorint(abs(q.numerator)))
    for p, e in factorint(q.denominator).items():
        out[p] = out.get(p, 0) - e
    out.pop(1, None)
    return {p: e for p, e in out.items() if e}


def power_product(a, I):
    return prod((Fraction(x) ** k for x, k in zip(a, I)), start=Fraction(1))


def relation_lattice(a):
    """Lattice of integer vectors I with prod a_i^I_i == 1."""
    a = [Fraction(v) for v in a]
    if any(v == 0 for v in a):
        raise ValueError("relation_lattice needs nonzero entries")
    n = len(a)
    factored = [_prime_exponents(v) for v in a]
    primes = sorted(set().union(*factored))
    constraints = [[f.get(p, 0) for f in factored] + [0] for p in primes]
    signs = [1 if v < 0 else 0 for v in a]
    if any(signs):
        # sum of exponents on negative entries must be even: sum s_i I_i - 2t = 0
        constraints.append(signs + [-2])
    if constraints:
        kernel = integer_kernel(constraints, n + 1)
        gens = [row[:n] for row in kernel]
    else:
        gens = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    basis = tuple(tuple(r) for r in hermite_normal_form(gens) if any(r))
    for row in basis:
        if power_product(a, row) != 1:
            raise ArithmeticError(f"relation {row} does not hold")
    return RelationLattice(n, basis)


def component_count(lattice):
    """Torsion order of Z^n / lattice: product of the nonzero elementary divisors."""
    if not lattice.basis:
        return 1
    _, D, _ = smith_normal_form([list(r) for r in lattice.basis])
    return prod(D[i][i] for i in range(min(len(D), len(D[0]))) if D[i][i])


def binomial_closure(a, b, check_steps=10):
    """Binomial equations for the closure of {diag(a)^k b} in the fiber."""
    a = [Fraction(v) for v in a]
    b = [Fraction(v) for v in b]
    if len(a) != len(b):
        raise ValueError("a and b must have the same length")
    n = len(a)
    support = [i for i in range(n) if b[i] != 0]
    zeros = tuple(i for i in range(n) if b[i] == 0)
    sub = relation_lattice([a[i] for i in support])
    nvars = n + 1
    binomials = []
    for i in zeros:
        binomials.append(MultiPoly.var(nvars, i + 1))
    full_rows = []
    for row in sub.basis:
        I = [0] * n
        for k, i in enumerate(support):
            I[i] = row[k]
        full_rows.append(tuple(I))
        plus = (0,) + tuple(max(v, 0) for v in I)
        minus = (0,) + tuple(max(-v, 0) for v in I)
        coef = power_product(b, I)
        binomials.append(MultiPoly(nvars, {plus: 1}) - MultiPoly(nvars, {minus: coef}))
    point = list(b)
    for _ in range(check_steps + 1):
        for P in binomials:
            if P(0, point) != 0:
                raise ArithmeticError(f"binomial {P} does not vanish on the orbit")
        point = [ai * yi for ai, yi in zip(a, point)]
    lattice = RelationLattice(n, tuple(full_rows))
    return ClosureDescription(
        lattice=lattice,
        binomials=tuple(binomials),
        dimension=len(support) - sub.rank,
        components=component_count(sub),
        zero_coordinates=zeros,
    )


__all__ = [
    "InsufficientPointsError", "NotDiagonalError", "VanishingBasis", "RelationLattice",
    "ClosureDescription", "monomial_count", "density_probe", "relation_lattice",
    "component_count", "binomial_closure", "is_semi_invariant", "power_product",
]
