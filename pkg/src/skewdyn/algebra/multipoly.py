"""Sparse polynomials in x, y1, ..., yN over the rationals.

An exponent vector is a tuple ``(e_x, e_y1, ..., e_yN)``.  The fixed
monomial order used for display and for building coefficient spaces is
graded lexicographic: total degree first, then the exponent tuple compared
lexicographically with x first.
"""

from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd, lcm

from .poly import Poly


def monomial_key(exps):
    return (sum(exps), exps)


def y_monomials(nvars_y, degree):
    """All y-exponent tuples of total degree ``degree``, in lex order (y1 first)."""
    out = []
    for combo in combinations_with_replacement(range(nvars_y), degree):
        e = [0] * nvars_y
        for j in combo:
            e[j] += 1
        out.append(tuple(e))
    return sorted(out, reverse=True)


def bidegree_monomials(nvars_y, max_x, max_y, min_y=0):
    """Exponent vectors x^i y^J with i <= max_x and min_y <= |J| <= max_y, graded-lex sorted."""
    out = []
    for h in range(min_y, max_y + 1):
        for J in y_monomials(nvars_y, h):
            for i in range(max_x + 1):
                out.append((i,) + J)
    return sorted(out, key=monomial_key)


class MultiPoly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to nonzero Fractions."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    e = tuple(e)
                    if len(e) != nvars:
                        raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
                    clean[e] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, index):
        e = [0] * nvars
        e[index] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def y(cls, n, j):
        """The coordinate y_{j+1} in a system of dimension n."""
        return cls.var(n + 1, j + 1)

    @classmethod
    def from_poly(cls, nvars, p):
        return cls(nvars, {(i,) + (0,) * (nvars - 1): c for i, c in enumerate(p.coeffs)})

    # -- queries -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: monomial_key(t[0]))

    @property
    def x_degree(self):
        return max((e[0] for e in self.terms), default=-1)

    @property
    def y_degree(self):
        return max((sum(e[1:]) for e in self.terms), default=-1)

    def y_degrees(self):
        return {sum(e[1:]) for e in self.terms}

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        names = ["x"] + [f"y{j}" for j in range(1, self.nvars)]
        parts = []
        for e, c in reversed(self.sorted_terms()):
            mono = "*".join(
                (n if k == 1 else f"{n}^{k}") for n, k in zip(names, e) if k)
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, b in parts[1:]:
            out += f" {s} {b}"
        return out

    # -- arithmetic --------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = MultiPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x, y):
        """Evaluate at a point (x, y)."""
        point = (x,) + tuple(y)
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for v, k in zip(point, e):
                if k:
                    term *= v ** k
            total += term
        return total

    def substitute(self, shift, L):
        """Return ``P(x + shift, L(x) y)`` for a polynomial matrix ``L``."""
        n = self.nvars - 1
        forms = []
        for j in range(n):
            terms = {}
            for k in range(n):
                for i, c in enumerate(L[j, k].coeffs):
                    e = [0] * self.nvars
                    e[0] = i
                    e[k + 1] = 1
                    terms[tuple(e)] = c
            forms.append(MultiPoly(self.nvars, terms))
        xs = MultiPoly.from_poly(self.nvars, Poly((shift, 1)))
        cache = {}

        def power(idx, k):
            key = (idx, k)
            if key not in cache:
                base = xs if idx < 0 else forms[idx]
                cache[key] = base ** k
            return cache[key]

        total = MultiPoly.zero(self.nvars)
        for e, c in self.terms.items():
            term = MultiPoly.const(self.nvars, c)
            if e[0]:
                term = term * power(-1, e[0])
            for j, k in enumerate(e[1:]):
                if k:
                    term = term * power(j, k)
            total = total + term
        return total

    def proportional_to(self, other):
        """Nonzero rational r with self == r*other, or None."""
        if set(self.terms) != set(other.terms) or not self.terms:
            return None
        items = iter(self.terms.items())
        e0, c0 = next(items)
        d0 = other.terms[e0]
        for e, c in items:
            if c * d0 != other.terms[e] * c0:
                return None
        return c0 / d0

    def primitive(self):
        """Integer content-1 multiple whose leading (graded-lex largest) coefficient is positive."""
        if not self.terms:
            return self
        d = lcm(1, *(c.denominator for c in self.terms.values()))
        ints = {e: int(c * d) for e, c in self.terms.items()}
        g = gcd(*ints.values())
        lead = max(ints, key=monomial_key)
        if ints[lead] < 0:
            g = -g
        return MultiPoly(self.nvars, {e: Fraction(v // g) for e, v in ints.items()})
