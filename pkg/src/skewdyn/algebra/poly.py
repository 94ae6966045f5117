"""Dense univariate polynomials over the rationals.

Coefficients are stored in ascending degree order with trailing zeros
removed, so two polynomials are equal exactly when their coefficient
tuples are equal.
"""

from fractions import Fraction
from math import gcd, lcm

#: degree reported for the zero polynomial
ZERO_DEGREE = -1


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, str):
        return Fraction(c.strip())
    return Fraction(c)


class Poly:
    """An immutable polynomial in x with :class:`~fractions.Fraction` coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree, c=1):
        return cls([0] * degree + [c])

    # -- basic queries -------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.lead
        if len(rem) <= db:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] / lead
            quot[k] = c
            if c:
                for j, cb in enumerate(other.coeffs):
                    rem[k + j] -= c * cb
        return Poly(quot), Poly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # -- evaluation and substitution ------------------------------------

    def __call__(self, value):
        acc = Fraction(0) if not isinstance(value, Poly) else Poly()
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def shift(self, a):
        """Return p(x + a)."""
        a = _as_fraction(a)
        if a == 0 or self.is_constant():
            return self
        # Horner in the basis (x + a): acc <- acc*(x+a) + c
        acc = []
        for c in reversed(self.coeffs):
            nxt = [Fraction(0)] * (len(acc) + 1)
            for i, v in enumerate(acc):
                nxt[i + 1] += v
                nxt[i] += a * v
            nxt[0] += c
            acc = nxt
        return Poly(acc)

    def scale(self, a):
        """Return p(a*x)."""
        a = _as_fraction(a)
        out, power = [], Fraction(1)
        for c in self.coeffs:
            out.append(c * power)
            power *= a
        return Poly(out)

    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    # -- normalisation --------------------------------------------------

    def monic(self):
        if not self.coeffs:
            return self
        return self * (1 / self.lead)

    def denominator(self):
        return lcm(1, *(c.denominator for c in self.coeffs))

    def integer_coeffs(self):
        """Primitive integer coefficient list with positive leading coefficient."""
        if not self.coeffs:
            return []
        d = self.denominator()
        ints = [int(c * d) for c in self.coeffs]
        g = gcd(*ints)
        if ints[-1] < 0:
            g = -g
        return [c // g for c in ints]


def poly_shift(p, a):
    """Return ``p(x + a)``."""
    return p.shift(a)


def poly_bezout(a, b):
    """Extended Euclid over the rationals.

    Returns ``(g, p, q)`` with ``g`` the monic gcd and ``a*p + b*q == g``.
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("poly_bezout: both inputs are zero")
    r0, r1 = a, b
    s0, s1 = Poly.constant(1), Poly()
    t0, t1 = Poly(), Poly.constant(1)
    while r1:
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    inv = 1 / r0.lead
    return r0 * inv, s0 * inv, t0 * inv


def poly_gcd(a, b):
    if a.is_zero() and b.is_zero():
        return Poly()
    return poly_bezout(a, b)[0]
