"""Rational roots of univariate polynomials.

Any rational root ``a/b`` in lowest terms of a primitive integer polynomial
has ``a`` dividing the constant term and ``b`` dividing the leading
coefficient.  When both are small the divisors are enumerated directly.
Pencil determinants routinely have coefficients with hundreds of digits,
so for those the same bounds drive a p-adic search instead: the roots are
found modulo a good prime, lifted by Newton iteration until the modulus
exceeds ``2*|a|*|b|``, and recovered by rational reconstruction.  Every
returned root is checked by exact evaluation either way.
"""

from fractions import Fraction
from math import gcd, isqrt

from .poly import Poly

# both |constant term| and |leading coeff| at most this -> enumerate divisors
DIVISOR_LIMIT = 10 ** 8


# -- integer coefficient lists (ascending degree) -------------------------

def _trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def _primitive(f):
    f = _trim(f)
    if not f:
        return f
    g = gcd(*f)
    if f[-1] < 0:
        g = -g
    return [c // g for c in f]


def _pseudo_rem(f, g):
    f = list(f)
    dg = len(g) - 1
    lg = g[-1]
    while len(f) - 1 >= dg and f:
        lf = f[-1]
        shift = len(f) - 1 - dg
        f = [c * lg for c in f]
        for i, c in enumerate(g):
            f[i + shift] -= lf * c
        f = _trim(f)
    return f


def int_poly_gcd(f, g):
    """Primitive gcd of two integer polynomials (primitive PRS)."""
    f, g = _primitive(f), _primitive(g)
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _primitive(_pseudo_rem(f, g))
        f, g = g, r
    return _primitive(f)


def _exact_int_div(f, g):
    """Quotient of integer polynomials known to divide exactly over Q."""
    q, r = divmod(Poly(f), Poly(g))
    if r:
        raise ArithmeticError("inexact polynomial division")
    return _primitive(Poly(q.coeffs).integer_coeffs())


def squarefree_part(f):
    """Primitive square-free part of an integer polynomial."""
    f = _primitive(f)
    if len(f) <= 2:
        return f
    df = [i * c for i, c in enumerate(f)][1:]
    g = int_poly_gcd(f, df)
    if len(g) <= 1:
        return f
    return _exact_int_div(f, g)


# -- divisor enumeration ---------------------------------------------------

def _divisors(n):
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def _eval_int(f, num, den):
    """den**deg * f(num/den) as an integer."""
    n = len(f) - 1
    acc = 0
    for i, c in enumerate(f):
        acc += c * num ** i * den ** (n - i)
    return acc


def _roots_by_divisors(f):
    roots = set()
    for b in _divisors(f[-1]):
        for a in _divisors(f[0]):
            if gcd(a, b) != 1:
                continue
            for s in (a, -a):
                if _eval_int(f, s, b) == 0:
                    roots.add(Fraction(s, b))
    return roots


# -- p-adic search -----------------------------------------------------------

def _primes(start):
    p = start
    while True:
        if p > 1 and all(p % q for q in range(2, isqrt(p) + 1)):
            yield p
        p += 1


def _mod_poly(f, p):
    return _trim([c % p for c in f])


def _gcd_mod(f, g, p):
    while g:
        # f mod g over F_p
        f = list(f)
        inv = pow(g[-1], -1, p)
        while len(f) >= len(g):
            c = f[-1] * inv % p
            shift = len(f) - len(g)
            for i, gc in enumerate(g):
                f[i + shift] = (f[i + shift] - c * gc) % p
            f = _trim(f)
        f, g = g, f
    return f


def _horner_mod(f, r, m):
    acc = 0
    for c in reversed(f):
        acc = (acc * r + c) % m
    return acc


def _rational_reconstruct(r, m, num_bound, den_bound):
    """Find a/b == r (mod m) with |a| <= num_bound, 0 < b <= den_bound."""
    r0, r1 = m, r % m
    t0, t1 = 0, 1
    while r1 > num_bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0:
        return None
    a, b = (r1, t1) if t1 > 0 else (-r1, -t1)
    if b > den_bound or gcd(a, b) != 1:
        return None
    return Fraction(a, b)


def _roots_padic(f):
    lc, c0 = f[-1], f[0]
    df = [i * c for i, c in enumerate(f)][1:]
    for p in _primes(max(101, 2 * len(f) + 1)):
        if lc % p == 0:
            continue
        fp = _mod_poly(f, p)
        if len(_gcd_mod(fp, _mod_poly(df, p), p)) > 1:
            continue  # not square-free mod p
        break
    bound = 2 * abs(c0) * abs(lc) + 1
    roots = set()
    for r in range(p):
        if _horner_mod(f, r, p):
            continue
        m = p
        while m < bound:
            m = m * m
            d = _horner_mod(df, r, m)
            r = (r - _horner_mod(f, r, m) * pow(d, -1, m)) % m
        cand = _rational_reconstruct(r, m, abs(c0), abs(lc))
        if cand is not None and _eval_int(f, cand.numerator, cand.denominator) == 0:
            roots.add(cand)
    return roots


def rational_roots(p):
    """Set of distinct rational roots of a nonzero polynomial."""
    if isinstance(p, Poly):
        if p.is_zero():
            raise ValueError("rational_roots: zero polynomial")
        f = p.integer_coeffs()
    else:
        f = _primitive(p)
        if not f:
            raise ValueError("rational_roots: zero polynomial")
    roots = set()
    k = 0
    while f[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
        f = f[k:]
    if len(f) <= 1:
        return roots
    f = squarefree_part(f)
    if len(f) == 2:
        roots.add(Fraction(-f[0], f[1]))
    elif max(abs(f[0]), abs(f[-1])) <= DIVISOR_LIMIT:
        roots |= _roots_by_divisors(f)
    else:
        roots |= _roots_padic(f)
    return roots


def remove_roots(p, roots):
    """Divide out the linear factors (x - r) for each r in roots, once each."""
    for r in roots:
        p = p.exact_div(Poly((-r, 1)))
    return p
