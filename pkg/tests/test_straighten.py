import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import P, X, mat, rigid, random_conjugated, rng_for, sysm
from oracles import naive_rank
from skewdyn.algebra import Poly, PolyMatrix
from skewdyn.invariants import SkewLine, semi_invariants
from skewdyn.straighten import (
    Diagonalized,
    ExtensionCertificate,
    NoInvariantUpToBound,
    solve_off_diagonal,
    straighten,
    triangular_reduce,
    unimodular_completion,
)
from skewdyn.system import gauge_conjugate


def test_unimodular_completion_examples():
    assert unimodular_completion((P(1), Poly())) == PolyMatrix.identity(2)
    assert unimodular_completion((X, P(1))) == mat([[X, -1], [1, 0]])
    with pytest.raises(ValueError):
        unimodular_completion((X, X))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-4, 4), max_size=4), st.lists(st.integers(-4, 4), max_size=4))
def test_unimodular_completion_determinant_one(a, b):
    v = (Poly(a), Poly(b))
    from skewdyn.algebra import poly_gcd
    if v[0].is_zero() and v[1].is_zero():
        return
    if poly_gcd(*v) != Poly.constant(1):
        with pytest.raises(ValueError):
            unimodular_completion(v)
        return
    T = unimodular_completion(v)
    assert T.column(0) == v
    assert T.det() == Poly.constant(1)


def test_triangular_reduce_examples():
    s = sysm([[2, [3, 1]], [0, 3]])
    red, T0 = triangular_reduce(s, SkewLine.canonical(3, (X, P(1))))
    assert red.A == mat([[3, 0], [0, 2]])
    assert T0.T == mat([[X, -1], [1, 0]])
    red, T0 = triangular_reduce(s, SkewLine.canonical(2, (P(1), Poly())))
    assert red.A == s.A and T0.T == PolyMatrix.identity(2)
    d = sysm([[5, 0], [0, 7]])
    red, T0 = triangular_reduce(d, SkewLine.canonical(5, (P(1), Poly())))
    assert red.A == d.A and T0.T == PolyMatrix.identity(2)


def test_triangular_reduce_rejects_bad_line():
    with pytest.raises(ValueError):
        triangular_reduce(rigid(), SkewLine.canonical(1, (P(1), Poly())))


def test_solve_off_diagonal_examples():
    u = solve_off_diagonal(2, 3, X)
    assert u == X - 3
    assert u.shift(1) * 3 - u * 2 == X
    assert solve_off_diagonal(1, 1, Poly()) == Poly()
    u = solve_off_diagonal(1, 1, P(1))
    assert u == X
    assert u.shift(1) - u == P(1)


def _operator_matrix(a1, a2, d):
    # columns: images of 1, x, ..., x^d under u -> a2 u(x+1) - a1 u(x)
    M = [[Fraction(0)] * (d + 1) for _ in range(d + 1)]
    for k in range(d + 1):
        for j in range(k + 1):
            M[j][k] += a2 * comb(k, j)
        M[k][k] -= a1
    return M


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([1, -1, 2, 3, Fraction(1, 2), -3]), st.sampled_from([1, -1, 2, 3, Fraction(1, 2), -3]),
       st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=5), max_size=5))
def test_solve_off_diagonal_identity(a1, a2, coeffs):
    b = Poly(coeffs)
    u = solve_off_diagonal(a1, a2, b)
    assert u.shift(1) * Fraction(a2) - u * Fraction(a1) == b
    if a1 != a2:
        assert u.degree == b.degree
        d = max(b.degree, 0)
        assert naive_rank(_operator_matrix(Fraction(a1), Fraction(a2), d)) == d + 1
    else:
        assert u.coeff(0) == 0


def test_straighten_examples():
    s = sysm([[2, X], [0, 3]])
    v = straighten(s, 6)
    assert isinstance(v, Diagonalized)
    assert v.form.B == (2, 3)
    assert v.form.gauge.T == mat([[1, X - 3], [0, 1]])
    assert v.form.verify(s)
    assert straighten(rigid(), 10) == NoInvariantUpToBound(10)
    d = sysm([[5, 0], [0, -2]])
    v = straighten(d, 3)
    assert v.form.B == (5, -2) and v.form.gauge.T == PolyMatrix.identity(2)


def test_straighten_requires_dimension_two():
    with pytest.raises(ValueError):
        straighten(sysm([[1, 0, 0], [0, 1, 0], [0, 0, 1]]), 2)


def test_two_cycle_branch():
    v = straighten(sysm([[0, 1], [2, 0]]), 4)
    assert isinstance(v, ExtensionCertificate)
    assert v.poly.monic() == P(-2, 0, 1)
    v = straighten(sysm([[0, 1], [4, 0]]), 4)
    assert isinstance(v, Diagonalized)
    assert sorted(v.form.B) == [-2, 2]
    # conjugated by a polynomial gauge, the same dichotomy persists
    rng = random.Random(4)
    from helpers import random_gauge
    T = random_gauge(rng, factors=2, degree=1)
    s = gauge_conjugate(sysm([[0, 1], [2, 0]]), T)
    v = straighten(s, 6)
    assert isinstance(v, ExtensionCertificate)
    assert v.poly.monic() == P(-2, 0, 1)
    assert gauge_conjugate(s, v.gauge).A.is_constant()


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_straighten_round_trip(seed):
    base, T, s = random_conjugated(rng_for(seed))
    v = straighten(s, 2 * 2 * (s.degree + 1) + 4)
    assert isinstance(v, Diagonalized)
    assert sorted(v.form.B) == sorted(base.diagonal_entries())
    assert gauge_conjugate(s, v.form.gauge).A == PolyMatrix.diagonal(list(v.form.B))
    assert v.form.verify(s)


def test_straight_output_has_constant_semi_invariants():
    rng = random.Random(9)
    for _ in range(4):
        base, T, s = random_conjugated(rng, factors=2, degree=1)
        v = straighten(s, 8)
        B = sysm([[v.form.B[0], 0], [0, v.form.B[1]]])
        for h in (1, 2):
            for si in semi_invariants(B, h, 2):
                assert all(Pb.x_degree == 0 for Pb in si.basis)
