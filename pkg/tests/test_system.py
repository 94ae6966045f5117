import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import RIGID, X, mat, rigid, random_conjugated, random_gauge, rng_for, sysm
from skewdyn.algebra import MultiPoly, PolyMatrix
from skewdyn.system import (
    GaugeTransform,
    InvalidSystemError,
    PointState,
    apply,
    cocycle,
    gauge_conjugate,
    orbit,
    power_system,
    pullback_poly,
    pushforward_poly,
    validate,
)

pt = PointState.of


def test_validate_examples():
    assert validate(2, mat(RIGID)).det_constant == 1
    with pytest.raises(InvalidSystemError) as err:
        validate(2, mat([[X, 0], [0, 1]]))
    assert err.value.determinant == X
    assert validate(2, mat([[2, [3, 1]], [0, 3]])).det_constant == 6


def test_validate_rejects_singular_and_wrong_size():
    with pytest.raises(InvalidSystemError):
        validate(2, mat([[1, 2], [2, 4]]))
    with pytest.raises(ValueError):
        validate(3, mat([[1, 0], [0, 1]]))


def test_apply_examples():
    assert apply(sysm([[1, 0], [0, 1]]), pt(0, (1, 2))) == pt(1, (1, 2))
    s = rigid()
    assert apply(s, pt(1, (1, 0))) == pt(2, (1, 1))
    assert apply(s, pt(2, (1, 1))) == pt(3, (2, 5))


def test_orbit_examples():
    s = rigid()
    assert orbit(s, pt(0, (1, 0)), 0) == [pt(0, (1, 0))]
    assert orbit(s, pt(0, (1, 0)), 3) == [pt(0, (1, 0)), pt(1, (1, 0)), pt(2, (1, 1)), pt(3, (2, 5))]
    d = sysm([[4, 0], [0, 2]])
    assert orbit(d, pt(0, (1, 1)), 2) == [pt(0, (1, 1)), pt(1, (4, 2)), pt(2, (16, 4))]


def test_cocycle_examples():
    s = rigid()
    assert cocycle(s, 1) == s.A
    assert cocycle(sysm([[2, 0], [0, 3]]), 2) == mat([[4, 0], [0, 9]])
    assert cocycle(s, 2) == s.A.shift(1) * s.A
    with pytest.raises(ValueError):
        cocycle(s, 0)


def test_cocycle_matches_iterated_apply():
    rng = random.Random(5)
    for s in (rigid(), sysm([[2, [3, 1]], [0, 3]]), random_conjugated(rng)[2]):
        for m in range(1, 6):
            C = cocycle(s, m)
            for _ in range(10):
                p = pt(Fraction(rng.randint(-5, 5), rng.randint(1, 3)), (rng.randint(-4, 4), rng.randint(-4, 4)))
                q = orbit(s, p, m)[-1]
                Cx = C(p.x)
                y = tuple(sum(a * b for a, b in zip(row, p.y)) for row in Cx)
                assert q == PointState(p.x + m, y)


def test_gauge_examples():
    s = sysm([[2, 0], [0, 3]])
    assert gauge_conjugate(s, PolyMatrix.identity(2)) == s
    t = gauge_conjugate(s, mat([[1, X], [0, 1]]))
    assert t.A == mat([[2, -X - 3], [0, 3]])
    assert gauge_conjugate(t, mat([[1, -X], [0, 1]])).A == s.A


def test_gauge_transform_validates():
    with pytest.raises(ValueError):
        GaugeTransform(mat([[X, 0], [0, 1]]))
    T = GaugeTransform(mat([[1, X], [0, 1]]))
    assert (T @ T.inverse()).T == PolyMatrix.identity(2)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_gauge_functoriality_and_determinant(seed):
    rng = rng_for(seed)
    s = random_conjugated(rng)[2] if rng.random() < 0.5 else rigid()
    T = random_gauge(rng)
    t = gauge_conjugate(s, T)
    assert t.det_constant == s.det_constant
    assert gauge_conjugate(t, T.inverse()) == s
    for _ in range(5):
        p = pt(rng.randint(-6, 6), (rng.randint(-5, 5), rng.randint(-5, 5)))

        def rho(q):
            Tx = T(q.x)
            return PointState(q.x, tuple(sum(a * b for a, b in zip(row, q.y)) for row in Tx))
        assert rho(apply(t, p)) == apply(s, rho(p))


def test_pushforward_examples():
    y1 = MultiPoly.y(2, 0)
    y2 = MultiPoly.y(2, 1)
    s = sysm([[2, 0], [0, 3]])
    assert pushforward_poly(s, y1, 0) == y1
    assert pushforward_poly(s, y1, -1) == y1 * 2
    b = sysm([[4, 0], [0, 2]])
    P = y1 - y2 ** 2
    assert pushforward_poly(b, P, -1) == P * 4


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(-3, 3))
def test_pushforward_round_trip(seed, m):
    rng = rng_for(seed)
    s = random_conjugated(rng, factors=2, degree=1)[2] if seed % 2 else rigid()
    terms = {(rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2)): rng.randint(-3, 3) for _ in range(3)}
    P = MultiPoly(3, terms)
    assert pushforward_poly(s, pushforward_poly(s, P, m), -m) == P


def test_pullback_is_composition():
    s = rigid()
    P = MultiPoly(3, {(1, 1, 0): 1, (0, 0, 2): 3})
    Q = pullback_poly(s, P, 2)
    for p in (pt(0, (1, 2)), pt(3, (-1, 5)), pt(Fraction(1, 2), (2, 7))):
        q = orbit(s, p, 2)[-1]
        assert Q(p.x, p.y) == P(q.x, q.y)


def test_power_system_rescales_base():
    s = rigid()
    ps = power_system(s, 2)
    assert ps.A == cocycle(s, 2).scale(2)
    assert ps.det_constant == s.det_constant ** 2
