"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` (or ``python3 tests/test_acceptance.py``).
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction
from itertools import combinations, product

import pytest

from helpers import P, X, random_conjugated, random_gauge, rng_for, sysm
from oracles import components_by_enumeration, naive_rank
from skewdyn.algebra import MultiPoly, PolyMatrix
from skewdyn.cli import run
from skewdyn.closure import component_count, density_probe, relation_lattice
from skewdyn.invariants import (
    SkewLine,
    is_semi_invariant,
    lines_at_degree,
    period_search,
    semi_invariants_total,
    skew_eigenvectors,
)
from skewdyn.straighten import Diagonalized, solve_off_diagonal, straighten
from skewdyn.system import PointState, gauge_conjugate, orbit

RESULTS = {}


@contextmanager
def criterion(number, title, limit=None):
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        elapsed = time.perf_counter() - t0
        if limit is not None:
            assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
        ok = True
    finally:
        elapsed = time.perf_counter() - t0
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({elapsed:.2f}s)"
        RESULTS[number] = line
        print("\n" + line)


@pytest.fixture
def rigid_file(tmp_path):
    p = tmp_path / "rigid.json"
    p.write_text('{"n":2,"matrix":[[["1"],["1"]],[["0","1"],["1","1"]]]}')
    return str(p)


def test_criterion_1_rigid(rigid_file):
    with criterion(1, "A=[[1,1],[x,x+1]] has no lines (deg<=10) and no semi-invariants (D=2, E=6)", 10):
        rep, code = run(["invariant-line", rigid_file, "--max-deg", "10"])
        assert code == 0 and rep.result is None
        assert rep.bounds["max_deg"] == 10
        rep, code = run(["semi-invariants", rigid_file, "--deg-y", "2", "--deg-x", "6"])
        assert code == 0 and rep.result is None


def test_criterion_2_straightening_round_trip():
    with criterion(2, "100 random T(x+1) diag T(x)^-1 systems straighten exactly", 60):
        rng = random.Random(20240607)
        for _ in range(100):
            base, T, s = random_conjugated(rng, factors=4, degree=2)
            assert s.A == T.shift(1) * base.A * T.inverse()
            verdict = straighten(s, 2 * s.n * (s.degree + 1) + 4)
            assert isinstance(verdict, Diagonalized)
            form = verdict.form
            assert sorted(form.B) == sorted(base.diagonal_entries())
            Tp = form.gauge.T
            assert Tp.shift(1).inverse() * s.A * Tp == PolyMatrix.diagonal(list(form.B))


def test_criterion_3_difference_operator():
    with criterion(3, "solve_off_diagonal(2,3,x) = x-3 and (1,1,1) = x"):
        u = solve_off_diagonal(2, 3, X)
        assert u == X - 3
        assert u.shift(1) * 3 - u * 2 == X
        u = solve_off_diagonal(1, 1, P(1))
        assert u == X
        assert u.shift(1) - u == P(1)


def test_criterion_4_density_probe():
    with criterion(4, "Rigid-system orbit, 60 points, E=D=3: empty basis, naive oracle full rank", 30):
        s = sysm([[1, 1], [[0, 1], [1, 1]]])
        start = PointState.of(0, (1, 0))
        vb = density_probe(s, start, 60, 3, 3)
        assert len(vb.monomials) == 40 and vb.basis == ()
        pts = orbit(s, start, 59)
        rows = [[MultiPoly(3, {e: 1})(p.x, p.y) for e in vb.monomials] for p in pts]
        assert len(rows) == 60
        assert naive_rank(rows) == 40


def test_criterion_5_structured_ideal():
    with criterion(5, "diag(4,2) from (0,(1,1)), 20 points, E=1, D=2: span{y1-y2^2, x(y1-y2^2)}"):
        s = sysm([[4, 0], [0, 2]])
        vb = density_probe(s, PointState.of(0, (1, 1)), 20, 1, 2)
        Pb = MultiPoly.y(2, 0) - MultiPoly.y(2, 1) ** 2
        x = MultiPoly.var(3, 0)
        assert len(vb.basis) == 2
        monos = list(vb.monomials)
        rows = [[Q.terms.get(mu, 0) for mu in monos] for Q in vb.basis]
        expect = [[Q.terms.get(mu, 0) for mu in monos] for Q in (Pb, x * Pb)]
        assert naive_rank(rows) == naive_rank(expect) == naive_rank(rows + expect) == 2
        assert is_semi_invariant(s, Pb, 4)


def test_criterion_6_component_counts():
    with criterion(6, "component counts via SNF match lattice enumeration"):
        for a, expect in (([2, 3], 1), ([4, 2], 1), ([2, -2], 2), ([1, -1], 2)):
            assert component_count(relation_lattice(a)) == expect
            assert components_by_enumeration(a, box=6) == expect


POOL = [Fraction(v) for v in (1, -1, 2, -2, 3, -3, 4)] + [Fraction(1, 2)]


def _candidates(found):
    """Semi-invariants and pairwise sums across eigenvalues."""
    polys = [(si.q, Pb) for si in found for Pb in si.basis]
    yield from (Pb for _, Pb in polys)
    for (q1, P1), (q2, P2) in combinations(polys, 2):
        if q1 != q2:
            yield P1 + P2


def test_criterion_7_period_divisibility():
    with criterion(7, "periods of hypersurfaces divide component counts (diagonal, D<=2)"):
        checked = violations = 0
        periods = set()
        systems = [list(a) for a in product(POOL, repeat=2)]
        rng = random.Random(7)
        systems += [[rng.choice(POOL) for _ in range(3)] for _ in range(10)]
        for a in systems:
            n = len(a)
            s = sysm([[a[i] if i == j else 0 for j in range(n)] for i in range(n)])
            comps = component_count(relation_lattice(a))
            for Pb in _candidates(semi_invariants_total(s, 2, 0)):
                m = period_search(s, Pb, 12)
                if m is None:
                    continue
                checked += 1
                periods.add(m)
                if comps % m:
                    violations += 1
        assert violations == 0
        assert checked > 0 and 2 in periods


def test_criterion_8_constant_diagonal_semi_invariants():
    with criterion(8, "20 random constant diagonal systems: every semi-invariant (E<=3) has x-degree 0"):
        rng = random.Random(8)
        count = 0
        for k in range(20):
            n = 2 if k < 14 else 3
            a = [rng.choice(POOL + [Fraction(-1, 2), Fraction(3, 2)]) for _ in range(n)]
            s = sysm([[a[i] if i == j else 0 for j in range(n)] for i in range(n)])
            for si in semi_invariants_total(s, 2, 3):
                for Pb in si.basis:
                    count += 1
                    assert Pb.x_degree == 0
        assert count > 0


def _rho(T, p):
    Tx = T(p.x)
    return PointState(p.x, tuple(sum(a * b for a, b in zip(row, p.y)) for row in Tx))


def test_criterion_9_gauge_equivariance():
    with criterion(9, "50 randomized gauge-equivariance cases (orbits, lines, semi-invariants)"):
        for seed in range(50):
            rng = rng_for(1000 + seed)
            if seed % 5 == 0:
                s = sysm([[2, [3, 1]], [0, 3]])
            else:
                s = random_conjugated(rng, factors=2, degree=1)[2]
            T = random_gauge(rng, factors=2, degree=1)
            t = gauge_conjugate(s, T)
            Ti = T.inverse()
            # orbits: rho(f_t(p)) = f_s(rho(p))
            p = PointState.of(rng.randint(-3, 3), (rng.randint(-4, 4), rng.randint(-4, 4)))
            assert [_rho(T, q) for q in orbit(t, p, 5)] == orbit(s, _rho(T, p), 5)
            # lines of s transport to lines of t and back
            for ln in skew_eigenvectors(s, 4):
                w = SkewLine.canonical(ln.c, Ti.apply(ln.v))
                assert w.verify(t)
                spaces = dict(lines_at_degree(t, w.degree).eigenspaces)
                m = w.degree
                vec = [w.v[j].coeff(i) for j in range(2) for i in range(m + 1)]
                basis = [list(b) for b in spaces[ln.c]]
                assert naive_rank(basis + [vec]) == naive_rank(basis)
            for ln in skew_eigenvectors(t, 2):
                assert SkewLine.canonical(ln.c, T.apply(ln.v)).verify(s)
            # semi-invariants: P o rho is semi-invariant for t with the same q
            for si in semi_invariants_total(s, 1, 1):
                for Pb in si.basis:
                    assert is_semi_invariant(t, Pb.substitute(0, T), si.q)


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-s"]))
