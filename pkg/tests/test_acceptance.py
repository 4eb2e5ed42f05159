"""Acceptance gate.

Each test is one numbered criterion; conftest.py prints a PASS/FAIL line
per criterion after the run.  Comparisons are exact (integers and
Fractions), and every criterion asserts its own wall-clock budget.
"""

import itertools
import random
import time
from fractions import Fraction
from math import comb

from hypercover.core import Hypergraph, canonical_form
from hypercover.constructions import (
    aux_intersection_graph,
    cover_g1_52,
    cover_g1_km,
    cover_g1_kkm2,
    cover_nu1,
    cover_nu2,
    cover_nu3,
    frac_cover_2kk,
    frac_cover_hstar,
    frac_cover_kkm2,
    max_matching_general_graph,
)
from hypercover.exact import max_m_matching, min_m_cover, verify_cover
from hypercover.fraclp import solve_fractional, verify_fractional
from hypercover.generators import (
    gen_biplane_11_5_2,
    gen_complete_extremal,
    gen_triangle_hypergraph,
)
from hypercover.scan import scan_exhaustive, serialize_report

from instances import plant_blocks, plant_random, suite_matching_one, suite_nu
from oracles import oracle_max_matching, oracle_min_cover


def test_01_extremal_family():
    t0 = time.perf_counter()
    for k in (3, 4, 5, 6, 7):
        h = gen_complete_extremal(k)
        nu = max_m_matching(h, k - 1)[0].size()
        tau = min_m_cover(h, k - 1)[0].size()
        assert (nu, tau) == (1, (k + 2) // 2), k
    assert time.perf_counter() - t0 < 10


def test_02_biplane_design():
    t0 = time.perf_counter()
    h = gen_biplane_11_5_2()
    assert (h.n, h.k, h.edge_count()) == (11, 5, 11)
    for u, v in itertools.combinations(range(11), 2):
        pair = (1 << u) | (1 << v)
        assert sum(1 for e in h.edges if e & pair == pair) == 2
    assert max_m_matching(h, 2)[0].size() == 1
    assert min_m_cover(h, 2)[0].size() == 6
    cover = cover_g1_52(h)
    assert verify_cover(h, cover) and cover.size() <= 7
    assert time.perf_counter() - t0 < 60


def test_03_tuza_tightness():
    t0 = time.perf_counter()
    want = {4: (1, 2), 5: (2, 4)}
    for n, (nu_want, tau_want) in want.items():
        h, _ = gen_triangle_hypergraph(n, itertools.combinations(range(n), 2))
        nu = max_m_matching(h, 2)[0].size()
        tau = min_m_cover(h, 2)[0].size()
        assert (nu, tau) == (nu_want, tau_want), n
    assert time.perf_counter() - t0 < 5


def test_04_theorem_suites():
    t0 = time.perf_counter()
    builders = {1: cover_nu1, 2: cover_nu2, 3: cover_nu3}
    grid = [(1, k) for k in (3, 4, 5, 6, 7)]
    grid += [(2, k) for k in (3, 4, 5, 6)]
    grid += [(3, k) for k in (3, 4, 5)]
    for i, k in grid:
        if i == 1:
            suite = suite_matching_one(k, k - 1, 100, seed=1000 + k)
        else:
            suite = suite_nu(i, k, 100, seed=1000 * i + k)
        assert len(suite) >= 100
        for h in suite:
            cert = builders[i](h)
            assert verify_cover(h, cert), (i, k)
            assert cert.size() <= i * ((k + 2) // 2), (i, k)
            assert cert.size() >= min_m_cover(h, k - 1)[0].size(), (i, k)
    assert time.perf_counter() - t0 < 600


def test_05_single_matching_suites():
    t0 = time.perf_counter()
    for k, m in [(6, 3), (6, 4), (7, 4), (7, 5), (8, 5), (8, 6)]:
        for h in suite_matching_one(k, m, 50, seed=100 * k + m):
            cert = cover_g1_km(h, m)
            assert verify_cover(h, cert), (k, m)
            assert cert.size() <= comb(k, m) - m, (k, m)
    for k in (3, 4, 5, 6):
        for h in suite_matching_one(k, k - 2, 50, seed=5000 + k):
            cert = cover_g1_kkm2(h)
            assert verify_cover(h, cert), k
            assert cert.size() <= (k * k + 3) // 4, k
    assert time.perf_counter() - t0 < 900


def test_06_aux_near_perfect_matching():
    t0 = time.perf_counter()
    for k in (5, 6, 7, 8):
        aux = aux_intersection_graph((1 << k) - 1, 2)
        pairs = max_matching_general_graph(len(aux.vertices), aux.adjacency)
        assert len(pairs) == comb(k, 2) // 2, k
    assert time.perf_counter() - t0 < 10


def test_07_fractional_suites():
    t0 = time.perf_counter()
    for k in (4, 6):
        m = k // 2
        bound = (Fraction(1, 2) + Fraction(1, 2 * (m + 1))) * comb(k, m)
        for h in suite_matching_one(k, m, 25, seed=7000 + k):
            fa = frac_cover_2kk(h)
            assert verify_fractional(h, fa) and fa.total <= bound, k

    def kkm2_bound(k):
        return Fraction(comb(k - 2, 2), 6) + (2 * k - 3)

    twokk_bound = lambda m: (Fraction(1, 2) + Fraction(1, 2 * (m + 1))) * comb(
        2 * m, m
    )
    rng = random.Random(71)
    wirings = [
        (4, 2, frac_cover_2kk, twokk_bound(2)),
        (6, 3, frac_cover_2kk, twokk_bound(3)),
        (5, 3, frac_cover_kkm2, kkm2_bound(5)),
        (7, 5, frac_cover_kkm2, kkm2_bound(7)),
    ]
    for k, m, sub, sub_bound in wirings:
        for _ in range(25):
            h = plant_blocks(k, m, rng.randint(1, 3), rng)
            fa = frac_cover_hstar(h, m, sub)
            assert verify_fractional(h, fa), (k, m)
            nu = max_m_matching(h, m)[0].size()
            assert fa.total <= Fraction(comb(k, m) + sub_bound, 2) * nu, (k, m)

    for k in (7, 8):
        for h in suite_matching_one(k, k - 2, 25, seed=7700 + k):
            fa = frac_cover_kkm2(h)
            assert verify_fractional(h, fa) and fa.total <= kkm2_bound(k), k
    assert time.perf_counter() - t0 < 300


def test_08_lp_duality():
    t0 = time.perf_counter()
    rng = random.Random(88)
    for _ in range(200):
        n = rng.randint(3, 9)
        k = rng.randint(2, min(5, n))
        h = plant_random(n, k, rng)
        m = rng.randint(1, k)
        matching_fa, cover_fa = solve_fractional(h, m)
        assert matching_fa.total == cover_fa.total
        nu = max_m_matching(h, m)[0].size()
        tau = min_m_cover(h, m)[0].size()
        assert Fraction(nu) <= cover_fa.total <= Fraction(tau)
    assert time.perf_counter() - t0 < 600


def test_09_oracle_equivalence():
    t0 = time.perf_counter()
    pool = list(itertools.combinations(range(4), 3))
    classes = {}
    for r in range(1, len(pool) + 1):
        for chosen in itertools.combinations(pool, r):
            h = Hypergraph(4, 3, chosen)
            classes.setdefault(canonical_form(h), h)
    assert len(classes) == 4
    for h in classes.values():
        for m in (1, 2, 3):
            assert max_m_matching(h, m)[0].size() == oracle_max_matching(h, m)
            assert min_m_cover(h, m)[0].size() == oracle_min_cover(h, m)
    rng = random.Random(5150)
    for _ in range(200):
        n = rng.randint(5, 8)
        k = rng.randint(3, 4)
        h = plant_random(n, k, rng, max_edges=9)
        m = rng.randint(1, k)
        assert max_m_matching(h, m)[0].size() == oracle_max_matching(h, m)
        assert min_m_cover(h, m)[0].size() == oracle_min_cover(h, m)
    assert time.perf_counter() - t0 < 600


def test_10_conjecture_scan():
    t0 = time.perf_counter()
    first = scan_exhaustive(3, 2, 5)
    assert first.violations == ()
    assert first.max_ratio() == Fraction(2)
    second = scan_exhaustive(3, 2, 5)
    assert serialize_report(first) == serialize_report(second)
    assert time.perf_counter() - t0 < 1800
