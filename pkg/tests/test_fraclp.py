"""Exact rational LP: duality, feasibility, pinned optima, text format."""

import random
from fractions import Fraction

import pytest

from hypercover.core import (
    Hypergraph,
    MalformedCertificateError,
    ParameterError,
    mask_of,
)
from hypercover.exact import max_m_matching, min_m_cover
from hypercover.fraclp import (
    FractionalAssignment,
    format_fractional,
    parse_fractional,
    solve_fractional,
    verify_fractional,
)
from hypercover.generators import gen_biplane_11_5_2, gen_complete_extremal

from instances import plant_random


def test_duality_and_sandwich_on_randoms():
    rng = random.Random(91)
    for _ in range(40):
        n = rng.randint(4, 8)
        k = rng.randint(2, min(4, n))
        h = plant_random(n, k, rng, max_edges=8)
        m = rng.randint(1, k)
        fm, fc = solve_fractional(h, m)
        assert fm.total == fc.total
        assert verify_fractional(h, fm)
        assert verify_fractional(h, fc)
        nu = max_m_matching(h, m)[0].size()
        tau = min_m_cover(h, m)[0].size()
        assert Fraction(nu) <= fm.total <= Fraction(tau)


def test_extremal_k3_value():
    fm, fc = solve_fractional(gen_complete_extremal(3), 2)
    assert fm.total == 2 and fc.total == 2


def test_biplane_value():
    # Uniform 1/10 over all 55 point pairs is a feasible cover since each
    # block holds 10 pairs, and uniform 1/2 over the 11 blocks is a
    # feasible matching since each pair lies in exactly 2 blocks; the two
    # meet at 11/2, so by weak duality that is the common optimum.
    fm, fc = solve_fractional(gen_biplane_11_5_2(), 2)
    assert fm.total == Fraction(11, 2)
    assert fc.total == Fraction(11, 2)


def test_single_and_empty_edges():
    single = Hypergraph(5, 3, [(0, 2, 4)])
    fm, fc = solve_fractional(single, 2)
    assert fm.total == 1 and fc.total == 1
    empty = Hypergraph(4, 2, [])
    fm, fc = solve_fractional(empty, 1)
    assert fm.total == 0 and fc.total == 0


def test_solution_is_deterministic():
    rng = random.Random(3)
    h = plant_random(7, 3, rng, max_edges=8)
    a = solve_fractional(h, 2)
    b = solve_fractional(h, 2)
    assert a[0].weights == b[0].weights
    assert a[1].weights == b[1].weights


def test_items_canonical_order():
    fa = FractionalAssignment(
        side="cover",
        m=2,
        weights={mask_of((2, 3)): Fraction(1), mask_of((0, 4)): Fraction(1, 2)},
    )
    keys = [key for key, _ in fa.items_canonical()]
    assert keys == [mask_of((0, 4)), mask_of((2, 3))]


def test_side_validation():
    with pytest.raises(ParameterError):
        FractionalAssignment(side="both", m=2, weights={})


def test_verify_rejects_malformed():
    h = Hypergraph(5, 3, [(0, 1, 2), (2, 3, 4)])
    with pytest.raises(MalformedCertificateError):
        verify_fractional(
            h,
            FractionalAssignment(
                side="cover", m=2, weights={mask_of((0, 1, 2)): Fraction(1)}
            ),
        )
    with pytest.raises(MalformedCertificateError):
        verify_fractional(
            h,
            FractionalAssignment(
                side="cover", m=2, weights={mask_of((0, 1)): Fraction(-1, 2)}
            ),
        )
    with pytest.raises(MalformedCertificateError):
        verify_fractional(
            h,
            FractionalAssignment(
                side="matching",
                m=2,
                weights={mask_of((0, 1, 3)): Fraction(1)},
            ),
        )


def test_verify_detects_infeasible():
    h = Hypergraph(5, 3, [(0, 1, 2), (2, 3, 4)])
    # cover leaving the second edge light
    thin = FractionalAssignment(
        side="cover", m=2, weights={mask_of((0, 1)): Fraction(1)}
    )
    assert not verify_fractional(h, thin)
    # matching overloading the shared pair of an edge
    heavy = FractionalAssignment(
        side="matching",
        m=1,
        weights={mask_of((0, 1, 2)): Fraction(1), mask_of((2, 3, 4)): Fraction(1)},
    )
    assert not verify_fractional(h, heavy)


def test_format_round_trip():
    h = gen_complete_extremal(3)
    fm, fc = solve_fractional(h, 2)
    for fa in (fm, fc):
        back = parse_fractional(format_fractional(fa))
        assert back.side == fa.side and back.m == fa.m
        assert back.weights == fa.weights


def test_bad_m_rejected():
    h = Hypergraph(4, 2, [(0, 1)])
    with pytest.raises(ParameterError):
        solve_fractional(h, 0)
    with pytest.raises(ParameterError):
        solve_fractional(h, 3)
