"""Named families and the seeded random sampler."""

import itertools
import random

import pytest

from hypercover.core import GenerationBudgetError, ParameterError
from hypercover.exact import max_m_matching
from hypercover.generators import (
    gen_biplane_11_5_2,
    gen_complete_extremal,
    gen_random,
    gen_triangle_hypergraph,
)

from instances import random_graph
from oracles import oracle_triangle_count


def test_extremal_structure():
    for k in range(2, 8):
        h = gen_complete_extremal(k)
        assert (h.n, h.k, h.edge_count()) == (k + 1, k, k + 1)
        for a, b in itertools.combinations(h.edges, 2):
            assert (a & b).bit_count() == k - 1
    tri = gen_complete_extremal(2)
    assert [tri.edge_vertices(i) for i in range(3)] == [(0, 1), (0, 2), (1, 2)]
    with pytest.raises(ParameterError):
        gen_complete_extremal(1)


def test_triangle_system_cliques():
    t4, labels4 = gen_triangle_hypergraph(4, itertools.combinations(range(4), 2))
    assert t4.n == 4 and t4.k == 3 and t4.edge_count() == 4
    assert labels4 == tuple(itertools.combinations(range(4), 2))
    t5, _ = gen_triangle_hypergraph(5, itertools.combinations(range(5), 2))
    assert t5.edge_count() == 10


def test_triangle_free_graphs():
    path, _ = gen_triangle_hypergraph(4, [(0, 1), (1, 2), (2, 3)])
    assert path.edge_count() == 0
    star, _ = gen_triangle_hypergraph(5, [(0, i) for i in range(1, 5)])
    assert star.edge_count() == 0


def test_triangle_count_matches_cubic_oracle():
    rng = random.Random(14)
    for _ in range(30):
        n = rng.randint(3, 9)
        edges = random_graph(n, 0.5, rng)
        h, labels = gen_triangle_hypergraph(n, edges)
        assert h.edge_count() == oracle_triangle_count(n, edges)
        assert labels == tuple(sorted(set(map(lambda e: tuple(sorted(e)), edges))))


def test_triangle_input_validation():
    with pytest.raises(ParameterError):
        gen_triangle_hypergraph(3, [(0, 0)])
    with pytest.raises(ParameterError):
        gen_triangle_hypergraph(3, [(0, 1), (1, 0)])
    with pytest.raises(ParameterError):
        gen_triangle_hypergraph(3, [(0, 3)])


def test_biplane_design_properties():
    h = gen_biplane_11_5_2()
    assert (h.n, h.k, h.edge_count()) == (11, 5, 11)
    for a, b in itertools.combinations(h.edges, 2):
        assert (a & b).bit_count() == 2
    for u, v in itertools.combinations(range(11), 2):
        pair = (1 << u) | (1 << v)
        assert sum(1 for e in h.edges if e & pair == pair) == 2


def test_random_determinism_and_knobs():
    a = gen_random(8, 3, seed=5)
    b = gen_random(8, 3, seed=5)
    assert a.edges == b.edges
    c = gen_random(8, 3, seed=6)
    assert a.edges != c.edges or a.n != c.n  # one collision would be news
    fixed = gen_random(7, 3, edge_count=5, seed=1)
    assert fixed.edge_count() == 5


def test_random_planted_nu():
    h = gen_random(8, 3, m=2, target_nu=2, seed=9)
    assert max_m_matching(h, 2)[0].size() == 2


def test_random_budget_is_honest():
    # a single possible edge can never reach nu=2
    with pytest.raises(GenerationBudgetError):
        gen_random(3, 3, m=2, target_nu=2, seed=0, max_attempts=20)


def test_random_validation():
    with pytest.raises(ParameterError):
        gen_random(2, 3)
    with pytest.raises(ParameterError):
        gen_random(5, 3, target_nu=1)
    with pytest.raises(ParameterError):
        gen_random(5, 3, m=4)
    with pytest.raises(ParameterError):
        gen_random(5, 3, edge_count=99)
    with pytest.raises(ParameterError):
        gen_random(5, 3, edge_count=0)
