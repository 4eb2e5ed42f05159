"""Instance generators: named families and seeded random hypergraphs."""

from __future__ import annotations

import random
from itertools import combinations
from math import comb

from . import exact
from .core import (
    GenerationBudgetError,
    Hypergraph,
    InternalInvariantError,
    ParameterError,
    mask_of,
)

__all__ = [
    "gen_complete_extremal",
    "gen_triangle_hypergraph",
    "gen_biplane_11_5_2",
    "gen_random",
]


def gen_complete_extremal(k: int) -> Hypergraph:
    """All k-subsets of a (k+1)-point ground set.

    The tight family for the cover-versus-matching gap: any two edges share
    k-1 vertices, so the (k-1)-matching number is 1, while ceil((k+1)/2)
    cover sets are needed.
    """
    if k < 2:
        raise ParameterError(f"extremal family needs k >= 2, got {k}")
    edges = combinations(range(k + 1), k)
    return Hypergraph(k + 1, k, edges)


def gen_triangle_hypergraph(
    n: int, graph_edges: list[tuple[int, int]]
) -> tuple[Hypergraph, tuple[tuple[int, int], ...]]:
    """Triangle system of a simple graph, as a 3-uniform hypergraph.

    The hypergraph keeps the graph's vertex set; every triangle contributes
    its vertex triple as one hyperedge.  Under this encoding two triangles
    are edge-disjoint in the graph exactly when their triples share at most
    one vertex, and a pair of vertices covers a triple exactly when it is a
    graph edge of that triangle, so the threshold-2 matching and cover
    numbers of the result are the classical triangle packing and triangle
    edge-cover numbers.

    Also returns the graph's edge list, deduplicated and sorted; every
    2-set in a minimal cover of the hypergraph is one of these pairs.
    """
    seen: set[tuple[int, int]] = set()
    for u, v in graph_edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ParameterError(f"edge ({u},{v}) outside range(0, {n})")
        if u == v:
            raise ParameterError(f"loop at vertex {u} not allowed")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParameterError(f"duplicate edge ({u},{v})")
        seen.add(key)
    labels = tuple(sorted(seen))
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in labels:
        adj[u].add(v)
        adj[v].add(u)
    triples: list[tuple[int, int, int]] = []
    for u, v in labels:
        for w in sorted(adj[u] & adj[v]):
            if w > v:
                triples.append((u, v, w))
    return Hypergraph(n, 3, triples), labels


_BIPLANE_BASE = (1, 3, 4, 5, 9)


def gen_biplane_11_5_2() -> Hypergraph:
    """The 11-point biplane: translates of a perfect difference set mod 11.

    Every pair of points lies in exactly two blocks and every two blocks
    meet in exactly two points; both properties are checked on the way out
    because downstream results lean on them.
    """
    blocks = [
        tuple(sorted((b + i) % 11 for b in _BIPLANE_BASE)) for i in range(11)
    ]
    h = Hypergraph(11, 5, blocks)
    if h.edge_count() != 11:
        raise InternalInvariantError("biplane translate construction collided")
    for pair in combinations(range(11), 2):
        pm = mask_of(pair)
        hits = sum(1 for e in h.edges if e & pm == pm)
        if hits != 2:
            raise InternalInvariantError(
                f"pair {pair} lies in {hits} blocks, expected 2"
            )
    for a, b in combinations(h.edges, 2):
        if (a & b).bit_count() != 2:
            raise InternalInvariantError("two blocks meet in other than 2 points")
    return h


def gen_random(
    n: int,
    k: int,
    *,
    edge_count: int | None = None,
    m: int | None = None,
    target_nu: int | None = None,
    seed: int | None = None,
    max_attempts: int = 1000,
) -> Hypergraph:
    """Seeded random k-uniform hypergraph, optionally with a planted nu.

    Plain rejection sampling: draw, solve, retry. Honest but slow for rare
    targets, which is the point; raises GenerationBudgetError with the
    attempt count when the budget runs out.
    """
    if k < 1 or n < k:
        raise ParameterError(f"need n >= k >= 1, got n={n} k={k}")
    if target_nu is not None and m is None:
        raise ParameterError("target_nu needs m to give it meaning")
    if m is not None and not 1 <= m <= k:
        raise ParameterError(f"m={m} out of range for uniformity k={k}")
    total = comb(n, k)
    cap = min(total, max(2 * n, 8)) if edge_count is None else edge_count
    if not 1 <= cap <= total:
        raise ParameterError(f"edge_count={edge_count} out of range (max {total})")
    rng = random.Random(seed)
    for attempt in range(1, max_attempts + 1):
        count = cap if edge_count is not None else rng.randint(1, cap)
        picked: set[int] = set()
        while len(picked) < count:
            picked.add(mask_of(rng.sample(range(n), k)))
        h = Hypergraph.from_masks(n, k, picked)
        if target_nu is None:
            return h
        nu = exact.max_m_matching(h, m)[0].size()
        if nu == target_nu:
            return h
    raise GenerationBudgetError(
        f"no instance with nu={target_nu} (m={m}) in {max_attempts} attempts"
    )
