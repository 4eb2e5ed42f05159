"""Reference implementations used as ground truth in the test suite.

Everything here favors obviousness over speed: plain subset enumeration
and permutation scans, no pruning heuristics shared with the package
code. Keep instances small when calling these.
"""

from __future__ import annotations

import itertools

from hypercover.core import Hypergraph, mask_of, vertices_of


def oracle_max_matching(h: Hypergraph, m: int) -> int:
    """Largest pairwise <m-intersecting edge set, by descending-size scan."""
    edges = h.edges
    for size in range(len(edges), 0, -1):
        for combo in itertools.combinations(edges, size):
            good = all(
                (a & b).bit_count() < m
                for a, b in itertools.combinations(combo, 2)
            )
            if good:
                return size
    return 0


def oracle_min_cover(h: Hypergraph, m: int) -> int:
    """Smallest m-set family hitting every edge, by ascending-size scan."""
    if not h.edges:
        return 0
    pool = [
        mask_of(c)
        for c in itertools.combinations(range(h.n), m)
        if any(mask_of(c) & ~e == 0 for e in h.edges)
    ]
    for size in range(0, len(pool) + 1):
        for combo in itertools.combinations(pool, size):
            if all(any(s & ~e == 0 for s in combo) for e in h.edges):
                return size
    raise AssertionError("some edge admits no m-subset at all")


def oracle_canonical(h: Hypergraph) -> bytes:
    """Lexicographic minimum over every vertex permutation, brute force."""
    edge_tuples = [vertices_of(e) for e in h.edges]
    best = None
    for perm in itertools.permutations(range(h.n)):
        relabeled = sorted(
            tuple(sorted(perm[v] for v in e)) for e in edge_tuples
        )
        if best is None or relabeled < best:
            best = relabeled
    body = ";".join(",".join(str(v) for v in e) for e in (best or []))
    return f"{h.n}.{h.k}:{body}".encode("ascii")


def oracle_graph_matching(n: int, edges) -> int:
    """Maximum matching of a simple graph by include/exclude recursion."""
    pairs = sorted({(min(u, v), max(u, v)) for u, v in edges})

    def grow(i: int, used: int) -> int:
        if i == len(pairs):
            return 0
        u, v = pairs[i]
        best = grow(i + 1, used)
        if not (used >> u) & 1 and not (used >> v) & 1:
            best = max(best, 1 + grow(i + 1, used | (1 << u) | (1 << v)))
        return best

    return grow(0, 0)


def oracle_triangle_count(n: int, edges) -> int:
    """Triple scan over all vertex triples with an adjacency matrix."""
    adj = [[False] * n for _ in range(n)]
    for u, v in edges:
        adj[u][v] = adj[v][u] = True
    count = 0
    for a in range(n):
        for b in range(a + 1, n):
            if not adj[a][b]:
                continue
            for c in range(b + 1, n):
                if adj[a][c] and adj[b][c]:
                    count += 1
    return count
