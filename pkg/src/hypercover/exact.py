"""Exact m-matching and m-cover solvers.

Both solvers are branch and bound over bitmask edges. They are deterministic:
edges are scanned in canonical order, improvements are strict, so the returned
optimum is the lexicographically first one. Intended scale is desk-sized
instances (tens of edges); the exhaustive cross-check oracle lives in the test
suite, not here.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .core import (
    CoverCertificate,
    Hypergraph,
    InternalInvariantError,
    MalformedCertificateError,
    Matching,
    ParameterError,
    m_subsets,
    make_cover,
    vertices_of,
)

__all__ = [
    "SolveStats",
    "SandwichReport",
    "max_m_matching",
    "min_m_cover",
    "verify_matching",
    "verify_cover",
    "sandwich_check",
]


@dataclass(frozen=True)
class SolveStats:
    """Search effort: nodes visited, final optimum, wall seconds."""

    nodes: int
    best_bound: int
    elapsed: float


@dataclass(frozen=True)
class SandwichReport:
    """The chain nu <= nu* = tau* <= tau <= C(k,m)*nu, all exact."""

    nu: int
    nu_star: Fraction
    tau_star: Fraction
    tau: int
    binom_bound: int


def _check_m(h: Hypergraph, m: int) -> None:
    if not 1 <= m <= h.k:
        raise ParameterError(f"m={m} out of range for uniformity k={h.k}")


def max_m_matching(h: Hypergraph, m: int) -> tuple[Matching, SolveStats]:
    """Largest set of edges pairwise intersecting in fewer than m vertices.

    Include-first DFS over edges in canonical order with a greedy residual
    bound: chosen + count of later edges compatible with everything chosen.
    """
    _check_m(h, m)
    t0 = time.perf_counter()
    edges = h.edges
    ne = len(edges)
    if ne == 0:
        return Matching((), m), SolveStats(0, 0, time.perf_counter() - t0)

    best: list[int] = []
    chosen: list[int] = []
    chosen_masks: list[int] = []
    nodes = 0

    def ok(mask: int) -> bool:
        return all((mask & c).bit_count() < m for c in chosen_masks)

    def dfs(pos: int) -> None:
        nonlocal nodes, best
        nodes += 1
        ub = len(chosen) + sum(1 for i in range(pos, ne) if ok(edges[i]))
        if ub <= len(best):
            return
        if pos == ne:
            best = chosen.copy()
            return
        e = edges[pos]
        if ok(e):
            chosen.append(pos)
            chosen_masks.append(e)
            dfs(pos + 1)
            chosen.pop()
            chosen_masks.pop()
        dfs(pos + 1)

    dfs(0)
    stats = SolveStats(nodes, len(best), time.perf_counter() - t0)
    return Matching(tuple(best), m), stats


def min_m_cover(h: Hypergraph, m: int) -> tuple[CoverCertificate, SolveStats]:
    """Smallest set of m-sets such that every edge contains one of them.

    Candidate pool is the union of every edge's m-subsets. Branches on the
    first uncovered edge in canonical order; prunes with two lower bounds on
    the uncovered remainder (greedy m-matching, and uncovered count divided
    by the best single-set coverage).
    """
    _check_m(h, m)
    t0 = time.perf_counter()
    edges = h.edges
    ne = len(edges)
    if ne == 0:
        return make_cover((), m), SolveStats(0, 0, time.perf_counter() - t0)

    pool: dict[int, int] = {}
    per_edge: list[tuple[int, ...]] = []
    for i, e in enumerate(edges):
        subs = m_subsets(e, m)
        per_edge.append(subs)
        for s in subs:
            pool[s] = pool.get(s, 0) | (1 << i)
    pool_order = sorted(pool, key=vertices_of)
    max_cov = max(bm.bit_count() for bm in pool.values())
    full = (1 << ne) - 1

    # Greedy cover for the initial upper bound; deterministic tie-break.
    covered = 0
    greedy_sets: list[int] = []
    while covered != full:
        best_set = None
        best_gain = 0
        for s in pool_order:
            gain = (pool[s] & ~covered).bit_count()
            if gain > best_gain:
                best_gain = gain
                best_set = s
        assert best_set is not None
        greedy_sets.append(best_set)
        covered |= pool[best_set]

    best_sets = greedy_sets
    best_size = len(greedy_sets)
    nodes = 0
    cur: list[int] = []

    def lower_bound(covered: int, unc: int) -> int:
        lb = -(-unc // max_cov)
        picked: list[int] = []
        rem = full & ~covered
        while rem:
            i = (rem & -rem).bit_length() - 1
            rem &= rem - 1
            e = edges[i]
            if all((e & p).bit_count() < m for p in picked):
                picked.append(e)
        return max(lb, len(picked))

    def dfs(covered: int) -> None:
        nonlocal nodes, best_sets, best_size
        nodes += 1
        if covered == full:
            if len(cur) < best_size:
                best_size = len(cur)
                best_sets = cur.copy()
            return
        unc = (full & ~covered).bit_count()
        if len(cur) + lower_bound(covered, unc) >= best_size:
            return
        rem = full & ~covered
        i = (rem & -rem).bit_length() - 1
        for s in per_edge[i]:
            cur.append(s)
            dfs(covered | pool[s])
            cur.pop()

    dfs(0)
    stats = SolveStats(nodes, best_size, time.perf_counter() - t0)
    return make_cover(best_sets, m), stats


def verify_matching(h: Hypergraph, matching: Matching) -> bool:
    """Check that the indices name distinct edges pairwise intersecting < m."""
    _check_m(h, matching.m)
    idx = matching.edge_indices
    for i in idx:
        if not 0 <= i < len(h.edges):
            raise MalformedCertificateError(f"edge index {i} out of range")
    if len(set(idx)) != len(idx):
        raise MalformedCertificateError("matching repeats an edge index")
    masks = [h.edges[i] for i in idx]
    m = matching.m
    for a in range(len(masks)):
        for b in range(a + 1, len(masks)):
            if (masks[a] & masks[b]).bit_count() >= m:
                return False
    return True


def verify_cover(h: Hypergraph, cert: CoverCertificate) -> bool:
    """Check that every edge contains one of the certificate's m-sets."""
    m = cert.m
    if not 0 <= m <= h.k:
        raise MalformedCertificateError(f"cover m={m} out of range for k={h.k}")
    limit = (1 << h.n) - 1 if h.n else 0
    for s in cert.msets:
        if s & ~limit:
            raise MalformedCertificateError(
                f"cover set {vertices_of(s)} has vertices outside range(0, {h.n})"
            )
        if s.bit_count() != m:
            raise MalformedCertificateError(
                f"cover set {vertices_of(s)} has size {s.bit_count()}, expected {m}"
            )
    return all(any(e & s == s for s in cert.msets) for e in h.edges)


def sandwich_check(h: Hypergraph, m: int) -> SandwichReport:
    """Solve all four quantities and verify the sandwich chain exactly.

    A violated inequality cannot be blamed on input data, so it raises
    InternalInvariantError rather than returning.
    """
    from . import fraclp

    matching, _ = max_m_matching(h, m)
    cover, _ = min_m_cover(h, m)
    primal, dual = fraclp.solve_fractional(h, m)
    nu = matching.size()
    tau = cover.size()
    nu_star = primal.total
    tau_star = dual.total
    bb = comb(h.k, m) * nu
    chain = nu <= nu_star == tau_star <= tau <= bb
    if not chain:
        raise InternalInvariantError(
            f"sandwich violated: nu={nu} nu*={nu_star} tau*={tau_star} "
            f"tau={tau} bound={bb}"
        )
    return SandwichReport(nu=nu, nu_star=nu_star, tau_star=tau_star, tau=tau, binom_bound=bb)
