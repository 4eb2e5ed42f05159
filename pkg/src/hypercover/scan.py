"""Empirical sweeps over small hypergraph spaces.

Exhaustive mode enumerates every nonempty edge subset of the complete
k-uniform hypergraph on n vertices up to isomorphism, solves each instance
exactly, and aggregates cover/matching ratios.  Sampled mode draws seeded
random instances instead.  Reports track the best observed ratio per
matching number, which is an empirical lower bound on the corresponding
worst-case quantity, never an upper bound: sweeps of finite spaces cannot
certify suprema.

A recorded instance whose cover number exceeds the conjectured
ceil((k+1)/2) * nu budget at threshold k-1 is recomputed from scratch by a
dumb subset search before it may enter the violations list; a disagreement
between the solvers is raised as a defect instead of reported as a finding.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import (
    Hypergraph,
    InternalInvariantError,
    ParameterError,
    canonical_form,
    mask_of,
)
from .constructions import cover_nu1, cover_nu2, cover_nu3
from .exact import max_m_matching, min_m_cover
from .fraclp import solve_fractional
from .generators import gen_triangle_hypergraph
from math import comb

__all__ = [
    "ScanRecord",
    "ScanReport",
    "TuzaCorollaryReport",
    "scan_exhaustive",
    "scan_sampled",
    "merge_reports",
    "serialize_report",
    "check_tuza_corollary",
    "DEFAULT_EXHAUSTIVE_GUARD",
]

# Vertex counts beyond these make subset enumeration explode; callers who
# need more should sample instead.
DEFAULT_EXHAUSTIVE_GUARD = {3: 7}
_FALLBACK_GUARD = 6


@dataclass(frozen=True)
class ScanRecord:
    """One solved instance: canonical key and its exact invariants."""

    key: str
    nu: int
    tau: int
    tau_star: Fraction
    ratio: Fraction

    def line(self) -> str:
        ts = f"{self.tau_star.numerator}/{self.tau_star.denominator}"
        rt = f"{self.ratio.numerator}/{self.ratio.denominator}"
        return f"{self.key} {self.nu} {self.tau} {ts} {rt}"


@dataclass(frozen=True)
class ScanReport:
    """Aggregated scan output; all summaries derive from the records."""

    k: int
    m: int
    n: int
    mode: str
    seed: Optional[int]
    records: tuple
    violations: tuple

    def best_ratio_per_nu(self) -> dict:
        out: dict = {}
        for r in self.records:
            if r.nu > 0:
                cur = out.get(r.nu)
                if cur is None or r.ratio > cur:
                    out[r.nu] = r.ratio
        return out

    def best_frac_ratio_per_nu(self) -> dict:
        out: dict = {}
        for r in self.records:
            if r.nu > 0:
                frac = r.tau_star / r.nu
                cur = out.get(r.nu)
                if cur is None or frac > cur:
                    out[r.nu] = frac
        return out

    def max_ratio(self) -> Fraction:
        return max((r.ratio for r in self.records), default=Fraction(0))

    def max_frac_ratio(self) -> Fraction:
        return max(
            (r.tau_star / r.nu for r in self.records if r.nu > 0),
            default=Fraction(0),
        )


def _solve_one(h: Hypergraph, m: int) -> ScanRecord:
    key = canonical_form(h).hex()
    nu = max_m_matching(h, m)[0].size()
    tau = min_m_cover(h, m)[0].size()
    tau_star = solve_fractional(h, m)[1].total
    ratio = Fraction(tau, nu) if nu else Fraction(0)
    if ratio > comb(h.k, m):
        raise InternalInvariantError(
            f"ratio {ratio} beats the trivial bound {comb(h.k, m)}; solver defect"
        )
    return ScanRecord(key=key, nu=nu, tau=tau, tau_star=tau_star, ratio=ratio)


def _brute_force_tau(h: Hypergraph, m: int, ceiling: int) -> int:
    """Cover number by blunt subset search, independent of the solvers.

    Tries every candidate size from 1 to `ceiling`; returns the first size
    that admits a cover, or ceiling + 1 when none does.
    """
    pool = [mask_of(c) for c in itertools.combinations(range(h.n), m)]
    useful = [s for s in pool if any(s & ~t == 0 for t in h.edges)]
    for size in range(1, ceiling + 1):
        for combo in itertools.combinations(useful, size):
            if all(any(s & ~t == 0 for s in combo) for t in h.edges):
                return size
    return ceiling + 1


def _check_violation(h: Hypergraph, m: int, rec: ScanRecord) -> bool:
    """True when the instance genuinely exceeds the conjectured budget."""
    if m != h.k - 1:
        return False
    budget = rec.nu * ((h.k + 2) // 2)
    if rec.tau <= budget:
        return False
    # Never trust a counterexample from one solver: recompute the cover
    # number with the dumb search before flagging anything.
    confirmed = _brute_force_tau(h, m, budget)
    if confirmed <= budget:
        raise InternalInvariantError(
            f"cover solver reported {rec.tau} but a cover of size {confirmed} exists"
        )
    return True


def _build_report(k, m, n, mode, seed, records, violations) -> ScanReport:
    by_key = {}
    for r in records:
        prev = by_key.get(r.key)
        if prev is None:
            by_key[r.key] = r
        elif prev != r:
            raise InternalInvariantError(
                f"canonical key {r.key} solved two different ways"
            )
    ordered = tuple(by_key[key] for key in sorted(by_key))
    vio_keys = sorted({v.key for v in violations})
    vio = tuple(by_key[key] for key in vio_keys)
    return ScanReport(
        k=k, m=m, n=n, mode=mode, seed=seed, records=ordered, violations=vio
    )


def scan_exhaustive(
    k: int,
    m: int,
    n: int,
    *,
    guard: Optional[int] = None,
    index_range: Optional[tuple] = None,
) -> ScanReport:
    """Solve every nonempty edge subset of the complete k-uniform
    hypergraph on n vertices, deduplicated up to isomorphism.

    `index_range` restricts the sweep to subset indices [start, stop) so
    the work can be sharded; merge the shard reports to get the full scan.
    """
    if k < 1 or n < k:
        raise ParameterError(f"need n >= k >= 1, got n={n} k={k}")
    limit = guard if guard is not None else DEFAULT_EXHAUSTIVE_GUARD.get(
        k, _FALLBACK_GUARD
    )
    if n > limit:
        raise ParameterError(
            f"n={n} beyond the exhaustive guard {limit}; use scan_sampled"
        )
    pool = [mask_of(c) for c in itertools.combinations(range(n), k)]
    total = 1 << len(pool)
    start, stop = (1, total) if index_range is None else index_range
    if not (1 <= start <= stop <= total):
        raise ParameterError(f"index range [{start}, {stop}) out of [1, {total})")
    seen = set()
    records = []
    violations = []
    for idx in range(start, stop):
        edges = [pool[i] for i in range(len(pool)) if (idx >> i) & 1]
        h = Hypergraph.from_masks(n, k, edges)
        key = canonical_form(h).hex()
        if key in seen:
            continue
        seen.add(key)
        rec = _solve_one(h, m)
        records.append(rec)
        if _check_violation(h, m, rec):
            violations.append(rec)
    return _build_report(k, m, n, "exhaustive", None, records, violations)


def scan_sampled(
    k: int,
    m: int,
    n: int,
    count: int,
    seed: int,
    *,
    include=(),
) -> ScanReport:
    """Solve `count` seeded random instances, plus any explicitly included
    hypergraphs (processed first, before the random stream).

    No isomorph rejection: repeats collapse onto one record per canonical
    key. Identical seeds give identical reports.
    """
    if k < 1 or n < k:
        raise ParameterError(f"need n >= k >= 1, got n={n} k={k}")
    if count < 0:
        raise ParameterError("count must be nonnegative")
    records = []
    violations = []

    def take(h: Hypergraph) -> None:
        rec = _solve_one(h, m)
        records.append(rec)
        if _check_violation(h, m, rec):
            violations.append(rec)

    for h in include:
        if h.k != k:
            raise ParameterError(
                f"included instance is {h.k}-uniform, scan wants {k}"
            )
        take(h)
    rng = random.Random(seed)
    total = comb(n, k)
    cap = min(total, max(2 * n, 8))
    for _ in range(count):
        edge_count = rng.randint(1, cap)
        picked = set()
        while len(picked) < edge_count:
            picked.add(mask_of(rng.sample(range(n), k)))
        take(Hypergraph.from_masks(n, k, picked))
    return _build_report(k, m, n, "sampled", seed, records, violations)


def merge_reports(a: ScanReport, b: ScanReport) -> ScanReport:
    """Deterministic fold of two shard reports over the same parameters."""
    for field in ("k", "m", "n", "mode"):
        if getattr(a, field) != getattr(b, field):
            raise ParameterError(
                f"cannot merge scans with different {field}: "
                f"{getattr(a, field)} vs {getattr(b, field)}"
            )
    seed = a.seed if a.seed == b.seed else None
    return _build_report(
        a.k,
        a.m,
        a.n,
        a.mode,
        seed,
        a.records + b.records,
        a.violations + b.violations,
    )


def serialize_report(report: ScanReport) -> str:
    """Line-oriented rendering with a trailing summary block; stable."""
    seed_text = "-" if report.seed is None else str(report.seed)
    lines = [
        f"# scan k={report.k} m={report.m} n={report.n} "
        f"mode={report.mode} seed={seed_text}"
    ]
    for rec in report.records:
        lines.append(rec.line())
    lines.append("# summary")
    lines.append(f"# instances {len(report.records)}")
    for nu, ratio in sorted(report.best_ratio_per_nu().items()):
        lines.append(f"# best_ratio nu={nu} {ratio.numerator}/{ratio.denominator}")
    for nu, ratio in sorted(report.best_frac_ratio_per_nu().items()):
        lines.append(
            f"# best_frac_ratio nu={nu} {ratio.numerator}/{ratio.denominator}"
        )
    mx = report.max_ratio()
    mf = report.max_frac_ratio()
    lines.append(f"# max_ratio {mx.numerator}/{mx.denominator}")
    lines.append(f"# max_frac_ratio {mf.numerator}/{mf.denominator}")
    lines.append(f"# violations {len(report.violations)}")
    for rec in report.violations:
        lines.append(f"# violation {rec.line()}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class TuzaCorollaryReport:
    """Exact and constructive triangle cover data for one graph."""

    triangle_count: int
    nu: int
    tau: int
    precondition_met: bool
    bound_ok: bool
    constructive_size: Optional[int]
    cover: object
    message: str


def check_tuza_corollary(graph_edges) -> TuzaCorollaryReport:
    """Check the edge-disjoint-triangle cover bound on one graph.

    Builds the triangle system as a 3-uniform hypergraph on the graph's
    vertices and solves it exactly at threshold 2, where the matching
    number counts edge-disjoint triangles and the cover number counts
    triangle-hitting graph edges.  When at most three disjoint triangles
    exist, also produces a constructive cover as an independent witness
    that tau <= 2 nu; its 2-sets are graph edges to delete.  With four or
    more disjoint triangles the bound is not guaranteed and only the exact
    numbers are reported.
    """
    edges = list(graph_edges)
    n = max((max(u, v) for u, v in edges), default=-1) + 1
    th, _labels = gen_triangle_hypergraph(n, edges)
    if th.edge_count() == 0:
        return TuzaCorollaryReport(
            triangle_count=0,
            nu=0,
            tau=0,
            precondition_met=True,
            bound_ok=True,
            constructive_size=0,
            cover=None,
            message="no triangles",
        )
    nu = max_m_matching(th, 2)[0].size()
    tau = min_m_cover(th, 2)[0].size()
    if nu > 3:
        return TuzaCorollaryReport(
            triangle_count=th.edge_count(),
            nu=nu,
            tau=tau,
            precondition_met=False,
            bound_ok=tau <= 2 * nu,
            constructive_size=None,
            cover=None,
            message="corollary precondition unmet: more than 3 disjoint triangles",
        )
    builder = {1: cover_nu1, 2: cover_nu2, 3: cover_nu3}[nu]
    constructive = builder(th)
    bound_ok = tau <= 2 * nu and constructive.size() <= 2 * nu
    return TuzaCorollaryReport(
        triangle_count=th.edge_count(),
        nu=nu,
        tau=tau,
        precondition_met=True,
        bound_ok=bound_ok,
        constructive_size=constructive.size(),
        cover=constructive,
        message="cover bound certified exactly and constructively",
    )
