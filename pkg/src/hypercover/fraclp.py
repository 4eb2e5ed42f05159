"""Fractional relaxation by exact rational simplex.

The fractional matching LP is: maximize sum(x_e) subject to, for every m-set
S contained in at least one edge, sum(x_e : S subset of e) <= 1, with x >= 0.
Its dual is the fractional cover LP, and the simplex tableau hands us the
optimal dual for free: the objective-row coefficients of the slack columns.

Everything is a Fraction. Bland's rule (smallest index enters, ties on the
leaving row broken by smallest basic variable) guarantees termination without
any epsilon tuning. Dense tableaus are fine at the intended scale; a guard
refuses instances that would blow past it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    Hypergraph,
    InternalInvariantError,
    MalformedCertificateError,
    ParameterError,
    PreconditionError,
    m_subsets,
    mask_of,
    mask_text,
    vertices_of,
)

__all__ = [
    "FractionalAssignment",
    "solve_fractional",
    "verify_fractional",
    "format_fractional",
    "parse_fractional",
]

_SIMPLEX_GUARD = 5000


@dataclass(frozen=True)
class FractionalAssignment:
    """Nonnegative rational weights on edges (matching) or m-sets (cover)."""

    side: str  # "matching" or "cover"
    m: int
    weights: dict[int, Fraction]

    def __post_init__(self) -> None:
        if self.side not in ("matching", "cover"):
            raise ParameterError(f"unknown side {self.side!r}")

    @property
    def total(self) -> Fraction:
        return sum(self.weights.values(), Fraction(0))

    def items_canonical(self) -> list[tuple[int, Fraction]]:
        return sorted(self.weights.items(), key=lambda kv: vertices_of(kv[0]))


def _constraint_rows(h: Hypergraph, m: int) -> list[int]:
    """All m-sets contained in at least one edge, in canonical order."""
    seen: set[int] = set()
    for e in h.edges:
        seen.update(m_subsets(e, m))
    return sorted(seen, key=vertices_of)


def solve_fractional(
    h: Hypergraph, m: int
) -> tuple[FractionalAssignment, FractionalAssignment]:
    """Optimal fractional matching and fractional cover, exactly.

    Returns (matching, cover); their totals are equal by strong duality and
    that equality is asserted before returning.
    """
    if not 1 <= m <= h.k:
        raise ParameterError(f"m={m} out of range for uniformity k={h.k}")
    edges = h.edges
    nv = len(edges)
    if nv == 0:
        empty: dict[int, Fraction] = {}
        return (
            FractionalAssignment("matching", m, empty),
            FractionalAssignment("cover", m, dict(empty)),
        )
    rows = _constraint_rows(h, m)
    nr = len(rows)
    if nv > _SIMPLEX_GUARD or nr > _SIMPLEX_GUARD:
        raise PreconditionError(
            f"LP too large: {nv} variables, {nr} rows (guard {_SIMPLEX_GUARD})"
        )

    one = Fraction(1)
    zero = Fraction(0)
    # Tableau: nr constraint rows then the objective row. Columns: nv
    # structural, nr slack, 1 rhs. Slack basis is feasible since b = 1 > 0.
    width = nv + nr + 1
    tab: list[list[Fraction]] = []
    for i, s in enumerate(rows):
        row = [zero] * width
        for j, e in enumerate(edges):
            if e & s == s:
                row[j] = one
        row[nv + i] = one
        row[-1] = one
        tab.append(row)
    obj = [zero] * width
    for j in range(nv):
        obj[j] = -one
    tab.append(obj)
    basis = [nv + i for i in range(nr)]

    zrow = tab[nr]
    while True:
        enter = -1
        for j in range(nv + nr):
            if zrow[j] < zero:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best_ratio = None
        for i in range(nr):
            a = tab[i][enter]
            if a > zero:
                ratio = tab[i][-1] / a
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leave])
                ):
                    best_ratio = ratio
                    leave = i
        if leave < 0:
            raise InternalInvariantError("matching LP unbounded; constraints missing")
        piv = tab[leave][enter]
        tab[leave] = [a / piv for a in tab[leave]]
        prow = tab[leave]
        for i in range(nr + 1):
            if i == leave:
                continue
            f = tab[i][enter]
            if f != zero:
                tab[i] = [a - f * b for a, b in zip(tab[i], prow)]
        basis[leave] = enter
        zrow = tab[nr]

    x = [zero] * nv
    for i in range(nr):
        if basis[i] < nv:
            x[basis[i]] = tab[i][-1]
    primal = {edges[j]: x[j] for j in range(nv) if x[j] != zero}
    dual = {rows[i]: zrow[nv + i] for i in range(nr) if zrow[nv + i] != zero}
    value = zrow[-1]

    matching = FractionalAssignment("matching", m, primal)
    cover = FractionalAssignment("cover", m, dual)
    if matching.total != value or cover.total != value:
        raise InternalInvariantError(
            f"strong duality broken: primal={matching.total} "
            f"dual={cover.total} objective={value}"
        )
    return matching, cover


def verify_fractional(h: Hypergraph, fa: FractionalAssignment) -> bool:
    """Feasibility check. Malformed certificates raise; infeasible returns False.

    A matching is feasible when every m-set's incident weight is at most 1;
    a cover is feasible when every edge's contained weight is at least 1.
    """
    m = fa.m
    if not 1 <= m <= h.k:
        raise MalformedCertificateError(f"m={m} out of range for k={h.k}")
    limit = (1 << h.n) - 1 if h.n else 0
    for key, w in fa.weights.items():
        if w < 0:
            raise MalformedCertificateError(f"negative weight on {vertices_of(key)}")
        if key & ~limit:
            raise MalformedCertificateError(
                f"weight key {vertices_of(key)} outside range(0, {h.n})"
            )
    if fa.side == "matching":
        edge_set = set(h.edges)
        for key in fa.weights:
            if key not in edge_set:
                raise MalformedCertificateError(
                    f"matching weight on non-edge {vertices_of(key)}"
                )
        for s in _constraint_rows(h, m):
            load = sum(
                (w for e, w in fa.weights.items() if e & s == s), Fraction(0)
            )
            if load > 1:
                return False
        return True
    for key in fa.weights:
        if key.bit_count() != m:
            raise MalformedCertificateError(
                f"cover weight key {vertices_of(key)} has size "
                f"{key.bit_count()}, expected {m}"
            )
    for e in h.edges:
        load = sum(
            (w for s, w in fa.weights.items() if e & s == s), Fraction(0)
        )
        if load < 1:
            return False
    return True


def format_fractional(fa: FractionalAssignment) -> str:
    """Dump as a replayable text block, one weighted set per line."""
    total = fa.total
    lines = [f"# fractional side={fa.side} m={fa.m} total={total.numerator}/{total.denominator}"]
    for key, w in fa.items_canonical():
        lines.append(f"{mask_text(key)} {w.numerator}/{w.denominator}")
    return "\n".join(lines) + "\n"


def parse_fractional(text: str) -> FractionalAssignment:
    side = None
    m = None
    weights: dict[int, Fraction] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if line.startswith("# fractional"):
                for token in line[1:].split():
                    if token.startswith("side="):
                        side = token[5:]
                    elif token.startswith("m="):
                        m = int(token[2:])
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParameterError(f"bad fractional line: {line!r}")
        key = mask_of(int(t) for t in parts[0].split(","))
        num, _, den = parts[1].partition("/")
        w = Fraction(int(num), int(den) if den else 1)
        weights[key] = weights.get(key, Fraction(0)) + w
    if side is None or m is None:
        raise ParameterError("fractional dump is missing its header line")
    return FractionalAssignment(side, m, weights)
