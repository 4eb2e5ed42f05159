"""Constructive cover recipes certifying the package's upper bounds.

Unlike the exact solvers, nothing here searches: each routine assembles a
certificate by a fixed recipe whose size is bounded in advance.  Every
routine re-checks its own precondition through the exact solver, then
verifies the finished certificate and asserts the advertised bound before
returning it.  Once the precondition has passed, any later failure is an
InternalInvariantError: a defect in this module, never the caller's fault.

The integer recipes are organised by matching number.  ``cover_nu1``
handles families where every two edges nearly coincide, ``cover_nu2`` and
``cover_nu3`` peel larger families apart via the tight neighborhoods of a
maximum matching, and the ``cover_g1_*`` family handles wider overlap
thresholds on single-matching inputs.  The ``frac_cover_*`` routines emit
exact-rational fractional covers for the same regimes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Optional

from .core import (
    CoverCertificate,
    Hypergraph,
    InternalInvariantError,
    Matching,
    ParameterError,
    PreconditionError,
    m_subsets,
    make_cover,
    vertices_of,
)
from .exact import max_m_matching, min_m_cover, verify_cover, verify_matching
from .fraclp import FractionalAssignment, solve_fractional, verify_fractional

__all__ = [
    "NeighborhoodDecomposition",
    "MatchingTypeClassification",
    "DispensabilityTable",
    "AuxiliaryIntersectionGraph",
    "decompose",
    "find_disconnected_partition",
    "classify_max_matching",
    "cover_nu1",
    "cover_nu2",
    "cover_nu3",
    "build_dispensability",
    "aux_intersection_graph",
    "max_matching_general_graph",
    "cover_g1_km",
    "cover_g1_52",
    "cover_g1_kkm2",
    "frac_cover_2kk",
    "frac_cover_hstar",
    "frac_cover_kkm2",
]


# -- shared plumbing -------------------------------------------------------


def _fatal(msg: str) -> None:
    raise InternalInvariantError(msg)


def _require_nu(h: Hypergraph, m: int, expected: int) -> Matching:
    """Check the matching-number precondition; return the witness matching."""
    matching, _ = max_m_matching(h, m)
    if matching.size() != expected:
        raise PreconditionError(
            f"matching number is {matching.size()}, this construction needs {expected}"
        )
    return matching


def _internal(fn: Callable, *args):
    """Run a sub-recipe whose precondition is guaranteed by theory.

    A PreconditionError out of `fn` means the guarantee was violated, which
    is a structural defect here, not bad input.
    """
    try:
        return fn(*args)
    except PreconditionError as exc:
        raise InternalInvariantError(f"sub-recipe precondition broke: {exc}") from exc


def _finish(
    h: Hypergraph, msets, m: int, bound: int, label: str
) -> CoverCertificate:
    cert = make_cover(msets, m)
    if not verify_cover(h, cert):
        _fatal(f"{label}: assembled sets leave an edge uncovered")
    if cert.size() > bound:
        _fatal(f"{label}: cover of size {cert.size()} exceeds the bound {bound}")
    return cert


def _finish_fractional(
    h: Hypergraph,
    weights: dict,
    m: int,
    bound: Optional[Fraction],
    label: str,
) -> FractionalAssignment:
    clean = {s: Fraction(w) for s, w in weights.items() if w != 0}
    fa = FractionalAssignment(side="cover", m=m, weights=clean)
    if not verify_fractional(h, fa):
        _fatal(f"{label}: fractional certificate leaves an edge light")
    if bound is not None and fa.total > bound:
        _fatal(f"{label}: total {fa.total} exceeds the bound {bound}")
    return fa


def _is_cover(h: Hypergraph, msets) -> bool:
    return all(any(s & ~t == 0 for s in msets) for t in h.edges)


def _uncovered(edge_masks, msets) -> list:
    return [t for t in edge_masks if all(s & ~t for s in msets)]


def _intersection(masks) -> int:
    out = -1
    for t in masks:
        out &= t
    return out


def _common_external(members, base: int) -> int:
    """The one vertex outside `base` that every other member leans on."""
    found = 0
    for t in members:
        if t == base:
            continue
        out = t & ~base
        if out.bit_count() != 1:
            _fatal("neighborhood member strays more than one vertex from its edge")
        if found and out != found:
            _fatal("neighborhood members lean on different external vertices")
        found = out
    if not found:
        _fatal("no neighborhood member to take an external vertex from")
    return found


def _side_cover(h: Hypergraph, edge_masks, cap: int, label: str) -> list:
    """Cover a residual bundle with the single-matching recipe, capped."""
    if not edge_masks:
        return []
    part = _internal(cover_nu1, h.restrict(edge_masks))
    if part.size() > cap:
        _fatal(f"{label}: residual cover of {part.size()} breaks the {cap}-set budget")
    return list(part.msets)


# -- tight neighborhoods of a matching -------------------------------------


@dataclass(frozen=True)
class NeighborhoodDecomposition:
    """Per matching edge, the tight and the exclusively tight edges.

    `T_sets[i]` holds every edge sharing at least k-1 vertices with the
    i-th matching edge; `S_sets[i]` keeps only those tight with no other
    matching edge.  `degrees[v]` counts matching edges through vertex v.
    """

    base_matching: Matching
    S_sets: tuple
    T_sets: tuple
    degrees: tuple


def decompose(h: Hypergraph, matching: Matching) -> NeighborhoodDecomposition:
    m = h.k - 1
    if matching.m != m:
        raise PreconditionError(
            f"decomposition expects tightness {m}, matching carries {matching.m}"
        )
    if not verify_matching(h, matching):
        raise PreconditionError("decompose: not a valid matching of this hypergraph")
    mmasks = matching.masks(h)
    T_sets = []
    S_sets = []
    for e in mmasks:
        tight = tuple(t for t in h.edges if (t & e).bit_count() >= m)
        rivals = [f for f in mmasks if f != e]
        T_sets.append(tight)
        S_sets.append(
            tuple(t for t in tight if all((t & f).bit_count() < m for f in rivals))
        )
    for a, b in itertools.combinations(S_sets, 2):
        if set(a) & set(b):
            _fatal("decompose: exclusive neighborhoods overlap")
    degrees = tuple(
        sum(1 for e in mmasks if (e >> v) & 1) for v in range(h.n)
    )
    return NeighborhoodDecomposition(
        base_matching=matching,
        S_sets=tuple(S_sets),
        T_sets=tuple(T_sets),
        degrees=degrees,
    )


def find_disconnected_partition(matching: Matching, h: Hypergraph):
    """Split the matching edges into two groups with all cross overlaps
    below k-2, or return None when no such split exists.

    The graph on matching edges joining pairs that share at least k-2
    vertices either is connected (None) or falls apart; the group holding
    the lexicographically first edge comes first.
    """
    masks = sorted(matching.masks(h), key=vertices_of)
    if len(masks) < 2:
        return None
    threshold = h.k - 2
    reached = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in range(len(masks)):
            if j in reached:
                continue
            if (masks[i] & masks[j]).bit_count() >= threshold:
                reached.add(j)
                frontier.append(j)
    if len(reached) == len(masks):
        return None
    group_one = tuple(masks[i] for i in sorted(reached))
    group_two = tuple(masks[i] for i in range(len(masks)) if i not in reached)
    return (group_one, group_two)


# -- shape classification for three-edge matchings --------------------------


@dataclass(frozen=True)
class MatchingTypeClassification:
    """Shape of a three-edge maximum matching under the k-2 contact graph.

    `type_tag` is "disconnected" when the contact graph falls apart,
    "3U-a".."3U-c" for the three connected 3-uniform shapes, and
    "kU-a".."kU-f" for the six connected shapes at uniformity four and up.
    `role_map` names the participating masks by their role.
    """

    type_tag: str
    role_map: dict


def classify_max_matching(
    h: Hypergraph, matching: Matching
) -> MatchingTypeClassification:
    if matching.size() != 3:
        raise ParameterError("classification needs a matching of exactly three edges")
    k = h.k
    if matching.m != k - 1:
        raise ParameterError("classification works at tightness threshold k-1")
    if not verify_matching(h, matching):
        raise PreconditionError("classify: not a valid matching of this hypergraph")
    parts = find_disconnected_partition(matching, h)
    if parts is not None:
        return MatchingTypeClassification(
            type_tag="disconnected",
            role_map={"group_one": parts[0], "group_two": parts[1]},
        )
    masks = sorted(matching.masks(h), key=vertices_of)
    ties = [
        (i, j)
        for i, j in itertools.combinations(range(3), 2)
        if (masks[i] & masks[j]).bit_count() >= k - 2
    ]
    if len(ties) == 2:
        # path: the center sits on both contact pairs
        deg = [0, 0, 0]
        for i, j in ties:
            deg[i] += 1
            deg[j] += 1
        center_i = deg.index(2)
    elif len(ties) == 3:
        center_i = 0
    else:
        _fatal("classify: connected contact graph with fewer than two ties")
    center = masks[center_i]
    b1, b2 = (masks[i] for i in range(3) if i != center_i)
    core = masks[0] & masks[1] & masks[2]
    extra = (b1 & b2) & ~core
    key = (core.bit_count() - k, extra.bit_count())
    letters = {
        (-3, 0): "a",
        (-2, 0): "b",
        (-4, 0): "c",
        (-4, 1): "d",
        (-4, 2): "e",
        (-3, 1): "f",
    }
    letter = letters.get(key)
    if letter is None:
        _fatal(
            f"classify: no shape for a common core of {core.bit_count()} "
            f"and {extra.bit_count()} shared branch vertices at k={k}"
        )
    if k == 3:
        three = {"a": "a", "b": "b", "f": "c"}
        if letter not in three:
            _fatal("classify: impossible shape at uniformity three")
        tag = "3U-" + three[letter]
    else:
        tag = "kU-" + letter
    return MatchingTypeClassification(
        type_tag=tag,
        role_map={
            "center": center,
            "branch_one": b1,
            "branch_two": b2,
            "core": core,
            "branch_extra": extra,
        },
    )


# -- covers at tightness k-1, by matching number ----------------------------


def cover_nu1(h: Hypergraph) -> CoverCertificate:
    """Cover a family in which every two edges share at least k-1 vertices.

    Either all edges share k-1 common vertices outright, or every edge is
    the first one with a single vertex swapped out for one fixed newcomer;
    pairing those swaps covers two edges per set.  At most
    ceil((k+1)/2) sets, and never more than ceil(e(H)/2).
    """
    k = h.k
    m = k - 1
    _require_nu(h, m, 1)
    cap = min((k + 2) // 2, max(1, (h.edge_count() + 1) // 2))
    shared = _intersection(h.edges)
    if shared.bit_count() >= m:
        return _finish(h, [m_subsets(shared, m)[0]], m, cap, "cover_nu1")
    base = h.edges[0]
    ext = _common_external(h.edges, base)
    rest = [t for t in h.edges if t != base]
    if h.edge_count() % 2:
        body = rest
        tailset = m_subsets(base, m)[0]
    else:
        body = rest[:-1]
        last = rest[-1]
        tailset = last & base
        if tailset.bit_count() != m:
            _fatal("cover_nu1: trailing edge is not one vertex off the base")
    sets = []
    for a, b in zip(body[0::2], body[1::2]):
        joint = (a & b & base) | ext
        if joint.bit_count() != m:
            _fatal("cover_nu1: paired edges drop different base vertices than expected")
        sets.append(joint)
    sets.append(tailset)
    return _finish(h, sets, m, cap, "cover_nu1")


def _split_tight(h: Hypergraph, group_one, group_two, bound: int, label: str):
    """Cover each group's tight edges separately; the groups must split H."""
    m = h.k - 1
    routines = {1: cover_nu1, 2: cover_nu2}
    msets = []
    claimed = []
    for group in (group_one, group_two):
        tight = [t for t in h.edges if any((t & e).bit_count() >= m for e in group)]
        claimed.extend(tight)
        if len(group) not in routines:
            _fatal(f"{label}: no recipe for a split group of {len(group)} edges")
        part = _internal(routines[len(group)], h.restrict(tight))
        msets.extend(part.msets)
    if len(claimed) != h.edge_count() or len(set(claimed)) != len(claimed):
        _fatal(f"{label}: tight neighborhoods fail to split the edge set")
    return _finish(h, msets, m, bound, label)


def cover_nu2(h: Hypergraph) -> CoverCertificate:
    """Cover a family with matching number two in at most 2*ceil((k+1)/2) sets."""
    k = h.k
    m = k - 1
    _require_nu(h, m, 2)
    bound = 2 * ((k + 2) // 2)
    for a, b in itertools.combinations(h.edges, 2):
        if (a & b).bit_count() <= k - 3:
            return _split_tight(h, (a,), (b,), bound, "cover_nu2")
    # every compatible pair overlaps in exactly k-2 vertices from here on
    matching, _ = max_m_matching(h, m)
    e, f = matching.masks(h)
    dec = decompose(h, matching)
    S_e, S_f = dec.S_sets
    T_e, T_f = dec.T_sets
    if len(set(T_e) | set(T_f)) != h.edge_count():
        _fatal("cover_nu2: an edge is tight with neither matching edge")
    shared = e & f
    u_bits = [1 << x for x in vertices_of(e & ~f)]
    v_bits = [1 << x for x in vertices_of(f & ~e)]
    # a side whose exclusive edges all keep the shared body takes two sets
    if all(t & shared == shared for t in S_e):
        part = _internal(cover_nu1, h.restrict(S_f))
        sets = [shared | u_bits[0], shared | u_bits[1]]
        return _finish(h, sets + list(part.msets), m, bound, "cover_nu2")
    if all(t & shared == shared for t in S_f):
        part = _internal(cover_nu1, h.restrict(S_e))
        sets = [shared | v_bits[0], shared | v_bits[1]]
        return _finish(h, sets + list(part.msets), m, bound, "cover_nu2")
    # a side pinned to k-1 common vertices takes one set, the other edge
    # then pays for all of its own k-1 subsets
    for block, other in ((S_e, f), (S_f, e)):
        pinned = _intersection(block)
        if pinned.bit_count() >= m:
            sets = [m_subsets(pinned, m)[0]] + list(m_subsets(other, m))
            return _finish(h, sets, m, bound, "cover_nu2")
    # general: each exclusive neighborhood leans on one end of the other
    # matching edge, so the shared body plus that end covers the cross traffic
    lean_e = _common_external(S_e, e)
    lean_f = _common_external(S_f, f)
    if not lean_e & f:
        _fatal("cover_nu2: the first neighborhood leans outside the matching")
    if not lean_f & e:
        _fatal("cover_nu2: the second neighborhood leans outside the matching")
    part_e = _internal(cover_nu1, h.restrict(S_e))
    rest_f = [t for t in S_f if t != f]
    side_f = _side_cover(h, rest_f, (k + 2) // 2, "cover_nu2")
    sets = [shared | v_bits[0], shared | v_bits[1]]
    return _finish(h, sets + list(part_e.msets) + side_f, m, bound, "cover_nu2")


def cover_nu3(h: Hypergraph) -> CoverCertificate:
    """Cover a family with matching number three in at most 3*ceil((k+1)/2)
    sets, dispatching on the shape of a maximum matching.

    All maximum matchings are classified and the first matching exhibiting
    each shape is kept, because the recipe for a shape may need any
    matching of that shape rather than the lexicographically first one.
    """
    k = h.k
    m = k - 1
    _require_nu(h, m, 3)
    bound = 3 * ((k + 2) // 2)
    edges = h.edges
    n_edges = len(edges)
    compat = [
        [(edges[i] & edges[j]).bit_count() < m for j in range(n_edges)]
        for i in range(n_edges)
    ]
    first = {}
    for i, j, l in itertools.combinations(range(n_edges), 3):
        if not (compat[i][j] and compat[i][l] and compat[j][l]):
            continue
        mt = Matching(edge_indices=(i, j, l), m=m)
        cls = classify_max_matching(h, mt)
        if cls.type_tag not in first:
            first[cls.type_tag] = (cls, mt)
    if "disconnected" in first:
        cls, _ = first["disconnected"]
        return _split_tight(
            h,
            cls.role_map["group_one"],
            cls.role_map["group_two"],
            bound,
            "cover_nu3",
        )
    if k == 3:
        return _nu3_three_uniform(h, first, bound)
    return _nu3_general(h, first, bound)


def _nu3_three_uniform(h: Hypergraph, first, bound: int) -> CoverCertificate:
    if "3U-a" in first:
        cls, mt = first["3U-a"]
        return _nu3_chain(h, cls, mt, bound)
    # no chain: look for two disjoint edges and spend all their pairs
    for h1, h2 in itertools.combinations(h.edges, 2):
        if h1 & h2 == 0:
            sets = list(m_subsets(h1, 2)) + list(m_subsets(h2, 2))
            return _finish(h, sets, 2, bound, "cover_nu3")
    if "3U-b" in first:
        cls, mt = first["3U-b"]
        return _nu3_star(h, cls, mt, bound)
    if "3U-c" in first:
        cls, mt = first["3U-c"]
        return _nu3_triangle(h, cls, mt, bound)
    _fatal("cover_nu3: three-uniform dispatch found no applicable shape")


def _nu3_chain(h, cls, mt, bound: int) -> CoverCertificate:
    """Three triples in a path: ends touch the center in one vertex each."""
    center = cls.role_map["center"]
    ends = (cls.role_map["branch_one"], cls.role_map["branch_two"])
    # an end whose private pair nobody else carries can be peeled off whole
    for end in ends:
        pair = end & ~center
        hinge = end & center
        if hinge.bit_count() != 1:
            _fatal("cover_nu3: chain end meets the center in more than one vertex")
        if any(t != end and t & pair == pair for t in h.edges):
            continue
        p1, p2 = vertices_of(pair)
        sets = [(1 << p1) | hinge, (1 << p2) | hinge]
        tight = [t for t in h.edges if (t & end).bit_count() >= 2]
        rest = _internal(cover_nu2, h.without(tight))
        return _finish(h, sets + list(rest.msets), 2, bound, "cover_nu3")
    dec = decompose(h, mt)
    by_mask = dict(zip(mt.masks(h), dec.S_sets))
    # an end whose exclusive edges share a pair is pinned by that pair
    for end in ends:
        pinned = _intersection(by_mask[end])
        if pinned.bit_count() < 2:
            continue
        lead = m_subsets(pinned, 2)[0]
        sets = [lead] + list(m_subsets(center, 2))
        near = {
            t
            for t in h.edges
            if (t & end).bit_count() >= 2 or (t & center).bit_count() >= 2
        }
        residual = [t for t in h.edges if t not in near]
        pieces = _side_cover(h, residual, 2, "cover_nu3")
        return _finish(h, sets + pieces, 2, bound, "cover_nu3")
    # general chain: each end's exclusive edges lean on one vertex of the
    # opposite end, and those two leaning vertices pay for the cross traffic
    u = _common_external(by_mask[ends[0]], ends[0])
    v = _common_external(by_mask[ends[1]], ends[1])
    if not u & ends[1] or u & center:
        _fatal("cover_nu3: chain lean from the first end misses the far end")
    if not v & ends[0] or v & center:
        _fatal("cover_nu3: chain lean from the second end misses the far end")
    sets = list(m_subsets(center, 2)) + [u | v, ends[0] & ~v, ends[1] & ~u]
    return _finish(h, sets, 2, bound, "cover_nu3")


def _nu3_star(h, cls, mt, bound: int) -> CoverCertificate:
    """Three triples through one shared vertex."""
    core = cls.role_map["core"]
    if core.bit_count() != 1:
        _fatal("cover_nu3: star core is not a single vertex")
    for edge in sorted(mt.masks(h), key=vertices_of):
        pair = edge & ~core
        if any(t != edge and t & pair == pair for t in h.edges):
            continue
        p1, p2 = vertices_of(pair)
        sets = [(1 << p1) | core, (1 << p2) | core]
        tight = [t for t in h.edges if (t & edge).bit_count() >= 2]
        rest = _internal(cover_nu2, h.without(tight))
        return _finish(h, sets + list(rest.msets), 2, bound, "cover_nu3")
    _fatal("cover_nu3: every star arm's private pair reappears elsewhere")


def _nu3_triangle(h, cls, mt, bound: int) -> CoverCertificate:
    """Three triples pairwise meeting in three distinct vertices."""
    e, f, g = sorted(mt.masks(h), key=vertices_of)
    x, z, y = e & f, e & g, f & g
    for contact in (x, y, z):
        if contact.bit_count() != 1:
            _fatal("cover_nu3: triangle contact is not a single vertex")
    b = e & ~(x | z)
    a = f & ~(x | y)
    c = g & ~(y | z)
    sets = [x | y, x | z, y | z, x | c, y | b, z | a]
    return _finish(h, sets, 2, bound, "cover_nu3")


def _nu3_general(h: Hypergraph, first, bound: int) -> CoverCertificate:
    handlers = {
        "kU-a": _nu3_case_a,
        "kU-b": _nu3_case_b,
        "kU-c": _nu3_case_c,
        "kU-d": _nu3_case_d,
        "kU-e": _nu3_case_e,
        "kU-f": _nu3_case_f,
    }
    for tag in ("kU-a", "kU-b", "kU-c", "kU-d", "kU-e", "kU-f"):
        if tag in first:
            cls, mt = first[tag]
            return handlers[tag](h, cls, mt, bound)
    _fatal("cover_nu3: connected matching fits no known shape")


def _nu3_case_a(h, cls, mt, bound: int) -> CoverCertificate:
    """Path, both contacts k-2, branches meeting inside the center."""
    k = h.k
    center = cls.role_map["center"]
    core = cls.role_map["core"]
    trio = center & ~core
    if trio.bit_count() != 3:
        _fatal("cover_nu3: center's private part is not three vertices")
    dec = decompose(h, mt)
    exclusive = dict(zip(mt.masks(h), dec.S_sets))[center]
    for t in exclusive:
        if t != center and t & trio == trio:
            _fatal("cover_nu3: an exclusive edge swallows the center's private trio")
    sets = [core | d for d in m_subsets(trio, 2)]
    tight = [t for t in h.edges if (t & center).bit_count() >= k - 1]
    rest = _internal(cover_nu2, h.without(tight))
    return _finish(h, sets + list(rest.msets), k - 1, bound, "cover_nu3")


def _nu3_case_b(h, cls, mt, bound: int) -> CoverCertificate:
    """All three edges share k-2 vertices; two private vertices apiece."""
    k = h.k
    core = cls.role_map["core"]
    dec = decompose(h, mt)
    by_mask = dict(zip(mt.masks(h), dec.S_sets))
    sets = []
    for edge in sorted(mt.masks(h), key=vertices_of):
        pair = edge & ~core
        if pair.bit_count() != 2:
            _fatal("cover_nu3: private pair off the shared core is malformed")
        for t in by_mask[edge]:
            if t != edge and t & pair == pair:
                _fatal("cover_nu3: an exclusive edge keeps both private vertices")
        for b in vertices_of(pair):
            sets.append(core | (1 << b))
    for t in h.edges:
        if all((t & edge).bit_count() < k - 1 for edge in mt.masks(h)):
            _fatal("cover_nu3: an edge is tight with no matching edge")
    return _finish(h, sets, k - 1, bound, "cover_nu3")


def _nu3_case_c(h, cls, mt, bound: int) -> CoverCertificate:
    """Path with disjoint branch contacts: four private center vertices."""
    k = h.k
    center = cls.role_map["center"]
    core = cls.role_map["core"]
    quad = center & ~core
    if quad.bit_count() != 4:
        _fatal("cover_nu3: center's private part is not four vertices")
    dec = decompose(h, mt)
    by_mask = dict(zip(mt.masks(h), dec.S_sets))
    for t in by_mask[center]:
        if t != center and t & quad == quad:
            _fatal("cover_nu3: an exclusive edge swallows the center's private quad")
    sets = [core | d for d in m_subsets(quad, 3)]
    extra = []
    for branch in (cls.role_map["branch_one"], cls.role_map["branch_two"]):
        block = by_mask[branch]
        opt, _ = min_m_cover(h.restrict(block), k - 1)
        if opt.size() <= 2:
            extra.extend(opt.msets)
            continue
        residual = _uncovered(block, sets)
        if len(residual) > k - 1:
            _fatal("cover_nu3: too many exclusive stragglers beside the center")
        extra.extend(_side_cover(h, residual, k // 2, "cover_nu3"))
    return _finish(h, sets + extra, k - 1, bound, "cover_nu3")


def _nu3_case_d(h, cls, mt, bound: int) -> CoverCertificate:
    """Path whose branches also share one vertex outside the center."""
    k = h.k
    center = cls.role_map["center"]
    b1 = cls.role_map["branch_one"]
    b2 = cls.role_map["branch_two"]
    extra = cls.role_map["branch_extra"]
    if extra.bit_count() != 1:
        _fatal("cover_nu3: shared branch vertex is not unique")
    sets = []
    for X, other in ((b1, b2), (b2, b1)):
        private = X & ~(center | other)
        if private.bit_count() != 1:
            _fatal("cover_nu3: branch private vertex is not unique")
        sets.append(X & ~extra)
        sets.append(X & ~private)
    dec = decompose(h, mt)
    by_mask = dict(zip(mt.masks(h), dec.S_sets))
    center_cap = 2 if k == 4 else max(1, (k - 2) // 2)
    branch_cap = max(1, (k - 1) // 2)
    pieces = []
    for edge, cap in ((center, center_cap), (b1, branch_cap), (b2, branch_cap)):
        residual = _uncovered(by_mask[edge], sets)
        pieces += _side_cover(h, residual, cap, "cover_nu3")
    return _finish(h, sets + pieces, k - 1, bound, "cover_nu3")


def _nu3_case_e(h, cls, mt, bound: int) -> CoverCertificate:
    """Triangle of two-vertex contacts around a common core of k-4.

    Each pair of edges shares the core plus a private two-vertex contact;
    two sets per contact class catch every edge tight with two matching
    edges, and the leftovers inside each exclusive neighborhood are small.
    """
    k = h.k
    center = cls.role_map["center"]
    f = cls.role_map["branch_one"]
    g = cls.role_map["branch_two"]
    core = cls.role_map["core"]
    s_pair = (center & f) & ~core
    v_pair = (f & g) & ~core
    if s_pair.bit_count() != 2 or v_pair.bit_count() != 2:
        _fatal("cover_nu3: contact pairs off the core are malformed")
    sets = [center & ~(1 << b) for b in vertices_of(s_pair)]
    sets += [f & ~(1 << b) for b in vertices_of(s_pair)]
    sets += [f & ~(1 << b) for b in vertices_of(v_pair)]
    dec = decompose(h, mt)
    by_mask = dict(zip(mt.masks(h), dec.S_sets))
    cap = max(1, (k - 2) // 2)
    pieces = []
    for edge in (center, f, g):
        residual = _uncovered(by_mask[edge], sets)
        pieces += _side_cover(h, residual, cap, "cover_nu3")
    return _finish(h, sets + pieces, k - 1, bound, "cover_nu3")


def _nu3_case_f(h, cls, mt, bound: int) -> CoverCertificate:
    """Triangle of contacts: three pairwise-shared vertices off the core."""
    k = h.k
    # a pair of edges two short of tight forces everything against them
    for h1, h2 in itertools.combinations(h.edges, 2):
        if (h1 & h2).bit_count() != k - 3:
            continue
        for t in h.edges:
            if t in (h1, h2):
                continue
            if (t & h1).bit_count() < k - 1 and (t & h2).bit_count() < k - 1:
                _fatal("cover_nu3: loose edge beside a doubly-slack pair")
        shared = h1 & h2
        sets = [h1 & ~(1 << z) for z in vertices_of(h1 & ~shared)]
        sets += [h2 & ~(1 << z) for z in vertices_of(h2 & ~shared)]
        cap = max(1, (k - 2) // 2)
        pieces = []
        for hh in (h1, h2):
            tight = [t for t in h.edges if (t & hh).bit_count() >= k - 1]
            residual = _uncovered(tight, sets)
            pieces += _side_cover(h, residual, cap, "cover_nu3")
        return _finish(h, sets + pieces, k - 1, bound, "cover_nu3")
    # all compatible pairs overlap in exactly k-2: spend one set per
    # contact, each sitting inside one matching edge
    center = cls.role_map["center"]
    b1 = cls.role_map["branch_one"]
    b2 = cls.role_map["branch_two"]
    core = cls.role_map["core"]
    s = (center & b1) & ~core
    u = (center & b2) & ~core
    v = (b1 & b2) & ~core
    for contact in (s, u, v):
        if contact.bit_count() != 1:
            _fatal("cover_nu3: triangle contact off the core is not one vertex")
    sets = [core | a | b for a, b in itertools.combinations((s, u, v), 2)]
    dec = decompose(h, mt)
    by_mask = dict(zip(mt.masks(h), dec.S_sets))
    cap = max(1, (k - 1) // 2)
    pieces = []
    for edge in (center, b1, b2):
        residual = _uncovered(by_mask[edge], sets)
        pieces += _side_cover(h, residual, cap, "cover_nu3")
    return _finish(h, sets + pieces, k - 1, bound, "cover_nu3")


# -- dispensability and the auxiliary meeting graph -------------------------


@dataclass(frozen=True)
class DispensabilityTable:
    """Partition of an edge's m-subsets by whether a neighbor pins them.

    A subset is indispensable when some other edge meets this edge exactly
    there, so dropping it from the all-subsets cover would free that
    witness.  `indispensable` pairs each pinned subset with its first
    witness in canonical order.
    """

    edge: int
    dispensable: tuple
    indispensable: tuple


def build_dispensability(h: Hypergraph, edge: int, m: int) -> DispensabilityTable:
    h.index_of(edge)
    if not 1 <= m < h.k:
        raise ParameterError(f"m={m} out of range for uniformity {h.k}")
    loose = []
    pinned = []
    for a in m_subsets(edge, m):
        wits = [f for f in h.edges if f != edge and f & edge == a]
        if wits:
            pinned.append((a, wits[0]))
        else:
            loose.append(a)
    return DispensabilityTable(
        edge=edge, dispensable=tuple(loose), indispensable=tuple(pinned)
    )


@dataclass(frozen=True)
class AuxiliaryIntersectionGraph:
    """Graph on one edge's m-subsets, adjacent at the minimum overlap.

    Two m-subsets of a k-set can share as few as max(0, 2m-k) vertices;
    `adjacency` lists the index pairs realising exactly that overlap.
    """

    edge: int
    m: int
    overlap: int
    vertices: tuple
    adjacency: tuple


def aux_intersection_graph(edge: int, m: int) -> AuxiliaryIntersectionGraph:
    k = edge.bit_count()
    if not 1 <= m <= k:
        raise ParameterError(f"m={m} out of range for an edge of {k} vertices")
    overlap = max(0, 2 * m - k)
    verts = m_subsets(edge, m)
    adjacency = tuple(
        (i, j)
        for i, j in itertools.combinations(range(len(verts)), 2)
        if (verts[i] & verts[j]).bit_count() == overlap
    )
    return AuxiliaryIntersectionGraph(
        edge=edge, m=m, overlap=overlap, vertices=verts, adjacency=adjacency
    )


def max_matching_general_graph(n: int, edges) -> tuple:
    """Maximum matching in a simple undirected graph, as sorted vertex pairs.

    Augmenting-path search with blossom contraction.  Deterministic:
    neighbor lists are sorted and roots are tried in ascending order.
    """
    if n < 0:
        raise ParameterError("negative vertex count")
    adj = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ParameterError(f"edge ({u}, {v}) out of range for {n} vertices")
        if u == v:
            raise ParameterError(f"loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    neighbors = [sorted(s) for s in adj]
    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))

    def lowest_common_base(a: int, b: int) -> int:
        seen = [False] * n
        x = a
        while True:
            x = base[x]
            seen[x] = True
            if match[x] == -1:
                break
            x = parent[match[x]]
        y = b
        while True:
            y = base[y]
            if seen[y]:
                return y
            y = parent[match[y]]

    def mark_path(x: int, stem: int, child: int, in_blossom) -> None:
        while base[x] != stem:
            in_blossom[base[x]] = True
            in_blossom[base[match[x]]] = True
            parent[x] = child
            child = match[x]
            x = parent[match[x]]

    def try_augment(root: int) -> bool:
        for i in range(n):
            parent[i] = -1
            base[i] = i
        used = [False] * n
        used[root] = True
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for to in neighbors[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # odd cycle: contract it down to the common base
                    stem = lowest_common_base(v, to)
                    in_blossom = [False] * n
                    mark_path(v, stem, to, in_blossom)
                    mark_path(to, stem, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = stem
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        # found an exposed vertex: flip the path back to root
                        u = to
                        while u != -1:
                            pv = parent[u]
                            nxt = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = nxt
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            try_augment(v)
    pairs = sorted(
        {(min(u, match[u]), max(u, match[u])) for u in range(n) if match[u] != -1}
    )
    return tuple(pairs)


# -- covers at wider overlap thresholds on single-matching input ------------


def cover_g1_km(h: Hypergraph, m: int) -> CoverCertificate:
    """Cover a single-matching family at threshold m, for k/2 <= m <= k-2
    and k >= 6, in at most C(k,m) - m sets.

    Start from all m-subsets of the edge with the most dispensable subsets.
    With m or more dispensable subsets, greedily drop dispensable ones while
    coverage survives; the count argument guarantees at least m drops.
    Otherwise drop what is dispensable and repeatedly swap two minimally
    overlapping pinned subsets for the one set their witnesses share.
    """
    k = h.k
    if k < 6 or 2 * m < k or m > k - 2:
        raise ParameterError(
            f"need uniformity >= 6 and k/2 <= m <= k-2, got k={k}, m={m}"
        )
    _require_nu(h, m, 1)
    bound = comb(k, m) - m
    table = None
    for e in h.edges:
        t = build_dispensability(h, e, m)
        if table is None or len(t.dispensable) > len(table.dispensable):
            table = t
    e = table.edge
    current = list(m_subsets(e, m))
    d = len(table.dispensable)
    if d >= m:
        for a in table.dispensable:
            trial = [s for s in current if s != a]
            if _is_cover(h, trial):
                current = trial
        if len(current) > bound:
            _fatal("cover_g1_km: greedy pruning fell short of the promised slack")
        return _finish(h, current, m, bound, "cover_g1_km")
    drop = set(table.dispensable)
    current = [s for s in current if s not in drop]
    avail = [a for a, _ in table.indispensable]
    overlap = 2 * m - k
    for _ in range(m - d):
        pick = None
        for a, b in itertools.combinations(avail, 2):
            if (a & b).bit_count() == overlap:
                pick = (a, b)
                break
        if pick is None:
            _fatal("cover_g1_km: no swappable pair although the count lemma promises one")
        a, b = pick
        wa = [f for f in h.edges if f != e and f & e == a]
        wb = [f for f in h.edges if f != e and f & e == b]
        if len(wa) != 1 or len(wb) != 1:
            _fatal("cover_g1_km: swappable pair lacks unique witnesses")
        joint = (a & b) | (wa[0] & ~e)
        if joint.bit_count() != m or joint & ~wb[0]:
            _fatal("cover_g1_km: replacement set misses one of its witnesses")
        avail = [s for s in avail if s not in (a, b)]
        current = [s for s in current if s not in (a, b)]
        current.append(joint)
    return _finish(h, current, m, bound, "cover_g1_km")


def cover_g1_52(h: Hypergraph) -> CoverCertificate:
    """Cover a 5-uniform single-matching family at threshold 2 in at most
    7 sets.

    A pair of edges sharing r >= 3 vertices yields C(r,2) inner pairs plus
    all cross pairs, 7 sets in total.  Otherwise all overlaps equal 2 and
    the dispensability recipe applies, swapping in the shared pair of two
    disjoint pinned subsets' witnesses when drops run out.
    """
    if h.k != 5:
        raise ParameterError("this recipe is specific to 5-uniform input")
    _require_nu(h, 2, 1)
    bound = 7
    best_pair = None
    r = 2
    for a, b in itertools.combinations(h.edges, 2):
        got = (a & b).bit_count()
        if got > r:
            r = got
            best_pair = (a, b)
    if r >= 3:
        e, f = best_pair
        sets = list(m_subsets(e & f, 2))
        for x in vertices_of(e & ~f):
            for y in vertices_of(f & ~e):
                sets.append((1 << x) | (1 << y))
        return _finish(h, sets, 2, bound, "cover_g1_52")
    table = None
    for e in h.edges:
        t = build_dispensability(h, e, 2)
        if table is None or len(t.dispensable) > len(table.dispensable):
            table = t
    e = table.edge
    current = list(m_subsets(e, 2))
    d = len(table.dispensable)
    if d >= 3:
        for a in table.dispensable:
            trial = [s for s in current if s != a]
            if _is_cover(h, trial):
                current = trial
        if len(current) > bound:
            _fatal("cover_g1_52: greedy pruning never reached seven sets")
        return _finish(h, current, 2, bound, "cover_g1_52")
    drop = set(table.dispensable)
    current = [s for s in current if s not in drop]
    avail = [a for a, _ in table.indispensable]
    for _ in range((5 - d + 1) // 2):
        pick = None
        for a, b in itertools.combinations(avail, 2):
            if a & b == 0:
                pick = (a, b)
                break
        if pick is None:
            _fatal("cover_g1_52: no disjoint pinned pair although one must exist")
        a, b = pick
        wa = [f for f in h.edges if f != e and f & e == a]
        wb = [f for f in h.edges if f != e and f & e == b]
        if len(wa) != 1 or len(wb) != 1:
            _fatal("cover_g1_52: disjoint pinned pair lacks unique witnesses")
        joint = wa[0] & wb[0]
        if joint.bit_count() != 2 or joint & e:
            _fatal("cover_g1_52: witness overlap is not an outside pair")
        avail = [s for s in avail if s not in (a, b)]
        current = [s for s in current if s not in (a, b)]
        current.append(joint)
    return _finish(h, current, 2, bound, "cover_g1_52")


def _kkm2_pair_route(h: Hypergraph, e: int, bound: int) -> CoverCertificate:
    """Every other edge meets `e` in exactly k-2 vertices: pair up the
    (k-2)-subsets of `e` at minimum overlap and spend one set per pair."""
    k = h.k
    m = k - 2
    aux = aux_intersection_graph(e, m)
    pairs = max_matching_general_graph(len(aux.vertices), aux.adjacency)
    want = comb(k, 2) // 2
    if len(pairs) != want:
        _fatal(
            f"cover_g1_kkm2: auxiliary matching holds {len(pairs)} pairs, wanted {want}"
        )
    verts = aux.vertices

    def witnesses(a: int) -> list:
        return [f for f in h.edges if f != e and f & e == a]

    chosen = []
    matched = set()
    for i, j in pairs:
        matched.add(i)
        matched.add(j)
        a, b = verts[i], verts[j]
        wa, wb = witnesses(a), witnesses(b)
        if wa and wb:
            if len(wa) > 1 or len(wb) > 1:
                _fatal("cover_g1_kkm2: paired witnesses are not unique")
            joint = wa[0] & wb[0]
            if joint.bit_count() != m:
                _fatal("cover_g1_kkm2: witness overlap has the wrong size")
            chosen.append(joint)
        elif wa:
            chosen.append(a)
        elif wb:
            chosen.append(b)
    for i, a in enumerate(verts):
        if i not in matched and witnesses(a):
            chosen.append(a)
    if not any(x & ~e == 0 for x in chosen):
        chosen.append(m_subsets(e, m)[0])
    cap = comb(k, 2) // 2 + 1
    return _finish(h, chosen, m, min(bound, cap), "cover_g1_kkm2")


def cover_g1_kkm2(h: Hypergraph) -> CoverCertificate:
    """Cover a single-matching family at threshold k-2 in at most
    ceil(k^2/4) sets.

    Small uniformities go to the exact solver.  From k=5 up, either some
    edge meets all others in exactly k-2 vertices (pairing route), or two
    edges share k-1 vertices; then the shared body pays k-1 sets and the
    edges dipping one vertex below it contract onto a smaller instance of
    the same problem.
    """
    k = h.k
    if k < 3:
        raise ParameterError("need uniformity at least 3")
    m = k - 2
    _require_nu(h, m, 1)
    bound = (k * k + 3) // 4
    if k <= 4:
        cert, _ = min_m_cover(h, m)
        return _finish(h, cert.msets, m, bound, "cover_g1_kkm2")
    for e in h.edges:
        if all(t == e or (t & e).bit_count() == m for t in h.edges):
            return _kkm2_pair_route(h, e, bound)
    for e, f in itertools.combinations(h.edges, 2):
        if (e & f).bit_count() == k - 1:
            break
    else:
        _fatal("cover_g1_kkm2: neither the pairing nor the contraction branch applies")
    body = e & f
    lifted_pair = (e | f) & ~body
    part1 = list(m_subsets(body, m))
    inner = []
    for g in h.edges:
        got = (g & body).bit_count()
        if got >= m:
            continue
        if got != k - 3:
            _fatal("cover_g1_kkm2: an edge strays two vertices from the shared body")
        if g & lifted_pair != lifted_pair:
            _fatal("cover_g1_kkm2: a straying edge misses the lifted pair")
        inner.append(g & ~lifted_pair)
    if inner:
        sub = Hypergraph.from_masks(h.n, k - 2, inner)
        part2 = [t | lifted_pair for t in _internal(cover_g1_kkm2, sub).msets]
    else:
        part2 = []
    return _finish(h, part1 + part2, m, bound, "cover_g1_kkm2")


# -- fractional recipes -----------------------------------------------------


def frac_cover_2kk(h: Hypergraph) -> FractionalAssignment:
    """Fractional cover of a 2m-uniform single-matching family with total
    at most (1/2 + 1/(2(m+1))) * C(2m, m).

    Weight 1/(m+1) goes on every half of a base edge; each complementary
    pair of halves then buys one boosted set of weight m/(m+1): the shared
    outside half when both sides are populated, else the populated half.
    """
    k = h.k
    if k % 2 or k < 4:
        raise ParameterError(f"need even uniformity at least 4, got {k}")
    m = k // 2
    _require_nu(h, m, 1)
    base = h.edges[0]
    halves = m_subsets(base, m)
    weights = {s: Fraction(1, m + 1) for s in halves}
    boost = Fraction(m, m + 1)
    done = set()
    for s in halves:
        if s in done:
            continue
        t = base & ~s
        done.add(t)
        side_s = [f for f in h.edges if f != base and f & base == s]
        side_t = [f for f in h.edges if f != base and f & base == t]
        if side_s and side_t:
            if len(side_s) > 1 or len(side_t) > 1:
                _fatal("frac_cover_2kk: two-sided boost pair is not unique")
            outside = side_s[0] & ~base
            if outside.bit_count() != m or outside & ~side_t[0]:
                _fatal("frac_cover_2kk: boost set escapes its complementary pair")
            weights[outside] = weights.get(outside, Fraction(0)) + boost
        elif side_s:
            weights[s] += boost
        elif side_t:
            weights[t] += boost
    bound = (Fraction(1, 2) + Fraction(1, 2 * (m + 1))) * comb(2 * m, m)
    return _finish_fractional(h, weights, m, bound, "frac_cover_2kk")


def frac_cover_hstar(
    h: Hypergraph, m: int, g1star_routine: Callable
) -> FractionalAssignment:
    """Fractional cover built from a maximum matching plus a single-matching
    subroutine.

    Weight 1/2 goes on every m-subset of every matching edge.  Each still
    uncovered edge meets exactly one matching edge in exactly m vertices;
    those bundles are single-matching families, and the subroutine's cover
    for each is merged in at half weight.  The total is at most
    (C(k,m) + B)/2 per matching edge, B being the subroutine's own bound.
    """
    if not 2 <= m < h.k:
        raise ParameterError(f"need 2 <= m < k, got m={m}, k={h.k}")
    matching, _ = max_m_matching(h, m)
    mmasks = matching.masks(h)
    weights = {}
    for em in mmasks:
        for s in m_subsets(em, m):
            weights[s] = Fraction(1, 2)
    if matching.size() == 0:
        return _finish_fractional(h, weights, m, None, "frac_cover_hstar")
    groups = {}
    for t in h.edges:
        load = sum(w for s, w in weights.items() if s & ~t == 0)
        if load >= 1:
            continue
        hits = [i for i, em in enumerate(mmasks) if (t & em).bit_count() >= m]
        if not hits:
            _fatal("frac_cover_hstar: an edge slips past the maximum matching")
        if len(hits) != 1:
            _fatal("frac_cover_hstar: an uncovered edge touches two matching edges")
        groups.setdefault(hits[0], []).append(t)
    for i in sorted(groups):
        sub = h.restrict(groups[i])
        part = _internal(g1star_routine, sub)
        if (
            not isinstance(part, FractionalAssignment)
            or part.side != "cover"
            or part.m != m
        ):
            _fatal("frac_cover_hstar: subroutine returned the wrong kind of certificate")
        if not verify_fractional(sub, part):
            _fatal("frac_cover_hstar: subroutine cover does not hold on its bundle")
        for s, w in part.weights.items():
            weights[s] = weights.get(s, Fraction(0)) + Fraction(w) / 2
    return _finish_fractional(h, weights, m, None, "frac_cover_hstar")


def frac_cover_kkm2(h: Hypergraph) -> FractionalAssignment:
    """Fractional cover of a single-matching family at threshold k-2 with
    total at most C(k-2,2)/6 + 2k - 3.

    One pinned edge meeting all others in k-1 vertices spreads 1/(k-1)
    over its (k-2)-subsets.  Otherwise two edges share exactly k-2
    vertices and three weight tiers around that shared body do the job.
    Small uniformities fall back to the exact rational optimum, which is
    always within the bound here.
    """
    k = h.k
    if k < 3:
        raise ParameterError("need uniformity at least 3")
    m = k - 2
    _require_nu(h, m, 1)
    bound = Fraction(comb(k - 2, 2), 6) + (2 * k - 3)
    if h.edge_count() == 1:
        lone = m_subsets(h.edges[0], m)[0]
        return _finish_fractional(h, {lone: Fraction(1)}, m, bound, "frac_cover_kkm2")
    if k <= 6:
        _, cover = solve_fractional(h, m)
        if cover.total > bound:
            _fatal(f"frac_cover_kkm2: exact optimum {cover.total} exceeds {bound}")
        return cover
    for e in h.edges:
        if all(t == e or (t & e).bit_count() == k - 1 for t in h.edges):
            weights = {s: Fraction(1, k - 1) for s in m_subsets(e, m)}
            return _finish_fractional(h, weights, m, bound, "frac_cover_kkm2")
    for e, f in itertools.combinations(h.edges, 2):
        if (e & f).bit_count() == k - 2:
            break
    else:
        _fatal("frac_cover_kkm2: no pinned edge and no pair sharing exactly k-2")
    body = e & f
    weights = {body: Fraction(1)}
    xs = vertices_of(e & ~body)
    ys = vertices_of(f & ~body)
    for inner in m_subsets(body, k - 4):
        for x in xs:
            for y in ys:
                weights[inner | (1 << x) | (1 << y)] = Fraction(1, k - 3)
    deep = Fraction(1) - Fraction(4, k - 3)
    if deep > 0:
        quad = (e | f) & ~body
        share = deep / comb(k - 4, 2)
        for inner in m_subsets(body, k - 6):
            weights[inner | quad] = share
    return _finish_fractional(h, weights, m, bound, "frac_cover_kkm2")
