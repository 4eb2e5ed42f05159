"""Core types for k-uniform hypergraphs.

Edges and m-sets are integer bitmasks over the vertex set {0, ..., n-1}.
Intersection sizes are popcounts of ANDed masks, which is what every solver
in this package leans on.

Invariants:
  * Hypergraph instances are immutable and deduplicated.
  * Edge order is canonical: lexicographic by sorted vertex sequence.
    (This is not integer order of the masks.)
  * All public functions are pure; nothing here mutates shared state.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "ParameterError",
    "PreconditionError",
    "MalformedCertificateError",
    "GenerationBudgetError",
    "InternalInvariantError",
    "mask_of",
    "vertices_of",
    "mask_text",
    "Hypergraph",
    "Matching",
    "CoverCertificate",
    "make_cover",
    "m_subsets",
    "canonical_form",
    "format_hypergraph",
    "parse_hypergraph",
    "format_graph",
    "parse_graph",
    "format_cover",
    "parse_cover",
    "format_matching",
    "parse_matching",
]


class ParameterError(ValueError):
    """Bad arguments or malformed input text (CLI exit code 1)."""


class PreconditionError(ValueError):
    """A stated precondition does not hold (CLI exit code 2)."""


class MalformedCertificateError(PreconditionError):
    """A certificate refers to objects outside the hypergraph."""


class GenerationBudgetError(PreconditionError):
    """A rejection sampler ran out of attempts."""


class InternalInvariantError(RuntimeError):
    """A result that should be impossible; indicates a defect (exit code 3)."""


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with the given vertex bits set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    """Sorted tuple of vertices in a bitmask."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def mask_text(mask: int) -> str:
    """Comma-separated sorted vertex ids, used in dumps and reports."""
    return ",".join(str(v) for v in vertices_of(mask))


class Hypergraph:
    """Immutable k-uniform hypergraph on vertices {0, ..., n-1}.

    ``edges`` is a tuple of bitmasks in canonical order. Duplicate input
    edges are silently merged; an edge with the wrong cardinality or an
    out-of-range vertex raises ParameterError.
    """

    __slots__ = ("n", "k", "edges")

    n: int
    k: int
    edges: tuple[int, ...]

    def __init__(self, n: int, k: int, edges: Iterable[Iterable[int]]):
        masks = []
        for e in edges:
            vs = tuple(sorted(e))
            if len(vs) != len(set(vs)):
                raise ParameterError(f"edge has repeated vertices: {vs}")
            masks.append(mask_of(vs))
        self._init_from_masks(n, k, masks)

    @classmethod
    def from_masks(cls, n: int, k: int, masks: Iterable[int]) -> "Hypergraph":
        h = cls.__new__(cls)
        h._init_from_masks(n, k, list(masks))
        return h

    def _init_from_masks(self, n: int, k: int, masks: list[int]) -> None:
        if k < 1:
            raise ParameterError(f"uniformity must be >= 1, got {k}")
        if n < 0:
            raise ParameterError(f"vertex count must be >= 0, got {n}")
        full = (1 << n) - 1 if n else 0
        for m in masks:
            if m & ~full:
                raise ParameterError(
                    f"edge {vertices_of(m)} has vertices outside range(0, {n})"
                )
            if m.bit_count() != k:
                raise ParameterError(
                    f"edge {vertices_of(m)} has {m.bit_count()} vertices, expected {k}"
                )
        uniq = sorted(set(masks), key=vertices_of)
        self.n = n
        self.k = k
        self.edges = tuple(uniq)

    # -- basic queries ----------------------------------------------------

    def edge_count(self) -> int:
        return len(self.edges)

    def edge_vertices(self, i: int) -> tuple[int, ...]:
        return vertices_of(self.edges[i])

    def index_of(self, mask: int) -> int:
        """Index of an edge mask; raises ParameterError if absent."""
        try:
            return self.edges.index(mask)
        except ValueError:
            raise ParameterError(f"no such edge: {vertices_of(mask)}") from None

    def restrict(self, masks: Iterable[int]) -> "Hypergraph":
        """Sub-hypergraph on the same vertex set with only the given edges."""
        keep = set(masks)
        missing = keep.difference(self.edges)
        if missing:
            raise ParameterError(
                f"not edges of this hypergraph: {[vertices_of(m) for m in sorted(missing)]}"
            )
        return Hypergraph.from_masks(self.n, self.k, keep)

    def without(self, masks: Iterable[int]) -> "Hypergraph":
        """Sub-hypergraph with the given edges removed."""
        drop = set(masks)
        return Hypergraph.from_masks(
            self.n, self.k, (e for e in self.edges if e not in drop)
        )

    # -- dunder plumbing ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.n, self.k, self.edges) == (other.n, other.k, other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.edges))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, k={self.k}, edges={len(self.edges)})"

    def __setattr__(self, name: str, value: object) -> None:
        if hasattr(self, "edges") and name in self.__slots__:
            raise AttributeError("Hypergraph is immutable")
        object.__setattr__(self, name, value)


@dataclass(frozen=True)
class Matching:
    """An m-matching given by indices into ``Hypergraph.edges``."""

    edge_indices: tuple[int, ...]
    m: int

    def size(self) -> int:
        return len(self.edge_indices)

    def masks(self, h: Hypergraph) -> tuple[int, ...]:
        return tuple(h.edges[i] for i in self.edge_indices)


@dataclass(frozen=True)
class CoverCertificate:
    """An m-cover: a tuple of m-set bitmasks in canonical order."""

    msets: tuple[int, ...]
    m: int

    def size(self) -> int:
        return len(self.msets)


def make_cover(msets: Iterable[int], m: int) -> CoverCertificate:
    """Dedup, sort canonically, wrap. The one way covers get built here."""
    uniq = sorted(set(msets), key=vertices_of)
    return CoverCertificate(msets=tuple(uniq), m=m)


def m_subsets(edge_mask: int, m: int) -> tuple[int, ...]:
    """All m-subsets of an edge, lexicographic by sorted vertex sequence."""
    vs = vertices_of(edge_mask)
    if m < 0 or m > len(vs):
        raise ParameterError(f"m={m} out of range for an edge of size {len(vs)}")
    return tuple(mask_of(c) for c in itertools.combinations(vs, m))


# -- canonical forms -------------------------------------------------------

_CANON_GUARD = 12


def canonical_form(h: Hypergraph) -> bytes:
    """Serialization minimal over all vertex relabelings.

    Two hypergraphs get equal output iff they differ by a relabeling of
    {0..n-1}. The minimum is over the full permutation group, found by
    backtracking: vertices receive new labels one at a time, every edge
    joins the output the moment its last vertex is labeled (so the mask
    list grows in ascending order), and a branch dies as soon as its
    partial list can no longer beat the best complete one. Refuses n > 12
    so callers at scan scale are forced into sampling mode instead of
    hanging.
    """
    if h.n > _CANON_GUARD:
        raise PreconditionError(
            f"canonical_form enumerates permutations and is limited to "
            f"n <= {_CANON_GUARD}; got n={h.n}"
        )
    if not h.edges:
        return f"{h.n}.{h.k}:".encode("ascii")
    by_vertex: list[list[int]] = [[] for _ in range(h.n)]
    for e in h.edges:
        for v in vertices_of(e):
            by_vertex[v].append(e)
    new_label = [-1] * h.n
    best: list[int] | None = None

    def descend(depth: int, assigned: int, prefix: list[int]) -> None:
        nonlocal best
        if depth == h.n:
            if best is None or prefix < best:
                best = list(prefix)
            return
        choices = []
        for v in range(h.n):
            if (assigned >> v) & 1:
                continue
            reach = assigned | (1 << v)
            done = sorted(
                sum(1 << new_label[u] if u != v else 1 << depth
                    for u in vertices_of(e))
                for e in by_vertex[v]
                if e & ~reach == 0
            )
            choices.append((done, v))
        choices.sort()
        for done, v in choices:
            grown = prefix + done
            if best is not None:
                cut = best[: len(grown)]
                if grown > cut:
                    continue
                if (
                    grown == cut
                    and len(best) > len(grown)
                    and best[len(grown)] < (1 << (depth + 1))
                ):
                    # Every still-incomplete edge will finish at a later
                    # depth and carry that depth's bit, so nothing this
                    # branch produces can match the best list's next entry.
                    continue
            new_label[v] = depth
            descend(depth + 1, assigned | (1 << v), grown)
            new_label[v] = -1

    descend(0, 0, [])
    assert best is not None
    body = ";".join(
        ",".join(str(v) for v in vertices_of(m)) for m in best
    )
    return f"{h.n}.{h.k}:{body}".encode("ascii")


# -- text formats -----------------------------------------------------------
#
# Hypergraph text: header "n k e", then e lines of k sorted vertex ids.
# Graph text: header "n e", then e lines "u v".
# Lines starting with '#' and blank lines are ignored on input; the writers
# emit edges in canonical order so round trips are bit-exact.


def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"{h.n} {h.k} {len(h.edges)}"]
    for e in h.edges:
        lines.append(" ".join(str(v) for v in vertices_of(e)))
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    lines = _content_lines(text)
    if not lines:
        raise ParameterError("empty hypergraph text")
    head = lines[0].split()
    if len(head) != 3:
        raise ParameterError(f"bad hypergraph header: {lines[0]!r}")
    try:
        n, k, e = (int(x) for x in head)
    except ValueError:
        raise ParameterError(f"bad hypergraph header: {lines[0]!r}") from None
    if len(lines) - 1 != e:
        raise ParameterError(f"header promises {e} edges, found {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        try:
            vs = [int(x) for x in line.split()]
        except ValueError:
            raise ParameterError(f"bad edge line: {line!r}") from None
        edges.append(vs)
    return Hypergraph(n, k, edges)


def format_graph(n: int, edges: Sequence[tuple[int, int]]) -> str:
    lines = [f"{n} {len(edges)}"]
    for u, v in sorted(tuple(sorted(e)) for e in edges):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> tuple[int, list[tuple[int, int]]]:
    lines = _content_lines(text)
    if not lines:
        raise ParameterError("empty graph text")
    head = lines[0].split()
    if len(head) != 2:
        raise ParameterError(f"bad graph header: {lines[0]!r}")
    try:
        n, e = int(head[0]), int(head[1])
    except ValueError:
        raise ParameterError(f"bad graph header: {lines[0]!r}") from None
    if len(lines) - 1 != e:
        raise ParameterError(f"header promises {e} edges, found {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParameterError(f"bad graph edge line: {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParameterError(f"bad graph edge line: {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParameterError(f"graph edge out of range: {line!r}")
        edges.append((u, v))
    return n, edges


def format_cover(cert: CoverCertificate) -> str:
    """One m-set per line, sorted ids, with a comment header."""
    lines = [f"# cover m={cert.m} size={len(cert.msets)}"]
    for s in cert.msets:
        lines.append(" ".join(str(v) for v in vertices_of(s)))
    return "\n".join(lines) + "\n"


def parse_cover(text: str) -> CoverCertificate:
    lines = _content_lines(text)
    msets = []
    sizes = set()
    for line in lines:
        try:
            vs = [int(x) for x in line.split()]
        except ValueError:
            raise ParameterError(f"bad cover line: {line!r}") from None
        if len(vs) != len(set(vs)):
            raise ParameterError(f"cover set repeats a vertex: {line!r}")
        sizes.add(len(vs))
        msets.append(mask_of(vs))
    if not msets:
        return CoverCertificate(msets=(), m=0)
    if len(sizes) != 1:
        raise ParameterError(f"cover sets have mixed sizes: {sorted(sizes)}")
    return make_cover(msets, sizes.pop())


def format_matching(matching: Matching) -> str:
    lines = [f"# matching m={matching.m} size={matching.size()}"]
    lines.append(" ".join(str(i) for i in matching.edge_indices))
    return "\n".join(lines) + "\n"


def parse_matching(text: str, m: int) -> Matching:
    lines = _content_lines(text)
    idx: list[int] = []
    for line in lines:
        try:
            idx.extend(int(x) for x in line.split())
        except ValueError:
            raise ParameterError(f"bad matching line: {line!r}") from None
    return Matching(edge_indices=tuple(idx), m=m)
