"""Exact matchings, covers, and fractional relaxations for uniform hypergraphs.

An m-matching is a set of edges pairwise sharing fewer than m vertices; an
m-cover is a set of m-element vertex sets hitting every edge from inside.
The package computes both exactly, solves the fractional relaxation in
exact rational arithmetic, and builds certified covers whose sizes realize
the known worst-case bounds.
"""

from .constructions import (
    AuxiliaryIntersectionGraph,
    DispensabilityTable,
    MatchingTypeClassification,
    NeighborhoodDecomposition,
    aux_intersection_graph,
    build_dispensability,
    classify_max_matching,
    cover_g1_52,
    cover_g1_km,
    cover_g1_kkm2,
    cover_nu1,
    cover_nu2,
    cover_nu3,
    decompose,
    find_disconnected_partition,
    frac_cover_2kk,
    frac_cover_hstar,
    frac_cover_kkm2,
    max_matching_general_graph,
)
from .core import (
    CoverCertificate,
    GenerationBudgetError,
    Hypergraph,
    InternalInvariantError,
    MalformedCertificateError,
    Matching,
    ParameterError,
    PreconditionError,
    canonical_form,
    format_cover,
    format_graph,
    format_hypergraph,
    format_matching,
    m_subsets,
    make_cover,
    mask_of,
    mask_text,
    parse_cover,
    parse_graph,
    parse_hypergraph,
    parse_matching,
    vertices_of,
)
from .exact import (
    SandwichReport,
    SolveStats,
    max_m_matching,
    min_m_cover,
    sandwich_check,
    verify_cover,
    verify_matching,
)
from .fraclp import (
    FractionalAssignment,
    format_fractional,
    parse_fractional,
    solve_fractional,
    verify_fractional,
)
from .generators import (
    gen_biplane_11_5_2,
    gen_complete_extremal,
    gen_random,
    gen_triangle_hypergraph,
)
from .scan import (
    ScanRecord,
    ScanReport,
    TuzaCorollaryReport,
    check_tuza_corollary,
    merge_reports,
    scan_exhaustive,
    scan_sampled,
    serialize_report,
)

__version__ = "0.1.0"

__all__ = [
    "AuxiliaryIntersectionGraph",
    "CoverCertificate",
    "DispensabilityTable",
    "FractionalAssignment",
    "GenerationBudgetError",
    "Hypergraph",
    "InternalInvariantError",
    "MalformedCertificateError",
    "Matching",
    "MatchingTypeClassification",
    "NeighborhoodDecomposition",
    "ParameterError",
    "PreconditionError",
    "SandwichReport",
    "ScanRecord",
    "ScanReport",
    "SolveStats",
    "TuzaCorollaryReport",
    "aux_intersection_graph",
    "build_dispensability",
    "canonical_form",
    "check_tuza_corollary",
    "classify_max_matching",
    "cover_g1_52",
    "cover_g1_km",
    "cover_g1_kkm2",
    "cover_nu1",
    "cover_nu2",
    "cover_nu3",
    "decompose",
    "find_disconnected_partition",
    "format_cover",
    "format_fractional",
    "format_graph",
    "format_hypergraph",
    "format_matching",
    "frac_cover_2kk",
    "frac_cover_hstar",
    "frac_cover_kkm2",
    "gen_biplane_11_5_2",
    "gen_complete_extremal",
    "gen_random",
    "gen_triangle_hypergraph",
    "m_subsets",
    "make_cover",
    "mask_of",
    "mask_text",
    "max_m_matching",
    "max_matching_general_graph",
    "merge_reports",
    "min_m_cover",
    "parse_cover",
    "parse_fractional",
    "parse_graph",
    "parse_hypergraph",
    "parse_matching",
    "sandwich_check",
    "scan_exhaustive",
    "scan_sampled",
    "serialize_report",
    "solve_fractional",
    "verify_cover",
    "verify_fractional",
    "verify_matching",
    "__version__",
]
