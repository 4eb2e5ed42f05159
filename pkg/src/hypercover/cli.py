"""Command line front end.

One verb per invocation; `-` means stdin wherever a file is expected, and
all verbs write plain text to stdout so they compose in pipelines:

    hypercover generate --family extremal --k 3 | hypercover compute --m 2

Exit codes: 0 success, 1 usage or parameter error, 2 precondition unmet
(including certificates that fail replay), 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import reduce
from math import comb

from .constructions import (
    cover_g1_52,
    cover_g1_km,
    cover_g1_kkm2,
    cover_nu1,
    cover_nu2,
    cover_nu3,
    frac_cover_2kk,
    frac_cover_hstar,
    frac_cover_kkm2,
)
from .core import (
    InternalInvariantError,
    ParameterError,
    PreconditionError,
    format_cover,
    format_hypergraph,
    parse_cover,
    parse_graph,
    parse_hypergraph,
    parse_matching,
    vertices_of,
)
from .exact import min_m_cover, sandwich_check, verify_cover, verify_matching
from .fraclp import format_fractional, parse_fractional, verify_fractional
from .generators import (
    gen_biplane_11_5_2,
    gen_complete_extremal,
    gen_random,
    gen_triangle_hypergraph,
)
from .scan import (
    check_tuza_corollary,
    merge_reports,
    scan_exhaustive,
    scan_sampled,
    serialize_report,
)

__all__ = ["main", "run"]


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this artifact reserves 2 for
    precondition failures, so usage problems are remapped to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise ParameterError(f"cannot read {path}: {exc}") from None


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)
    except OSError as exc:
        raise ParameterError(f"cannot write {path}: {exc}") from None


def _frac(q) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _cmd_compute(args) -> int:
    h = parse_hypergraph(_read_text(args.infile))
    rep = sandwich_check(h, args.m)
    print(f"nu={rep.nu} tau={rep.tau}")
    print(f"nu*=tau*={_frac(rep.nu_star)}")
    print(
        f"sandwich: {rep.nu} <= {_frac(rep.nu_star)} <= {rep.tau} "
        f"<= {rep.binom_bound * rep.nu} ok"
    )
    if args.emit_certificate:
        cert, _ = min_m_cover(h, args.m)
        _write_text(args.emit_certificate, format_cover(cert))
    return 0


_CONSTRUCT_NEEDS_M = {"g1km"}


def _cmd_construct(args) -> int:
    h = parse_hypergraph(_read_text(args.infile))
    k = h.k
    unit = (k + 2) // 2
    if args.theorem == "g1km":
        if args.m is None:
            raise ParameterError("construct --theorem g1km needs --m")
        cert = cover_g1_km(h, args.m)
        bound = comb(k, args.m) - args.m
    elif args.theorem == "g152":
        cert = cover_g1_52(h)
        bound = 7
    elif args.theorem == "g1kkm2":
        cert = cover_g1_kkm2(h)
        bound = (k * k + 3) // 4
    else:
        builder = {"nu1": cover_nu1, "nu2": cover_nu2, "nu3": cover_nu3}[
            args.theorem
        ]
        cert = builder(h)
        bound = int(args.theorem[-1]) * unit
    sys.stdout.write(format_cover(cert))
    print(f"bound ok: size {cert.size()} <= {bound}")
    return 0


def _cmd_fractional(args) -> int:
    h = parse_hypergraph(_read_text(args.infile))
    if args.theorem == "2kk":
        fa = frac_cover_2kk(h)
    elif args.theorem == "kkm2":
        fa = frac_cover_kkm2(h)
    else:
        if args.m is None:
            raise ParameterError("fractional --theorem hstar needs --m")
        if h.k == 2 * args.m:
            inner = frac_cover_2kk
        elif args.m == h.k - 2:
            inner = frac_cover_kkm2
        else:
            raise PreconditionError(
                f"no fractional block recipe wired for k={h.k}, m={args.m}; "
                f"supported: k=2m and m=k-2"
            )
        fa = frac_cover_hstar(h, args.m, inner)
    text = format_fractional(fa)
    sys.stdout.write(text)
    print(f"total {_frac(fa.total)}")
    if args.emit_certificate:
        _write_text(args.emit_certificate, text)
    return 0


def _cmd_generate(args) -> int:
    if args.family == "extremal":
        if args.k is None:
            raise ParameterError("generate --family extremal needs --k")
        h = gen_complete_extremal(args.k)
    elif args.family == "biplane":
        h = gen_biplane_11_5_2()
    elif args.family == "triangle":
        n, edges = parse_graph(_read_text(args.graph))
        h, _labels = gen_triangle_hypergraph(n, edges)
    else:
        if args.n is None or args.k is None:
            raise ParameterError("generate --family random needs --n and --k")
        h = gen_random(
            args.n,
            args.k,
            edge_count=args.edges,
            m=args.m,
            target_nu=args.target_nu,
            seed=args.seed,
        )
    sys.stdout.write(format_hypergraph(h))
    return 0


def _cmd_scan(args) -> int:
    if args.samples is None:
        if args.jobs > 1:
            pool_size = comb(args.n, args.k)
            total = 1 << pool_size
            step = max(1, (total - 1) // args.jobs + 1)
            ranges = [
                (lo, min(lo + step, total)) for lo in range(1, total, step)
            ]
            calls = [
                (args.k, args.m, args.n, args.guard, rng) for rng in ranges
            ]
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                shards = list(pool.map(_scan_shard, calls))
            report = reduce(merge_reports, shards)
        else:
            report = scan_exhaustive(
                args.k, args.m, args.n, guard=args.guard
            )
    else:
        report = scan_sampled(
            args.k, args.m, args.n, args.samples, args.seed
        )
    sys.stdout.write(serialize_report(report))
    return 0


def _scan_shard(call):
    k, m, n, guard, rng = call
    return scan_exhaustive(k, m, n, guard=guard, index_range=rng)


def _sniff_matching_m(text: str) -> int:
    for line in text.splitlines():
        if line.startswith("# matching"):
            for token in line[1:].split():
                if token.startswith("m="):
                    return int(token[2:])
    raise ParameterError("matching certificate is missing its m= header")


def _cmd_verify(args) -> int:
    h = parse_hypergraph(_read_text(args.infile))
    text = _read_text(args.cert)
    head = next(
        (ln for ln in text.splitlines() if ln.strip()), ""
    )
    if head.startswith("# fractional"):
        fa = parse_fractional(text)
        if verify_fractional(h, fa):
            print(f"fractional {fa.side} ok: total {_frac(fa.total)}")
            return 0
        print("fractional certificate failed replay")
        return 2
    if head.startswith("# matching"):
        matching = parse_matching(text, _sniff_matching_m(text))
        if verify_matching(h, matching):
            print(f"matching ok: size {matching.size()} at m={matching.m}")
            return 0
        print("matching invalid: edges overlap at or above the threshold")
        return 2
    cert = parse_cover(text)
    if verify_cover(h, cert):
        print(f"cover ok: size {cert.size()} at m={cert.m}")
        return 0
    for e in h.edges:
        if not any(s & ~e == 0 for s in cert.msets):
            print(
                "uncovered edge: "
                + ",".join(str(v) for v in vertices_of(e))
            )
            break
    return 2


def _cmd_tuza(args) -> int:
    _n, edges = parse_graph(_read_text(args.graph))
    rep = check_tuza_corollary(edges)
    print(f"triangles={rep.triangle_count}")
    print(f"nu={rep.nu} tau={rep.tau}")
    verdict = "ok" if rep.bound_ok else "violated"
    print(f"bound: tau <= 2*nu {verdict}")
    if rep.cover is not None and rep.cover.msets:
        sys.stdout.write(format_cover(rep.cover))
    print(rep.message)
    return 0 if rep.precondition_met else 2


def _build_parser() -> _Parser:
    parser = _Parser(prog="hypercover", description=__doc__)
    sub = parser.add_subparsers(dest="verb", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("compute", help="exact nu, tau and the LP value")
    p.add_argument("--in", dest="infile", default="-")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--emit-certificate", default=None)
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("construct", help="certified cover by named recipe")
    p.add_argument("--in", dest="infile", default="-")
    p.add_argument(
        "--theorem",
        required=True,
        choices=["nu1", "nu2", "nu3", "g1km", "g152", "g1kkm2"],
    )
    p.add_argument("--m", type=int, default=None)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("fractional", help="weighted cover by named recipe")
    p.add_argument("--in", dest="infile", default="-")
    p.add_argument(
        "--theorem", required=True, choices=["2kk", "hstar", "kkm2"]
    )
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--emit-certificate", default=None)
    p.set_defaults(func=_cmd_fractional)

    p = sub.add_parser("generate", help="write a named instance family")
    p.add_argument(
        "--family",
        required=True,
        choices=["extremal", "biplane", "triangle", "random"],
    )
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--graph", default="-")
    p.add_argument("--edges", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--target-nu", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("scan", help="sweep small instances for ratio bounds")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--guard", type=int, default=None)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("verify", help="replay a certificate against an instance")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--cert", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("tuza", help="triangle cover bound for one graph")
    p.add_argument("--graph", default="-")
    p.set_defaults(func=_cmd_tuza)
    return parser


def run(argv) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def main(argv=None) -> int:
    try:
        return run(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PreconditionError as exc:
        print(f"precondition unmet: {exc}", file=sys.stderr)
        return 2
    except InternalInvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
