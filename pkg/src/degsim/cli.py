"""Command-line entry point: ``degsim <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .algebra import DEFAULT_PRIME
from .degree_similarity import DEFAULT_TRIALS, degree_similar
from .errors import DegsimError
from .genchar import DEFAULT_POINTS, psi, psi_equal
from .graphs import ENUMERATION_LIMIT, all_graphs, graph6_decode, graph6_encode, pencil, read_graph6_lines
from .search import classify_classes, find_psi_cospectral_classes, scan_corpus, SearchResult
from .similarity import check_equivalence, snf_invariant_factors

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


def _dump(obj, out):
    out.write(json.dumps(obj, separators=(",", ":"), ensure_ascii=False) + "\n")


def _graph_arg(text: str):
    return graph6_decode(text.encode("ascii", errors="replace"))


def cmd_psi(args, out):
    if os.path.isfile(args.graph):
        with open(args.graph, "rb") as fh:
            data = fh.read()
        for line_no, raw in read_graph6_lines(data):
            try:
                g = graph6_decode(raw)
            except DegsimError as exc:
                if args.strict:
                    raise
                _dump({"line": line_no, "error": str(exc)}, out)
                continue
            _dump({"line": line_no, "graph6": raw.decode("ascii"), "psi": psi(g).to_json()}, out)
    else:
        _dump(psi(_graph_arg(args.graph)).to_json(), out)
    return EXIT_OK


def cmd_compare(args, out):
    g, h = _graph_arg(args.a), _graph_arg(args.b)
    pg, ph = psi(g), psi(h)
    report = {
        "a": graph6_encode(g).decode(),
        "b": graph6_encode(h).decode(),
        "psi_equal": psi_equal(pg, ph),
        "psi": {"a": pg.to_json(), "b": ph.to_json()},
    }
    if g.n == h.n:
        ka, kb = pencil(g).as_ratfn(), pencil(h).as_ratfn()
        fa, fb = snf_invariant_factors(ka), snf_invariant_factors(kb)
        eq = check_equivalence(ka, kb)
        report["invariant_factors"] = {"a": fa.to_json(), "b": fb.to_json()}
        report["similar_over_Q(mu)"] = fa.factors == fb.factors
        report["equivalence"] = eq.to_json()
    else:
        report["invariant_factors"] = None
        report["similar_over_Q(mu)"] = False
        report["equivalence"] = {"charpoly_equal": False, "similar": False, "violation": False}
    _dump(report, out)
    return EXIT_DOMAIN if report["equivalence"]["violation"] else EXIT_OK


def cmd_degsim(args, out):
    g, h = _graph_arg(args.a), _graph_arg(args.b)
    _dump(degree_similar(g, h, trials=args.trials, seed=args.seed).to_json(), out)
    return EXIT_OK


def cmd_fingerprint(args, out):
    index = scan_corpus(args.file, seed=args.seed, prime=args.prime, points=args.points,
                        strict=args.strict, jobs=args.jobs)
    for line in index.dump_lines():
        out.write(line + "\n")
    return EXIT_OK


def cmd_search(args, out):
    index = scan_corpus(args.file, seed=args.seed, prime=args.prime, points=args.points,
                        strict=args.strict, jobs=args.jobs)
    found = find_psi_cospectral_classes(index, jobs=args.jobs)
    reports = classify_classes(found.classes, trials=args.trials, seed=args.seed, jobs=args.jobs)
    for r in reports:
        out.write(r.dumps() + "\n")
    result = SearchResult(index, found, reports)
    print(json.dumps(result.summary(), separators=(",", ":")), file=sys.stderr)
    if args.figures:
        from .report import render_search_figures

        for p in render_search_figures(result, args.figures):
            print(f"wrote {p}", file=sys.stderr)
    return EXIT_OK


def cmd_enumerate(args, out):
    for g in all_graphs(args.n):
        out.write(graph6_encode(g).decode() + "\n")
    return EXIT_OK


def cmd_selftest(args, out):
    from . import selftest

    return EXIT_OK if selftest.run(out) else EXIT_DOMAIN


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    common.add_argument("--prime", type=int, default=DEFAULT_PRIME, help="fingerprint prime")
    common.add_argument("--points", type=int, default=DEFAULT_POINTS, help="fingerprint points")
    common.add_argument("--trials", type=int, default=DEFAULT_TRIALS,
                        help="random invertibility trials")
    common.add_argument("--strict", action="store_true", help="abort on the first bad line")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(
        prog="degsim",
        description="Generalized characteristic polynomials, similarity over Q(mu), "
        "and degree-similarity of graphs.",
    )
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    s = sub.add_parser("psi", parents=[common], help="exact psi(G,t,mu) as JSON")
    s.add_argument("graph", help="graph6 string or a graph6 file")
    s.set_defaults(func=cmd_psi)

    s = sub.add_parser("compare", parents=[common],
                       help="psi equality, invariant factors and the equivalence report")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("degsim", parents=[common], help="degree-similarity verdict")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_degsim)

    s = sub.add_parser("search", parents=[common], help="full corpus pipeline, JSON lines")
    s.add_argument("file")
    s.add_argument("--figures", metavar="DIR", help="also write PNG figures to DIR")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("fingerprint", parents=[common], help="dump the fingerprint index")
    s.add_argument("file")
    s.set_defaults(func=cmd_fingerprint)

    s = sub.add_parser("enumerate", parents=[common],
                       help=f"all graphs on n <= {ENUMERATION_LIMIT} vertices as graph6")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("selftest", parents=[common], help="run the built-in property checks")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args, sys.stdout)
    except DegsimError as exc:
        print(f"degsim: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"degsim: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
