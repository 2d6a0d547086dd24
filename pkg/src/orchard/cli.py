"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 invariant violation (general position).
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from pathlib import Path

from .bounds import formula_value
from .constructions import construct
from .crossings import GeneralPositionError, per_edge_crossings
from .export import DrawingFormatError, load_drawing, save_drawing, to_svg
from .graphs import Family, FamilySpec, ParameterError
from .search import estimate_ocn, resolve_threads

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True,
                   help="cycle, disjoint-cycles, closed-chain, open-chain, bouquet, "
                        "three-cycles, star, prism, ladder")
    p.add_argument("--n", type=int, default=3, help="cycle order / prism or ladder index")
    p.add_argument("--x", type=int, default=1, help="number of cycles")


def _spec(args) -> FamilySpec:
    return FamilySpec(Family.parse(args.family), args.n, args.x)


def cmd_count(args) -> int:
    d = load_drawing(args.input)
    counts = per_edge_crossings(d)
    if args.json:
        print(json.dumps({"total": sum(counts.values()),
                          "edges": [[s, t, c] for (s, t), c in counts.items()]}))
        return EXIT_OK
    for (s, t), c in counts.items():
        print(f"{s}\t{t}\t{c}")
    print(f"total\t{sum(counts.values())}")
    return EXIT_OK


def cmd_construct(args) -> int:
    spec = _spec(args)
    d = construct(spec)
    fmt = args.format or (Path(args.out).suffix.lstrip(".") if args.out else "json")
    if fmt == "png":
        if not args.out:
            raise ParameterError("--format png needs --out")
        from .plotting import plot_drawing
        plot_drawing(d, args.out, title=str(spec))
        return EXIT_OK
    if fmt == "svg":
        text = to_svg(d, show_lines=args.show_lines)
    elif fmt == "json":
        text = d.dumps(indent=1) + "\n"
    else:
        raise ParameterError(f"unknown format {fmt!r}")
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bounds(args) -> int:
    report = formula_value(_spec(args))
    print(report.dumps() if args.json else report.table())
    return EXIT_OK


def cmd_search(args) -> int:
    spec = _spec(args)
    threads = resolve_threads(args.threads)
    result = estimate_ocn(spec, budget=args.budget, mode=args.mode, seed=args.seed,
                          cap=args.cap, threads=threads)
    report = formula_value(spec)
    if report.certified_lower is not None and result.best_count < report.certified_lower:
        logging.critical("search found %d, below the certified lower bound %d",
                         result.best_count, report.certified_lower)
    if report.exact is not None and result.best_count < report.exact:
        logging.critical("search found %d, below the stated exact value %d",
                         result.best_count, report.exact)
    elif result.best_count < report.lower:
        logging.critical("search found %d, below the stated lower bound %d",
                         result.best_count, report.lower)
    payload = result.to_json()
    if args.out:
        save_drawing(result.drawing(), args.out)
    print(json.dumps(payload))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .reproduction import run_all

    rows = run_all(full=args.full)
    width = max(len(r.claim) for r in rows)
    failed = 0
    for r in rows:
        status = "PASS" if r.passed else "FAIL"
        failed += not r.passed
        print(f"{r.criterion:>2}  {status}  {r.claim:<{width}}  expected {r.expected:<10} "
              f"actual {r.actual}")
    print(f"{len(rows) - failed}/{len(rows)} claims reproduced")
    if args.report_dir:
        out = Path(args.report_dir)
        out.mkdir(parents=True, exist_ok=True)
        with open(out / "verify.tsv", "w", newline="") as fh:
            writer = csv.writer(fh, delimiter="\t")
            writer.writerow(["criterion", "status", "claim", "expected", "actual", "seconds"])
            for r in rows:
                writer.writerow([r.criterion, "PASS" if r.passed else "FAIL", r.claim,
                                 r.expected, r.actual, f"{r.seconds:.3f}"])
        from .plotting import plot_bounds, plot_drawing
        plot_bounds(Family.PRISM, list(range(3, 21)), out / "prism_bounds.png")
        plot_bounds(Family.LADDER, list(range(3, 21)), out / "ladder_bounds.png")
        for spec in (FamilySpec(Family.PRISM, 6), FamilySpec(Family.PRISM, 7),
                     FamilySpec(Family.LADDER, 7), FamilySpec(Family.TRIANGLE_BOUQUET, x=4)):
            plot_drawing(construct(spec), out / f"{spec.family.value}_{spec.n}_{spec.x}.png",
                         title=str(spec))
        print(f"report written to {out}")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orchard", description="Orchard crossing numbers of drawings")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: $ORCHARD_THREADS or all cores)")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", help="count crossings of a drawing file (JSON or SVG)")
    p.add_argument("input")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("construct", help="write a family construction")
    _family_args(p)
    p.add_argument("--out")
    p.add_argument("--format", choices=["json", "svg", "png"])
    p.add_argument("--show-lines", action="store_true",
                   help="SVG: draw every generating line and mark crossings")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bounds", help="stated values and bounds for a family")
    _family_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", help="search for drawings with few crossings")
    _family_args(p)
    p.add_argument("--mode", choices=["convex", "anneal", "auto"], default="auto")
    p.add_argument("--budget", type=int, default=50_000, help="annealing evaluations")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=10, help="largest vertex count for exhaustive search")
    p.add_argument("--out", help="write the best drawing as JSON")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="reproduce the stated results as a pass/fail table")
    p.add_argument("--full", action="store_true", help="acceptance-size random samples")
    p.add_argument("--report-dir", help="also write verify.tsv and figures here")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    if args.threads is None:
        args.threads = resolve_threads()
    try:
        return args.func(args)
    except GeneralPositionError as exc:
        print(f"error: general position violated: vertices {exc.triple}", file=sys.stderr)
        return EXIT_INVARIANT
    except (DrawingFormatError, ParameterError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
