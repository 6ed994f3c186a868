"""Command line entry point: ``residual-closeness <command> ...``.

Exit codes: 0 success, 1 usage or input error, 2 closed form disagrees with
the brute-force sweep.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .closeness import closeness, link_residual_closeness
from .graph import Graph, GraphError, format_edgelist, from_edges, parse_edgelist
from .harary import HararyParamError, harary
from .harness import (
    SweepSpec,
    SweepSpecError,
    records_to_csv,
    records_to_json,
    rows_to_csv,
    sweep_rows,
    sweep_to_json,
    verify,
)

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _pair(text: str) -> tuple[int, int]:
    try:
        k, n = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected K,N, got {text!r}") from None
    return k, n


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _range(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A:B, got {text!r}") from None
    return a, b


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="residual-closeness", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="emit a Harary graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("edgelist", "json"), default="edgelist")
    p.add_argument("--out")

    for name, text in (("closeness", "closeness of a graph"), ("residual", "link residual closeness")):
        p = sub.add_parser(name, help=text)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--harary", type=_pair, metavar="K,N")
        src.add_argument("--input", metavar="FILE")
        if name == "residual":
            p.add_argument("--edges", action="store_true", help="list every minimizing edge")
            p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("verify", help="check closed forms against brute force")
    p.add_argument("--family", default="all")
    p.add_argument("--n-max", type=int, default=60)
    p.add_argument("--k-max", type=int, default=12)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("sweep", help="tabulate C, R, delta over a grid")
    p.add_argument("--k", type=_int_list, required=True, metavar="K1[,K2,...]")
    p.add_argument("--n-range", type=_range, required=True, metavar="A:B")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    return parser


def _load_graph(args) -> Graph:
    if args.harary is not None:
        return harary(args.harary)
    text = Path(args.input).read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        doc = json.loads(text)
        return from_edges(doc["vertex_count"], [tuple(e) for e in doc["edges"]])
    return parse_edgelist(text)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _run(args) -> int:
    if args.command == "gen":
        g = harary((args.k, args.n))
        if args.format == "json":
            doc = {"k": args.k, "n": args.n, "vertex_count": g.n, "edges": [list(e) for e in g.edges()]}
            text = json.dumps(doc) + "\n"
        else:
            text = format_edgelist(g, comment=f"Harary graph H({args.k},{args.n})")
        _emit(text, args.out)
        return EXIT_OK

    if args.command == "closeness":
        print(closeness(_load_graph(args)).decimal())
        return EXIT_OK

    if args.command == "residual":
        rep = link_residual_closeness(_load_graph(args), workers=args.workers)
        print(f"C={rep.closeness.decimal()}")
        print(f"R={rep.residual.decimal()}")
        print(f"delta={rep.delta.decimal()}")
        print(f"NR={rep.normalized_decimal}")
        print(f"argmin_count={len(rep.argmin_edges)}")
        if args.edges:
            for e in rep.argmin_edges:
                print(f"{e.u} {e.v}")
        return EXIT_OK

    if args.command == "verify":
        spec = SweepSpec(range(2, args.k_max + 1), 3, args.n_max, args.family, args.format, args.workers)
        summary = verify(spec)
        text = records_to_csv(summary) if args.format == "csv" else records_to_json(summary)
        _emit(text, args.out)
        print(summary.line(), file=sys.stderr)
        for rec in summary.mismatches():
            print("MISMATCH " + ",".join(rec.row()), file=sys.stderr)
        return EXIT_MISMATCH if summary.mismatched else EXIT_OK

    # sweep
    a, b = args.n_range
    spec = SweepSpec(args.k, a, b, None, args.format, args.workers)
    records = verify(spec).records
    text = rows_to_csv(sweep_rows(records)) if args.format == "csv" else sweep_to_json(records)
    _emit(text, args.out)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        return _run(parser.parse_args(argv))
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (SweepSpecError, HararyParamError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
