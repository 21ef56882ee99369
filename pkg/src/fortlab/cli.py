"""Command-line interface.

Per-graph commands (`forts`, `zf`, `ft`, `classify`) read graph6 lines from
stdin or --stream FILE and emit JSON lines or CSV; decode failures are
reported to stderr with their line number and processing continues.  The
`verify` command runs a named sweep suite and exits nonzero iff the report
contains violations.  `--force` lifts the exact-enumeration order cap,
which otherwise refuses graphs above 24 vertices (FORTLAB_MAX_N overrides
the default cap).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Iterable, Optional, TextIO

from fortlab import classify as cls
from fortlab import counting as cnt
from fortlab.forts import FortLimitError, enumerate_minimal_forts, fort_number
from fortlab.graphs import Graph6Error, SpiderSpec, from_graph6, to_graph6
from fortlab.verify import run_suite, suite_names
from fortlab.zeroforcing import zero_forcing_number

_FORCE_CAP = str(10**9)


def _input_lines(args) -> Iterable[str]:
    if args.stream:
        with open(args.stream, "r", encoding="ascii") as fh:
            yield from fh
    else:
        yield from sys.stdin


def _open_out(args) -> TextIO:
    if args.out:
        return open(args.out, "w", encoding="utf-8", newline="")
    return sys.stdout


def _per_graph_command(args, emit) -> int:
    """Drive a per-line graph command; emit(graph) returns the output object."""
    errors = 0
    out = _open_out(args)
    try:
        for lineno, raw in enumerate(_input_lines(args), 1):
            line = raw.rstrip("\n")
            try:
                g = from_graph6(line)
                print(json.dumps(emit(g)), file=out)
            except (Graph6Error, FortLimitError) as exc:
                errors += 1
                print(f"line {lineno}: {exc}", file=sys.stderr)
    finally:
        if out is not sys.stdout:
            out.close()
    return 1 if errors else 0


def _cmd_forts(args) -> int:
    return _per_graph_command(
        args, lambda g: enumerate_minimal_forts(g).to_json_dict()
    )


def _cmd_zf(args) -> int:
    def emit(g):
        zf, witness = zero_forcing_number(g)
        return {"graph6": to_graph6(g), "zf": zf, "witness": sorted(witness)}

    return _per_graph_command(args, emit)


def _cmd_ft(args) -> int:
    def emit(g):
        ft, packing = fort_number(g)
        return {
            "graph6": to_graph6(g),
            "ft": ft,
            "packing": [sorted(f) for f in packing],
        }

    return _per_graph_command(args, emit)


def _cmd_classify(args) -> int:
    errors = 0
    out = _open_out(args)
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(cls.CLASSIFY_COLUMNS)
        for lineno, raw in enumerate(_input_lines(args), 1):
            line = raw.rstrip("\n")
            try:
                g = from_graph6(line)
            except Graph6Error as exc:
                errors += 1
                print(f"line {lineno}: {exc}", file=sys.stderr)
                continue
            row = cls.classify_row(g)
            writer.writerow(_csv_cell(row[c]) for c in cls.CLASSIFY_COLUMNS)
    finally:
        if out is not sys.stdout:
            out.close()
    return 1 if errors else 0


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _cmd_path_count(args) -> int:
    print(json.dumps({"n": args.n, "count": cnt.path_fort_count(args.n)}))
    return 0


def _cmd_spider_count(args) -> int:
    spec = SpiderSpec(tuple(args.lengths))
    split = cnt.spider_fort_split(spec)
    print(
        json.dumps(
            {
                "lengths": list(spec.lengths),
                "order": spec.order,
                "total": split.total,
                "dot": split.dot,
                "ring": split.ring,
            }
        )
    )
    return 0


def _cmd_verify(args) -> int:
    stream = None
    if args.stream:
        with open(args.stream, "r", encoding="ascii") as fh:
            stream = fh.readlines()
    report = run_suite(args.suite, max_n=args.max_n, jobs=args.jobs, stream=stream)
    out = _open_out(args)
    try:
        report.write_csv(out)
    finally:
        if out is not sys.stdout:
            out.close()
    print(
        f"suite {report.suite}: {len(report.rows)} rows, "
        f"{report.violations} violations, {report.elapsed:.1f}s",
        file=sys.stderr,
    )
    return 1 if report.violations else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fortlab",
        description="Minimal forts, zero forcing numbers, and counting-law sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_stream_flags(p):
        p.add_argument("--stream", metavar="FILE", help="graph6 input file (default stdin)")
        p.add_argument("--out", metavar="FILE", help="output file (default stdout)")
        p.add_argument(
            "--force",
            action="store_true",
            help="lift the exact-enumeration order cap",
        )

    p = sub.add_parser("forts", help="minimal forts of each input graph (JSON lines)")
    add_stream_flags(p)
    p.set_defaults(fn=_cmd_forts)

    p = sub.add_parser("zf", help="zero forcing number and witness (JSON lines)")
    add_stream_flags(p)
    p.set_defaults(fn=_cmd_zf)

    p = sub.add_parser("ft", help="fort number and witness packing (JSON lines)")
    add_stream_flags(p)
    p.set_defaults(fn=_cmd_ft)

    p = sub.add_parser("classify", help="per-graph classification CSV")
    add_stream_flags(p)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("path-count", help="minimal fort count of the n-vertex path")
    p.add_argument("n", type=int)
    p.set_defaults(fn=_cmd_path_count)

    p = sub.add_parser(
        "spider-count", help="spider fort count with the junction split"
    )
    p.add_argument("lengths", type=int, nargs="+", metavar="L")
    p.set_defaults(fn=_cmd_spider_count)

    p = sub.add_parser("verify", help="run a verification sweep suite")
    p.add_argument("suite", choices=suite_names())
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    add_stream_flags(p)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    if getattr(args, "force", False):
        os.environ["FORTLAB_MAX_N"] = _FORCE_CAP
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
