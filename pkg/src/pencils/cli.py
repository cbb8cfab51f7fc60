"""Command-line front end.

Subcommands: construct, rich-points, verify-lemma, sweep, fit.  Data goes
to stdout or --out; progress and timing go to stderr.  Exit codes: 0 on
success, 2 on a precondition violation or malformed input, 3 when a
verification verdict is false.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import serialize
from .constructions import (
    build_farey_shift_construction,
    build_grid_footnote_config,
    build_m_pencil_config,
    build_symmetric_farey_construction,
    pencils_from_graph,
)
from .errors import PreconditionError
from .incidence import verify_lemma_chain
from .projective import ProjPoint
from .richpoints import rich_points
from .sweeps import CONSTRUCTION_TAGS, fit_exponent, sweep

__all__ = ["main"]


def _read_text(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)
        print(f"wrote {out}", file=sys.stderr)


def _load_centres(raw: str) -> list[ProjPoint]:
    """Inline JSON or @file: a list of ["x","y"] affine pairs or
    ["X","Y","Z"] homogeneous triples, rationals as "p/q" strings."""
    text = Path(raw[1:]).read_text() if raw.startswith("@") else raw
    entries = json.loads(text)
    centres = []
    for entry in entries:
        if len(entry) == 2:
            centres.append(ProjPoint.from_affine(entry[0], entry[1]))
        elif len(entry) == 3:
            centres.append(serialize.point_from_json(entry))
        else:
            raise ValueError(f"centre entry {entry!r} is neither a pair nor a triple")
    return centres


def _build_graph_construction(args):
    d = Fraction(args.d)
    if args.construction == "farey-shift":
        return build_farey_shift_construction(int(args.n), d)
    if args.construction == "symmetric":
        return build_symmetric_farey_construction(int(args.n))
    raise ValueError(f"{args.construction} is not a graph construction")


def _cmd_construct(args) -> int:
    n = int(args.n)
    centres = _load_centres(args.centres) if args.centres else None
    if args.construction == "grid-footnote":
        payload = serialize.pencil_config_to_json(build_grid_footnote_config(n))
    elif args.construction == "m-pencil":
        if args.m is None:
            raise PreconditionError("m-pencil needs --m")
        payload = serialize.pencil_config_to_json(build_m_pencil_config(int(args.m), n))
    else:
        built = _build_graph_construction(args)
        print(f"{built!r}", file=sys.stderr)
        if centres is not None:
            payload = serialize.pencil_config_to_json(
                pencils_from_graph(built, centres))
        else:
            payload = serialize.graph_construction_to_json(built)
    _write_output(serialize.dumps(payload), args.out)
    return 0


def _cmd_rich_points(args) -> int:
    config = serialize.pencil_config_from_json(json.loads(_read_text(args.config)))
    start = time.perf_counter()
    report = rich_points(config)
    elapsed = time.perf_counter() - start
    print(f"rich points: {report.count} in {elapsed:.2f}s", file=sys.stderr)
    summary = serialize.rich_report_summary_csv(report)
    if args.out is None:
        # keep stdout parseable JSON; the one-line summary goes to stderr
        _write_output(serialize.dumps(serialize.rich_report_to_json(report)), None)
        print(summary, file=sys.stderr)
    else:
        _write_output(serialize.dumps(serialize.rich_report_to_json(report)), args.out)
        print(summary)
    return 0


def _cmd_verify_lemma(args) -> int:
    if args.graph:
        construction = serialize.graph_construction_from_json(
            json.loads(_read_text(args.graph)))
    else:
        construction = _build_graph_construction(args)
    centres = _load_centres(args.centres)
    if len(centres) != 2:
        raise PreconditionError("verify-lemma needs exactly 2 centres")
    if any(c.is_infinite for c in centres):
        raise PreconditionError("verify-lemma centres must be affine")
    pairs = [c.to_affine() for c in centres]
    report = verify_lemma_chain(construction.graph, pairs[0], pairs[1])
    _write_output(serialize.dumps(serialize.lemma_report_to_json(report)), args.out)
    if not report.all_ok:
        print("verification FAILED", file=sys.stderr)
        return 3
    print("verification ok", file=sys.stderr)
    return 0


def _cmd_sweep(args) -> int:
    n_values = [int(v) for v in args.n.split(",") if v]
    centres = _load_centres(args.centres) if args.centres else None
    start = time.perf_counter()
    rows = sweep(args.construction, n_values, d=Fraction(args.d),
                 centres=centres, m=args.m, threads=args.threads)
    print(f"swept {len(rows)} rows in {time.perf_counter() - start:.2f}s",
          file=sys.stderr)
    if args.format == "csv":
        _write_output(serialize.sweep_rows_to_csv(rows), args.out)
    else:
        _write_output(serialize.dumps(serialize.sweep_rows_to_json(rows)), args.out)
    return 0


def _cmd_fit(args) -> int:
    rows = serialize.sweep_rows_from_csv(_read_text(args.rows))
    fit = fit_exponent(rows, args.field)
    _write_output(serialize.dumps(serialize.fit_to_json(fit, args.field)), args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pencils",
        description=("Exact pencil configurations, graph-restricted operation "
                     "sets, rich-point counts, incidence verification, and "
                     "scaling sweeps."),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    con = sub.add_parser("construct", help="emit a construction as JSON")
    con.add_argument("--construction", required=True, choices=CONSTRUCTION_TAGS)
    con.add_argument("--n", required=True)
    con.add_argument("--d", default="0", help='rational exponent, e.g. "43/1000"')
    con.add_argument("--m", type=int, help="pencil count for m-pencil")
    con.add_argument("--centres",
                     help="inline JSON or @file; turns a graph construction "
                          "into a pencil config")
    con.add_argument("--out")
    con.set_defaults(func=_cmd_construct)

    rich = sub.add_parser("rich-points",
                          help="count rich points of a pencil config JSON")
    rich.add_argument("--config", required=True, help='path or "-" for stdin')
    rich.add_argument("--out")
    rich.set_defaults(func=_cmd_rich_points)

    ver = sub.add_parser("verify-lemma",
                         help="verify the incidence counting chain")
    ver.add_argument("--construction", choices=("farey-shift", "symmetric"),
                     default="symmetric")
    ver.add_argument("--n", default="4")
    ver.add_argument("--d", default="0")
    ver.add_argument("--graph", help="GraphConstruction JSON path instead of "
                                     "--construction/--n/--d")
    ver.add_argument("--centres", required=True,
                     help='two affine pairs, e.g. \'[["0","-1"],["1","-1"]]\'')
    ver.add_argument("--out")
    ver.set_defaults(func=_cmd_verify_lemma)

    sw = sub.add_parser("sweep", help="scaling sweep over n values")
    sw.add_argument("--construction", required=True, choices=CONSTRUCTION_TAGS)
    sw.add_argument("--n", required=True, help="comma list, e.g. 4,16,64")
    sw.add_argument("--d", default="0")
    sw.add_argument("--m", type=int)
    sw.add_argument("--centres")
    sw.add_argument("--threads", type=int, default=1)
    sw.add_argument("--format", choices=("json", "csv"), default="json")
    sw.add_argument("--out")
    sw.set_defaults(func=_cmd_sweep)

    fit = sub.add_parser("fit", help="log-log exponent fit over sweep rows")
    fit.add_argument("--rows", required=True,
                     help='sweep CSV path or "-" for stdin')
    fit.add_argument("--field", default="edge_count")
    fit.add_argument("--out")
    fit.set_defaults(func=_cmd_fit)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 2
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
