"""Command-line interface: ``oneplane <subcommand> ...``.

Exit codes: 0 on success or a passing verdict, 1 on a failing verdict or an
unsuccessful search, 2 on bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import IO, Iterable

from . import __version__, _kernels, opg
from .certify import SearchLimits, certify, drawing_search, maxe_bound, turan_exhaustive
from .cliques import AbstractGraph, has_clique, parse_edge_list, serialize_edge_list, turan_graph, turan_size
from .constructions import FAMILIES, FIXTURES, ConstructionParams, load_fixture
from .drawing import OnePlaneDrawing
from .errors import DrawingError, SearchExhausted
from .invariants import (
    ALTERNATING4,
    alternating_vertices,
    classify_faces,
    compute_invariants,
    crossing_skeleton,
)
from .svg import to_svg

FORMATS = ("text", "json-lines", "svg")

Record = list[tuple[str, str]]


class InputError(Exception):
    """Unreadable input; reported with exit code 2."""


def _read_text(path: str, stdin: IO[str]) -> str:
    if path == "-":
        return stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _emit(records: Iterable[Record], fmt: str, out: IO[str]) -> None:
    first = True
    for rec in records:
        if fmt == "json-lines":
            out.write(json.dumps(dict(rec)) + "\n")
        else:
            if not first:
                out.write("\n")
            out.write("".join(f"{k}={v}\n" for k, v in rec))
        first = False


def _emit_drawing(d: OnePlaneDrawing, fmt: str, out: IO[str], title: str | None = None) -> None:
    if fmt == "svg":
        out.write(to_svg(d, title))
    elif fmt == "json-lines":
        out.write(json.dumps({"n": str(d.n), "m": str(d.m), "x": str(d.x), "opg": d.to_opg()}) + "\n")
    else:
        out.write(d.to_opg())


# ---------------------------------------------------------------------------
# subcommands


def cmd_validate(args, stdin, out) -> int:
    d = opg.parse(_read_text(args.input, stdin))
    if args.format == "svg":
        out.write(to_svg(d, args.input))
        return 0
    rec = [
        ("status", "valid"),
        ("n", str(d.n)),
        ("m", str(d.m)),
        ("x", str(d.x)),
        ("faces", str(len(d.faces))),
        ("components", str(d.connectivity())),
    ]
    _emit([rec], args.format, out)
    return 0


def cmd_invariants(args, stdin, out) -> int:
    d = opg.parse(_read_text(args.input, stdin))
    if args.format == "svg":
        out.write(to_svg(d, args.input))
        return 0
    _emit([compute_invariants(d).items()], args.format, out)
    return 0


def cmd_faces(args, stdin, out) -> int:
    d = opg.parse(_read_text(args.input, stdin))
    if args.format == "svg":
        out.write(to_svg(d, args.input))
        return 0
    classes = classify_faces(d)
    records = []
    for f in d.faces:
        cls = classes[f.id]
        records.append([
            ("face", str(f.id)),
            ("degree", str(f.degree)),
            ("fakes", str(cls.fake_count)),
            ("class", str(cls)),
            ("vertices", ",".join(d.label(v) for v in f.vertices)),
        ])
    _emit(records, args.format, out)
    return 0


def cmd_skeleton(args, stdin, out) -> int:
    d = opg.parse(_read_text(args.input, stdin))
    sk = crossing_skeleton(d)
    if args.format == "svg":
        out.write(to_svg(sk, "crossing skeleton"))
        return 0
    if args.opg:
        out.write(sk.to_opg())
        return 0
    alt = sorted(alternating_vertices(sk))
    kinds = [c.kind for c in classify_faces(sk).values()]
    rec = [
        ("n", str(sk.n)),
        ("m", str(sk.m)),
        ("x", str(sk.x)),
        ("faces", str(len(kinds))),
        ("alternating4_faces", str(kinds.count(ALTERNATING4))),
        ("alternating_vertices", ",".join(sk.label(v) for v in alt)),
        ("has_k3", str(has_clique(sk.abstract_graph(), 3)).lower()),
    ]
    _emit([rec], args.format, out)
    return 0


def _certify_text(name: str, text: str, k: int) -> tuple[Record, bool]:
    try:
        d = opg.parse(text)
    except DrawingError as exc:
        return [("file", name), ("error", f"{type(exc).__name__}: {exc}"), ("verdict", "fail")], False
    cert = certify(d, k)
    return [("file", name)] + cert.items(), cert.passed


def cmd_certify(args, stdin, out) -> int:
    if args.all:
        root = Path(args.all)
        if not root.is_dir():
            raise InputError(f"not a directory: {args.all}")
        paths = sorted(root.glob("*.opg"))
        if not paths:
            raise InputError(f"no .opg files in {args.all}")
        with ThreadPoolExecutor() as pool:
            results = list(pool.map(lambda p: _certify_text(p.name, p.read_text(), args.k), paths))
    else:
        if not args.inputs:
            raise InputError("certify needs input files or --all DIR")
        results = []
        for path in args.inputs:
            text = _read_text(path, stdin)
            if len(args.inputs) == 1:
                d = opg.parse(text)
                cert = certify(d, args.k)
                results.append(([("file", path)] + cert.items(), cert.passed))
            else:
                results.append(_certify_text(path, text, args.k))
    _emit([rec for rec, _ in results], "json-lines" if args.format == "json-lines" else "text", out)
    return 0 if all(ok for _, ok in results) else 1


def cmd_gen(args, stdin, out) -> int:
    params = ConstructionParams(args.family, args.n, args.k, args.name)
    d = params.build()
    _emit_drawing(d, args.format, out, title=args.family)
    return 0


def cmd_turan(args, stdin, out) -> int:
    g = turan_graph(args.n, args.k)
    if args.edges:
        out.write(serialize_edge_list(g))
        return 0
    rec = [("n", str(args.n)), ("k", str(args.k)), ("turan_size", str(turan_size(args.n, args.k)))]
    if args.n <= 7:
        rec.append(("exhaustive", str(turan_exhaustive(args.n, args.k))))
    if args.k >= 3 and args.n >= 1:
        entry = maxe_bound(args.n, args.k)
        rec += [("maxe_bound", str(entry.upper)), ("bound_status", entry.status())]
    _emit([rec], "json-lines" if args.format == "json-lines" else "text", out)
    return 0


def cmd_search(args, stdin, out) -> int:
    g: AbstractGraph = parse_edge_list(_read_text(args.input, stdin))
    limits = SearchLimits(args.max_crossings, args.max_nodes)
    try:
        d = drawing_search(g, limits, method=args.method)
    except SearchExhausted as exc:
        rec = [
            ("status", type(exc).__name__),
            ("complete", str(exc.complete).lower()),
            ("reason", str(exc)),
        ]
        _emit([rec], "json-lines" if args.format == "json-lines" else "text", out)
        return 1
    _emit_drawing(d, args.format, out)
    return 0


def cmd_fixtures(args, stdin, out) -> int:
    records = []
    ok = True
    for name in sorted(FIXTURES):
        prof = FIXTURES[name]
        rec = [("name", name), ("n", str(prof.n)), ("m", str(prof.m)), ("clique_free", f"K{prof.clique_free}")]
        try:
            d = load_fixture(name)
            rec += [("x", str(d.x)), ("status", "ok")]
        except DrawingError as exc:
            ok = False
            rec += [("status", f"{type(exc).__name__}: {exc}")]
        records.append(rec)
    _emit(records, "json-lines" if args.format == "json-lines" else "text", out)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text", help="output format")
    common.add_argument("--verbose", action="store_true", help="print a version banner to stderr")

    parser = argparse.ArgumentParser(
        prog="oneplane", description="Validate, analyse, generate and certify 1-plane drawings."
    )
    parser.add_argument("--version", action="version", version=f"oneplane {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="subcommand")

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_, description=help_)
        p.set_defaults(func=func)
        return p

    for name, func, help_ in (
        ("validate", cmd_validate, "check an OPG drawing"),
        ("invariants", cmd_invariants, "planarization invariants and the edge-count identity"),
        ("faces", cmd_faces, "one record per face with its class"),
    ):
        add(name, func, help_).add_argument("input", help="OPG file or '-' for stdin")

    p = add("skeleton", cmd_skeleton, "crossing skeleton summary")
    p.add_argument("input", help="OPG file or '-' for stdin")
    p.add_argument("--opg", action="store_true", help="emit the skeleton drawing instead")

    p = add("certify", cmd_certify, "certify drawings against the K_k-free bound")
    p.add_argument("inputs", nargs="*", help="OPG files or '-'")
    p.add_argument("--k", type=int, required=True, help="forbidden clique size")
    p.add_argument("--all", metavar="DIR", help="certify every .opg file in DIR")

    p = add("gen", cmd_gen, "generate a drawing")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--name", help="fixture name (family 'fixture')")

    p = add("turan", cmd_turan, "Turán numbers and bound table entries")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--edges", action="store_true", help="emit T_{k-1}(n) as an edge list")

    p = add("search", cmd_search, "search for a 1-plane drawing of an edge list")
    p.add_argument("input", help="edge list ('n m' header) or '-'")
    p.add_argument("--max-crossings", type=int)
    p.add_argument("--max-nodes", type=int, default=SearchLimits.max_nodes)
    p.add_argument("--method", choices=("kuratowski", "rotations"), default="kuratowski")

    add("fixtures", cmd_fixtures, "list and verify bundled fixtures")
    return parser


def run(argv: list[str] | None = None, stdin: IO[str] | None = None,
        stdout: IO[str] | None = None, stderr: IO[str] | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.verbose:
        stderr.write(f"oneplane {__version__} (kernels: {_kernels.BACKEND})\n")
    try:
        return args.func(args, stdin, stdout)
    except (DrawingError, InputError) as exc:
        stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2


def main(argv: list[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
