"""``kv`` command-line front end.

Exit codes: 0 success, 1 property failure, 2 input error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .corpus import CorpusError, bundled_corpus, run_corpus
from .diagram import Diagram, DiagramError, circuits, insert_curl, parse_diagram, serialize_diagram
from .invariant import braces, compute_report, partition_classes
from .orientation import circuit_writhes, format_orientation
from .skein import DEFAULT_CAP, CapExceeded, oracle_bracket

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(path: str) -> Diagram:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None
    try:
        return parse_diagram(text)
    except DiagramError as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_compute(args) -> int:
    report = compute_report(_load(args.file))
    if args.json:
        print(json.dumps(report.to_json()))
        return EXIT_OK
    print(f"bracket: {report.bracket}")
    print(f"braces: {report.braces}")
    print(f"normalized: {report.normalized}")
    print(f"twist: {report.twist}")
    print(f"c: {report.c}")
    print(f"v: {report.v}")
    print(f"crossings: {report.crossings}")
    print(f"diagram_components: {report.diagram_components}")
    print(f"separable: {str(report.separable).lower()}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    d = _load(args.file)
    try:
        value = oracle_bracket(d, cap=args.cap)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    print(f"oracle: {value}")
    if args.compare:
        state_sum = compute_report(d).bracket
        equal = state_sum == value
        print(f"state sum: {state_sum}")
        print(f"compare: {'equal' if equal else 'DIFFERENT'}")
        return EXIT_OK if equal else EXIT_FAIL
    return EXIT_OK


def cmd_partitions(args) -> int:
    d = _load(args.file)
    classes = partition_classes(d)
    if not classes:
        print("not separable: no partitions")
    for k, p in enumerate(classes):
        marks = " ".join(f"{i}:{m[0].upper()}" for i, m in sorted(p.marks.items())) or "(null partition)"
        print(f"partition {k}: signature {p.signature}  marks {marks}")
        if args.verbose:
            print(f"  representative {format_orientation(d, p.representative)}")
    print(f"{{G}}: {braces(d)}")
    return EXIT_OK


def cmd_circuits(args) -> int:
    d = _load(args.file)
    cs = circuits(d)
    ws = circuit_writhes(d)
    for k, (c, w) in enumerate(zip(cs, ws)):
        arcs = " ".join(map(str, c.arcs)) if c.arcs else "(bare loop)"
        print(f"circuit {k}: arcs {arcs}  vertex passages {c.vertex_passages}  self-writhe {w}")
    print(f"t: {sum(ws)}")
    return EXIT_OK


def cmd_twist(args) -> int:
    d = _load(args.file)
    try:
        out = insert_curl(d, args.arc, args.sign)
    except DiagramError as exc:
        raise InputError(str(exc)) from None
    sys.stdout.write(serialize_diagram(out))
    return EXIT_OK


def cmd_check(args) -> int:
    directory = args.dir or bundled_corpus()
    try:
        results = run_corpus(directory)
    except CorpusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    for r in results:
        print(r)
    failed = sum(not r.ok for r in results)
    print(f"{len(results) - failed} passed, {failed} failed")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kv",
        description="Kauffman-Vogel polynomial of rigid-vertex graph diagrams at B=A^-1, a=A.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="bracket, braces, P and counts")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("oracle", help="bracket by full skein expansion")
    p.add_argument("file")
    p.add_argument("--compare", action="store_true", help="also run the state sum")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum crossings to expand")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("partitions", help="partitions, their marks and {G}")
    p.add_argument("file")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("circuits", help="knot-theoretic circuits and the twisting number")
    p.add_argument("file")
    p.set_defaults(func=cmd_circuits)

    p = sub.add_parser("twist", help="splice a curl into an arc (or a bare loop)")
    p.add_argument("file")
    p.add_argument("--arc", type=int, default=None, help="arc label; omit to curl a bare loop")
    p.add_argument("--sign", type=int, choices=(1, -1), required=True)
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("check", help="run the corpus checks")
    p.add_argument("dir", nargs="?", default=None, help="corpus directory (default: bundled)")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
