"""Command-line front end.

Subcommands: construct, charpoly, triple, mates, dss, table, verify,
oracle.  Outputs are deterministic (stable ordering, no timestamps);
verification failures exit with status 1, usage or input errors with 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import families
from .catalog import (
    build_catalog,
    catalog_to_csv,
    catalog_to_json,
    catalog_to_markdown,
    cospectral_mates,
    is_dss,
    spec_is_connected,
)
from .enumeration import (
    default_jobs,
    enumerate_switching_classes,
    verify_classification,
)
from .families import FamilySpec, construct, display, parse_spec, spec_to_json_dict
from .graphs import graph_to_json_dict, load_graph_file
from .spectral import CharTriple, char_poly, triple_of
from .verify import SUITES, run_suite


def _parse_spec_arg(text: str) -> FamilySpec:
    stripped = text.strip()
    if stripped.startswith("{"):
        return families.spec_from_json_dict(json.loads(stripped))
    return parse_spec(stripped)


def _parse_triple_arg(text: str) -> CharTriple:
    parts = [p for p in text.replace(",", " ").split() if p]
    if len(parts) != 3:
        raise ValueError(f"triple must be 'a,b,n', got {text!r}")
    return CharTriple(int(parts[0]), int(parts[1]), int(parts[2]))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_construct(args) -> int:
    spec = _parse_spec_arg(args.spec)
    g = construct(spec)
    _emit(json.dumps(graph_to_json_dict(g), sort_keys=True) + "\n", args.out)
    return 0


def _cmd_charpoly(args) -> int:
    g = load_graph_file(args.graph)
    print(json.dumps(char_poly(g).to_list()))
    return 0


def _cmd_triple(args) -> int:
    g = load_graph_file(args.graph)
    print(json.dumps(triple_of(g).as_list()))
    return 0


def _cmd_mates(args) -> int:
    triple = _parse_triple_arg(args.triple)
    n_max = args.nmax or max(triple.n, 20)
    catalog = build_catalog(n_max)
    mates = cospectral_mates(triple, catalog)
    payload = [
        {
            "spec": spec_to_json_dict(s),
            "display": display(s),
            "connected": spec_is_connected(s),
        }
        for s in mates
    ]
    print(json.dumps(payload, sort_keys=True, indent=2))
    return 0


def _cmd_dss(args) -> int:
    spec = _parse_spec_arg(args.spec)
    n_max = args.nmax or max(families.order_of(spec), 20)
    print(json.dumps(is_dss(spec, build_catalog(n_max))))
    return 0


def _cmd_table(args) -> int:
    catalog = build_catalog(args.nmax)
    if args.format == "csv":
        text = catalog_to_csv(catalog)
    elif args.format == "json":
        text = catalog_to_json(catalog)
    else:
        text = catalog_to_markdown(catalog)
    _emit(text, args.out)
    return 0


def _cmd_verify(args) -> int:
    reports = run_suite(args.suite, args.bound)
    print(json.dumps([r.to_json_dict() for r in reports], sort_keys=True, indent=2))
    status = 0
    for r in reports:
        print(r.summary(), file=sys.stderr)
        if not r.passed:
            status = 1
    return status


def _cmd_oracle(args) -> int:
    classes = enumerate_switching_classes(args.n, allow_slow=args.allow_slow, jobs=args.jobs)
    result = {"order": args.n, "switching_classes": len(classes)}
    status = 0
    if args.verify:
        report = verify_classification(args.n, allow_slow=args.allow_slow, jobs=args.jobs)
        result["verification"] = report.to_json_dict()
        print(report.summary(), file=sys.stderr)
        if not report.passed:
            status = 1
    if args.dump:
        payload = [graph_to_json_dict(g) for g in classes]
        with open(args.dump, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True)
            fh.write("\n")
        result["dumped_to"] = args.dump
    print(json.dumps(result, sort_keys=True, indent=2))
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signed-spectra",
        description="Exact spectral toolkit for signed graphs with two eigenvalues off +-1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a family member as graph JSON")
    p.add_argument("--spec", required=True, help="compact form like 'A0(3,2)+K2' or spec JSON")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("charpoly", help="exact characteristic polynomial of a graph file")
    p.add_argument("--graph", required=True, help="graph file (JSON or edge-list text)")
    p.set_defaults(fn=_cmd_charpoly)

    p = sub.add_parser("triple", help="characteristic triple [a, b, n] of a graph file")
    p.add_argument("--graph", required=True)
    p.set_defaults(fn=_cmd_triple)

    p = sub.add_parser("mates", help="all switching classes realizing a triple")
    p.add_argument("--triple", required=True, help="a,b,n")
    p.add_argument("--nmax", type=int, help="catalog bound (default: max(n, 20))")
    p.set_defaults(fn=_cmd_mates)

    p = sub.add_parser("dss", help="is the member determined by its spectrum up to switching?")
    p.add_argument("--spec", required=True)
    p.add_argument("--nmax", type=int, help="catalog bound (default: max(order, 20))")
    p.set_defaults(fn=_cmd_dss)

    p = sub.add_parser("table", help="emit the ordered catalog")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json", "md"), required=True)
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "--suite",
        required=True,
        choices=tuple(SUITES) + ("all",),
    )
    p.add_argument("--bound", type=int, help="suite-specific bound (defaults per suite)")
    p.add_argument("--jobs", type=int, default=None, help="worker count (unused by most suites)")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("oracle", help="brute-force switching-class enumeration")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="cross-check against the catalog")
    p.add_argument("--allow-slow", action="store_true", help="permit experimental order 8")
    p.add_argument("--jobs", type=int, default=None, help="parallel workers (env SIGNED_SPECTRA_JOBS)")
    p.add_argument("--dump", help="write class representatives as JSON to a file")
    p.set_defaults(fn=_cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", None) is None and hasattr(args, "jobs"):
        args.jobs = default_jobs()
    try:
        return args.fn(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
