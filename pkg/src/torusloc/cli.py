"""Command-line front end.

    torusloc roots --type B3 --json
    torusloc polytope --roots F4 --edges-at-vertex auto
    torusloc localize data.json --certify
    torusloc localize data.json --solve --specialize 1
    torusloc model --name adjoint-B3 --emit data.json
    torusloc hilbert --dim 7 --degree 56 --p1 21
    torusloc run --case hirzebruch-localization | --all [--json]
    torusloc cases [--module localize]

Exit codes: 0 when every requested check passes, 1 on a failed check,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import cases, contactrr, laurent, localize, models, polytope, rootsys
from .weights import Weight

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _weight_arg(text: str) -> Weight:
    try:
        return Weight(Fraction(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"cannot parse weight {text!r}") from exc


def cmd_roots(args) -> int:
    rs = rootsys.build(args.type)
    if args.json:
        print(_dump(rs.to_json()))
    else:
        print(f"{rs.type}: {len(rs.roots)} roots in rank {rs.ambient_rank} coordinates")
        print(f"  long: {len(rs.long_roots)}  short: {len(rs.short_roots)}")
        for r in rs.roots:
            print(f"  {r}")
    return EXIT_OK


def cmd_polytope(args) -> int:
    rs = rootsys.build(args.roots)
    p = rootsys.root_polytope(rs)
    if args.edges_at_vertex == "auto":
        # the vertices are the long roots, one Weyl orbit
        vertices = [rs.long_roots[0]]
    else:
        vertices = [_weight_arg(args.edges_at_vertex)]
    counts = {}
    dirs = {}
    for v in vertices:
        try:
            d = polytope.edges_at_vertex(p, v, method=args.method)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        counts[str(v)] = len(d)
        dirs[str(v)] = d
    if args.json:
        print(_dump({"vertices": len(p.vertices), "facets": len(p.facets), "edge_counts": counts}))
        return EXIT_OK
    print(f"{rs.type} root polytope: {len(p.vertices)} vertices, {len(p.facets)} facets")
    for v in vertices:
        print(f"  {counts[str(v)]} edges at {v}")
        if args.directions:
            for w in dirs[str(v)]:
                print(f"    {w}")
    return EXIT_OK


def _load_data(path: str) -> localize.FixedPointData:
    try:
        with open(path) as fh:
            return localize.FixedPointData.from_json(json.load(fh))
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"cannot read fixed-point data from {path}: {exc}") from exc


def cmd_localize(args) -> int:
    data = _load_data(args.data)
    out: dict = {}
    status = EXIT_OK
    if args.certify:
        try:
            poly = localize.certify_laurent(data)
            out["laurent"] = str(poly)
            out["value_at_one"] = cases.plain(poly.value_at_one())
        except laurent.NotDivisible as exc:
            out["laurent"] = None
            out["error"] = f"not a Laurent polynomial: {exc}"
            status = EXIT_FAIL
    if args.solve:
        lam = [int(x) for x in args.specialize.split(",")] if args.specialize else None
        try:
            out["solution"] = cases.plain(localize.solve_multiplicities(data, lam))
        except (localize.MultiplicityError, laurent.SolveError) as exc:
            out["solution"] = None
            out["error"] = str(exc)
            status = EXIT_FAIL
    if not (args.certify or args.solve):
        out["character"] = str(localize.euler_characteristic(data))
    if args.json:
        print(_dump(out))
    else:
        for k, v in out.items():
            print(f"{k}: {v}")
    return status


def cmd_model(args) -> int:
    try:
        data = models.model_by_name(args.name)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = data.to_json()
    if args.emit:
        with open(args.emit, "w") as fh:
            fh.write(_dump(payload) + "\n")
        print(f"wrote {args.name} ({len(data.points)} points, {len(data.curves)} curves) to {args.emit}")
    elif args.json:
        print(_dump(payload))
    else:
        print(f"{args.name}: dimension {data.ambient_dim}, torus rank {data.rank}")
        for p in data.points:
            print(f"  {p.label}: mu={p.mu} compass={p.compass}")
        for c in data.curves:
            print(f"  {c.label}: curve, mu={c.mu}, degree {c.degree}")
    return EXIT_OK


def cmd_hilbert(args) -> int:
    if args.dim % 2 == 0 or args.dim < 3:
        raise UsageError("contact manifolds have odd dimension at least 3")
    n = (args.dim - 1) // 2
    hp = contactrr.hilbert_polynomial(n)
    try:
        ids = contactrr.intersection_identities(n)
        bound = contactrr.bg_bound(n)
    except contactrr.NotDetermined:
        ids, bound = [], None
    values = {}
    if args.degree is not None:
        values[contactrr.DEGREE] = args.degree
    if args.p1 is not None:
        values["p1"] = args.p1
    if args.p2 is not None:
        values["p2"] = args.p2
    numeric = bool(values) and set(hp.symbols) <= set(values)
    verdicts = {}
    if numeric:
        if bound is not None:
            verdicts["bound"] = bound.holds(values)
        if n == 4:
            verdicts["parity"] = bool(contactrr.parity_check(4, args.degree).passed)
    if args.json:
        print(_dump({
            "dim": args.dim,
            "p_coeffs": hp.to_json()["binomial"],
            "identities": [str(i) for i in ids],
            "bound": str(bound) if bound else None,
            "verdicts": verdicts,
        }))
    else:
        print(hp)
        for i in ids:
            print(i)
        if bound is not None:
            print(f"bound: {bound}")
        if n == 4:
            print(f"integrality: {contactrr.parity_check(4).congruence}")
        if numeric:
            print("values: " + ", ".join(f"p({m}) = {cases.plain(hp(m, values))}" for m in range(1, 4)))
        for k, v in verdicts.items():
            print(f"{k}: {'pass' if v else 'fail'}")
    return EXIT_OK if all(verdicts.values()) else EXIT_FAIL


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("TORUSLOC_THREADS", "1")))
    except ValueError:
        return 1


def run_cases(names: list[str], as_json: bool) -> int:
    unknown = [n for n in names if n not in cases.REGISTRY]
    if unknown:
        raise UsageError(f"unknown case(s): {', '.join(unknown)}")
    names = sorted(set(names))
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        reports = list(pool.map(cases.run_case, names))
    if as_json:
        print(_dump([r.to_json() for r in reports]))
    else:
        for r in reports:
            print("\n".join(r.lines()))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_run(args) -> int:
    if args.all:
        names = [c.name for c in cases.list_cases() if args.slow or not c.slow]
    elif args.case:
        names = args.case
    else:
        raise UsageError("give --case NAME or --all")
    return run_cases(names, args.json)


def cmd_cases(args) -> int:
    listed = cases.list_cases(args.module)
    if args.json:
        print(_dump([{"case": c.name, "module": c.module, "summary": c.summary, "criterion": c.criterion, "slow": c.slow} for c in listed]))
    else:
        for c in listed:
            print(f"{c.name:26} {c.module:10} {c.summary}{'  (slow)' if c.slow else ''}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="torusloc", description="Torus-action computations on root polytopes, localization and contact Riemann-Roch.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--case", action="append", help="run a registered case (repeatable)")
    parser.add_argument("--all", action="store_true", help="run every registered case")
    sub = parser.add_subparsers(dest="command")

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("roots", cmd_roots, "root system in Bourbaki coordinates")
    p.add_argument("--type", required=True, help="e.g. B3, E8")

    p = add("polytope", cmd_polytope, "root polytope and edges at a vertex")
    p.add_argument("--roots", required=True)
    p.add_argument("--edges-at-vertex", default="auto", help="'auto' or a comma-separated vertex")
    p.add_argument("--method", choices=("faces", "rank"), default="faces")
    p.add_argument("--directions", action="store_true", help="print edge directions")

    p = add("localize", cmd_localize, "equivariant Euler characteristic of fixed-point data")
    p.add_argument("data", help="fixed-point JSON file")
    p.add_argument("--certify", action="store_true", help="divide out to a Laurent polynomial")
    p.add_argument("--solve", action="store_true", help="solve for unknown multiplicities")
    p.add_argument("--specialize", help="integer covector, comma-separated, for the solve")

    p = add("model", cmd_model, "fixed-point data of a catalog model")
    p.add_argument("--name", required=True, help="pspace-d, quadric-odd-r, quadric-even-r, adjoint-Br, adjoint-Dr, g2-from-B3, g2-from-D4, ...")
    p.add_argument("--emit", help="write the localize JSON format to this file")

    p = add("hilbert", cmd_hilbert, "Hilbert polynomial of a contact manifold")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--degree", type=int)
    p.add_argument("--p1", type=int)
    p.add_argument("--p2", type=int)

    p = add("run", cmd_run, "run registered cases")
    p.add_argument("--case", action="append")
    p.add_argument("--all", action="store_true")
    p.add_argument("--slow", action="store_true", help="include slow cases with --all")

    p = add("cases", cmd_cases, "list registered cases")
    p.add_argument("--module")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        if args.command is None:
            if args.all:
                return run_cases([c.name for c in cases.list_cases()], args.json)
            if args.case:
                return run_cases(args.case, args.json)
            parser.print_help()
            return EXIT_USAGE
        return args.func(args)
    except UsageError as exc:
        print(f"torusloc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
