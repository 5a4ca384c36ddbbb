"""Command-line front end.

Exit codes: 0 success, 2 malformed input or flags, 3 map or mobile outside
the requested class (or a failed verification), 4 resource guard.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import __version__
from .bijection import BijectionError, map_to_mobile, mobile_to_map, phi_inverse
from .maps import AnnularMap, MapError, PlaneMap, annular_girths, girth, is_bipartite, map_to_dict, parse_map, to_dot
from .mobile import BLACK, MobileFormatError, MobileSpec, mobile_to_dict, mobile_to_dot, parse_mobile, validate
from .oracle import BoundExceeded, count_annular_class, count_plane_class, in_class_annular, in_class_bipartite, in_class_plain
from .orientation import GirthSpec, suitable_orientation
from .series import (
    B_annular,
    F_d,
    G_annular,
    TruncatedSeries,
    count_bipartite,
    count_loopless,
    count_simple_bipartite,
    solve_V_and_E,
)
from .verify import SUITES, run_suite

EXIT_OK, EXIT_INVALID, EXIT_CLASS, EXIT_GUARD = 0, 2, 3, 4

MAX_EDGES_GUARD = 8
MAX_N_GUARD = 40


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _int_list(text: str) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_INVALID)


def _load_map(path: str) -> PlaneMap:
    try:
        return parse_map(_read(path))
    except CliError:
        raise
    except (MapError, ValueError, KeyError, TypeError) as exc:
        raise CliError(f"malformed map file {path}: {exc}", EXIT_INVALID)


def _load_mobile(path: str):
    try:
        return parse_mobile(_read(path))
    except MobileFormatError as exc:
        raise CliError(f"malformed mobile file {path}: {exc}", EXIT_INVALID)


def _guard(name: str, value: int | None, limit: int) -> None:
    if value is not None and value > limit:
        raise CliError(f"{name}={value} exceeds the resource guard ({limit})", EXIT_GUARD)


def _emit(obj, fmt: str, dot: str | None = None) -> str:
    if fmt == "dot":
        if dot is None:
            raise CliError("no DOT rendering for this output", EXIT_INVALID)
        return dot
    return json.dumps(obj, sort_keys=True, indent=1)


# ---------------------------------------------------------------------------
# class handling


def _girth_spec(pm: PlaneMap, args) -> GirthSpec:
    d, b = getattr(args, "d", None), getattr(args, "b", None)
    if (d is None) == (b is None):
        raise CliError("give exactly one of --d or --b", EXIT_INVALID)
    if isinstance(pm, AnnularMap):
        p, q = pm.root_degree, pm.inner_root_degree
        if b is not None:
            if p % 2 or q % 2:
                raise CliError("root faces of a bipartite annular map have even degrees", EXIT_CLASS)
            return GirthSpec.annular_bipartite(b, p // 2, q // 2)
        return GirthSpec.annular(d, p, q)
    return GirthSpec.bipartite(b) if b is not None else GirthSpec.plain(d)


def _membership(pm: PlaneMap, spec: GirthSpec) -> str | None:
    if pm.root is None:
        return "the vertex map has no root face"
    if spec.kind == "plain":
        ok = in_class_plain(pm, spec.d)
        what = f"root degree {pm.root_degree} and girth {girth(pm.base)}, need both equal to {spec.d}"
    elif spec.kind == "bipartite":
        ok = in_class_bipartite(pm, spec.d)
        what = f"bipartite {is_bipartite(pm.base)}, root degree {pm.root_degree}, girth {girth(pm.base)}; need {2 * spec.d}"
    else:
        assert isinstance(pm, AnnularMap)
        scale = 2 if spec.is_bipartite else 1
        d, p, q = scale * spec.d, scale * spec.p, scale * spec.q
        sep, non = annular_girths(pm)
        ok = p <= q and d <= p and in_class_annular(pm, d, p, q)
        if spec.is_bipartite:
            ok = ok and is_bipartite(pm.base)
        what = f"type ({p}, {q}), separating girth {sep}, non-separating girth {non}; need p <= q, d <= p, separating = p, non-separating >= {d}"
    return None if ok else what


def _mobile_spec(t, args) -> MobileSpec:
    d, b = args.d, args.b
    if (d is None) == (b is None):
        raise CliError("give exactly one of --d or --b", EXIT_INVALID)
    if t.special is None:
        return MobileSpec.b_dibranching(b) if b is not None else MobileSpec.d_branching(d)
    k = len(t.rotation[t.special])
    w = t.vertex_weight(t.special)
    if b is not None:
        s = k // 2
        return MobileSpec.typed_bipartite(b, s + w, s)
    return MobileSpec.typed(d, k + w, k)


# ---------------------------------------------------------------------------
# coefficient tables


def _table(series: TruncatedSeries, fmt: str) -> str:
    names = list(series.ring.names)
    rows = sorted(series.items(), key=lambda ec: (sum(ec[0]), ec[0]))
    return _rows(names, [list(e) + [c] for e, c in rows], fmt)


def _rows(names: list[str], rows: list[list[int]], fmt: str) -> str:
    header = names + ["coefficient"]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue().rstrip("\n")
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], indent=1)
    if fmt == "dot":
        raise CliError("tables have no DOT rendering", EXIT_INVALID)
    cells = [header] + [[str(x) for x in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.rjust(wd) for c, wd in zip(r, widths)) for r in cells)


def _profile_rows(table: dict, degrees: list[int]) -> list[list[int]]:
    out = []
    for key, c in table.items():
        if any(k not in degrees for k in key) or not c:
            continue
        out.append([key.count(k) for k in degrees] + [c])
    return sorted(out, key=lambda r: (sum(r[:-1]), r[:-1]))


# ---------------------------------------------------------------------------
# commands


def cmd_girth(args) -> str:
    g = girth(_load_map(args.map).base)
    return "none" if g is None else str(g)


def cmd_annular_girths(args) -> str:
    pm = _load_map(args.map)
    if not isinstance(pm, AnnularMap):
        raise CliError("the map has no inner_root_half_edge", EXIT_INVALID)
    sep, non = annular_girths(pm)
    if args.format == "json":
        return json.dumps({"separating": sep, "non_separating": non}, sort_keys=True)
    return f"separating {'none' if sep is None else sep}\nnon-separating {'none' if non is None else non}"


def _member_map(args) -> tuple[PlaneMap, GirthSpec]:
    pm = _load_map(args.map)
    spec = _girth_spec(pm, args)
    why = _membership(pm, spec)
    if why:
        raise CliError(f"map is not in the class of {spec}: {why}", EXIT_CLASS)
    return pm, spec


def cmd_orient(args) -> str:
    pm, spec = _member_map(args)
    o = suitable_orientation(pm, spec)
    return _emit(o.to_records(), args.format, to_dot(pm, o.weight))


def cmd_mobile(args) -> str:
    pm, spec = _member_map(args)
    t = map_to_mobile(pm, spec)
    return _emit(mobile_to_dict(t), args.format, mobile_to_dot(t))


def cmd_close(args) -> str:
    t = _load_mobile(args.mobile)
    spec = _mobile_spec(t, args)
    ok, why = validate(t, spec)
    if not ok:
        raise CliError(f"mobile is not in the family {spec}: {why}", EXIT_CLASS)
    pm = mobile_to_map(t, spec)
    return _emit(map_to_dict(pm), args.format, to_dot(pm))


def cmd_invert(args) -> str:
    t = _load_mobile(args.mobile)
    if any(t.colors[t.vertex_of[h]] != BLACK for h in t.buds()):
        raise CliError("buds must sit on black vertices", EXIT_INVALID)
    pm, o = phi_inverse(t)
    return _emit({"map": map_to_dict(pm), "orientation": o.to_records()}, args.format, to_dot(pm, o.weight))


def cmd_series(args) -> str:
    _guard("--max-n", args.max_n, MAX_N_GUARD)
    if args.bipartite or args.b is not None:
        b = args.b if args.b is not None else args.d
        if b is None:
            raise CliError("give --b for the bipartite series", EXIT_INVALID)
        _, E = solve_V_and_E(b, args.degrees, args.max_n)
        return _table(E, args.format)
    if args.d is None:
        raise CliError("give --d", EXIT_INVALID)
    return _table(F_d(args.d, args.degrees, args.max_n), args.format)


def cmd_annular_series(args) -> str:
    _guard("--max-n", args.max_n, MAX_N_GUARD)
    if args.e is None or args.p is None or args.q is None:
        raise CliError("give --e, --p and --q", EXIT_INVALID)
    if args.bipartite or args.b is not None:
        b = args.b if args.b is not None else args.d
        return _table(B_annular(b, args.e, args.p, args.q, args.degrees, args.max_n), args.format)
    if args.d is None:
        raise CliError("give --d", EXIT_INVALID)
    return _table(G_annular(args.d, args.e, args.p, args.q, args.degrees, args.max_n), args.format)


def cmd_formula(args) -> str:
    if args.which == "loopless":
        if args.max_n is None:
            raise CliError("give --max-n", EXIT_INVALID)
        _guard("--max-n", args.max_n, 500)
        return _rows(["n"], [[n, count_loopless(n)] for n in range(args.max_n + 1)], args.format)
    if args.degrees is None:
        raise CliError("give the face degrees with --degrees", EXIT_INVALID)
    if any(k % 2 for k in args.degrees):
        raise CliError("face degrees of a bipartite map are even", EXIT_INVALID)
    lowest = 4 if args.which == "simple-bipartite" else 2
    if any(k < lowest for k in args.degrees):
        raise CliError(f"face degrees must be at least {lowest}", EXIT_INVALID)
    top = max(args.degrees) // 2
    n = [sorted(args.degrees).count(2 * i) for i in range(lowest // 2, top + 1)]
    val = count_simple_bipartite(*n) if args.which == "simple-bipartite" else count_bipartite(*n)
    return _rows(["degrees"], [[",".join(map(str, sorted(args.degrees))), val]], args.format)


def cmd_enumerate(args) -> str:
    _guard("--max-n", args.max_n, 6)
    top = max(args.degrees)
    if args.e is not None or args.p is not None or args.q is not None:
        if None in (args.d, args.e, args.p, args.q):
            raise CliError("annular enumeration needs --d, --e, --p and --q", EXIT_INVALID)
        _guard("edges", (args.p + args.q + top * args.max_n) // 2, MAX_EDGES_GUARD)
        table = count_annular_class(args.d, args.e, args.p, args.q, args.max_n, top)
    else:
        d = 2 * args.b if args.b is not None else args.d
        if d is None:
            raise CliError("give --d or --b", EXIT_INVALID)
        degrees = args.degrees
        if args.b is not None or args.bipartite:
            if any(k % 2 for k in degrees) or d % 2:
                raise CliError("bipartite classes need even degrees", EXIT_INVALID)
        _guard("edges", (d + top * args.max_n) // 2, MAX_EDGES_GUARD + 2)
        table = count_plane_class(d, args.max_n, top, face_degrees=degrees)
    names = [f"x{k}" for k in args.degrees]
    return _rows(names, _profile_rows(dict(table), list(args.degrees)), args.format)


_VERIFY_BOUNDS = {
    "roundtrip": {"max_edges": "max_edges", "d": "ds", "b": "bs"},
    "orientations": {"max_edges": "max_edges", "d": "ds", "b": "bs"},
    "counts": {"d": "ds", "max_n": "max_faces", "max_degree": "max_degree"},
    "annular": {"max_n": "max_faces", "max_degree": "max_degree"},
    "formulas": {"max_e": "max_e"},
    "loopless": {"max_n": "max_n"},
    "special-cases": {"max_edges": "max_edges"},
}


def cmd_verify(args) -> tuple[str, int]:
    bounds = {}
    for flag, key in _VERIFY_BOUNDS[args.suite].items():
        val = getattr(args, flag, None)
        if val is not None:
            bounds[key] = val
    _guard("--max-edges", args.max_edges, MAX_EDGES_GUARD - 1)
    checks = run_suite(args.suite, **bounds)
    report = {"suite": args.suite, "passed": all(c.passed for c in checks), "checks": [c.as_dict() for c in checks]}
    return json.dumps(report, indent=1, sort_keys=True), EXIT_OK if report["passed"] else EXIT_CLASS


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="planarmobiles", description="Planar maps of prescribed girth and their mobiles.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p, default="json", choices=("json", "csv", "dot")):
        p.add_argument("--format", choices=choices, default=default)

    p = sub.add_parser("girth", help="girth of a map")
    p.add_argument("map")
    p.set_defaults(func=cmd_girth)

    p = sub.add_parser("annular-girths", help="separating and non-separating girth")
    p.add_argument("map")
    fmt(p, "text", ("text", "json"))
    p.set_defaults(func=cmd_annular_girths)

    for name, func, hint in (("orient", cmd_orient, "suitable orientation"), ("mobile", cmd_mobile, "open a map into its mobile")):
        p = sub.add_parser(name, help=hint)
        p.add_argument("map")
        p.add_argument("--d", type=int)
        p.add_argument("--b", type=int)
        fmt(p)
        p.set_defaults(func=func)

    p = sub.add_parser("close", help="close a mobile of a family into its map")
    p.add_argument("mobile")
    p.add_argument("--d", type=int)
    p.add_argument("--b", type=int)
    fmt(p)
    p.set_defaults(func=cmd_close)

    p = sub.add_parser("invert", help="map and orientation of any mobile")
    p.add_argument("mobile")
    fmt(p)
    p.set_defaults(func=cmd_invert)

    for name, func in (("series", cmd_series), ("annular-series", cmd_annular_series)):
        p = sub.add_parser(name, help="coefficient table of a generating function")
        p.add_argument("--d", type=int)
        p.add_argument("--b", type=int)
        p.add_argument("--bipartite", action="store_true")
        if name == "annular-series":
            p.add_argument("--e", type=int)
            p.add_argument("--p", type=int)
            p.add_argument("--q", type=int)
        p.add_argument("--degrees", type=_int_list, required=True)
        p.add_argument("--max-n", type=int, required=True, help="bound on the number of non-root faces")
        fmt(p, "text", ("text", "csv", "json"))
        p.set_defaults(func=func)

    p = sub.add_parser("formula", help="closed counting formulas")
    p.add_argument("which", choices=("loopless", "simple-bipartite", "bipartite"))
    p.add_argument("--max-n", type=int)
    p.add_argument("--degrees", type=_int_list, help="face degrees, one entry per face")
    fmt(p, "text", ("text", "csv", "json"))
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("enumerate", help="brute-force counts in the series table layout")
    p.add_argument("--d", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--e", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("--degrees", type=_int_list, required=True)
    p.add_argument("--max-n", type=int, required=True)
    fmt(p, "text", ("text", "csv", "json"))
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--max-edges", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-e", type=int)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--d", type=_int_list)
    p.add_argument("--b", type=_int_list)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except BijectionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CLASS
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    print(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
