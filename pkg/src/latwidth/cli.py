"""Command-line entry point: ``latwidth <command> ...``.

Every command prints one UTF-8 JSON document.  Report-style commands wrap
their results in an envelope ``{command, inputs, results, version,
elapsed_ms}``; ``width`` and ``metrics`` print their result object directly
unless ``--envelope`` is given.  Exit codes: 0 success, 1 a check or
verification failed, 2 usage error or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Any, List, Optional

import numpy as np

from . import __version__
from .geom import GeometryError, LatticePolygon, Point, lattice_points, are_equivalent
from .io import polygon_from_json, polygon_to_json, region_to_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_SEED = 2**64 - 1
# error codes that signal a failed check rather than bad input
ASSERTION_CODES = frozenset({"CatalogMismatch", "CounterexampleFound", "OracleDisagreement"})


class UsageError(Exception):
    pass


def jsonable(obj: Any) -> Any:
    """Convert results to JSON values; rationals become strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, int)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, LatticePolygon):
        return polygon_to_json(obj)
    if isinstance(obj, Point):
        return [str(obj.x), str(obj.y)]
    if isinstance(obj, np.generic):
        return jsonable(obj.item())
    if isinstance(obj, np.ndarray):
        return jsonable(obj.tolist())
    if hasattr(obj, "_asdict"):
        return {k: jsonable(v) for k, v in obj._asdict().items()}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in items]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(doc) -> str:
    return json.dumps(jsonable(doc), ensure_ascii=False)


def load_polygon(path: str) -> LatticePolygon:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    try:
        return polygon_from_json(doc)
    except GeometryError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _interior_range(text: str) -> List[int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected k or k_min..k_max, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"empty or negative range {text!r}")
    return list(range(lo, hi + 1))


def _seed(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}") from None
    if not 0 <= n <= MAX_SEED:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return n


# --------------------------------------------------------------------------
# Commands: each returns (results, passed)
# --------------------------------------------------------------------------


def cmd_width(args):
    from .metrics import lattice_width

    r = lattice_width(load_polygon(args.polygon))
    return {"value": r.value, "direction": list(r.minimizer)}, True


def cmd_metrics(args):
    from .metrics import metrics_summary

    return metrics_summary(load_polygon(args.polygon)), True


def cmd_points(args):
    poly = load_polygon(args.polygon)
    pts = lattice_points(poly, interior_only=args.interior)
    return {"count": len(pts), "points": [list(p) for p in pts], "interior_only": args.interior}, True


def cmd_blocking(args):
    from .catalog import CASES, classify_blocking_polygon
    from .maximality import blocking_data

    poly = load_polygon(args.polygon)
    bd = blocking_data(poly)
    out = {
        "per_edge": {str(i): [list(p) for p in pts] for i, pts in bd.per_edge.items()},
        "blocking_polygon": bd.blocking_polygon,
        "case": None,
        "equivalent_case": None,
    }
    if bd.blocking_polygon is not None and bd.blocking_polygon.dim == 2:
        out["case"] = classify_blocking_polygon(bd.blocking_polygon)
        for name, data in CASES.items():
            if are_equivalent(bd.blocking_polygon, data.blocking_polygon) is not None:
                out["equivalent_case"] = name
                break
    return out, True


def cmd_maximal(args):
    from .maximality import is_k_maximal, k_maximal_extension

    poly = load_polygon(args.polygon)
    out = {"k": args.k, "is_k_maximal": is_k_maximal(poly, args.k)}
    if args.extend and not out["is_k_maximal"]:
        try:
            out["extension"] = k_maximal_extension(poly)
        except GeometryError as exc:
            out["extension_error"] = str(exc)
    return out, True


def cmd_regions(args):
    from .catalog import CASE_ALIASES, CASES, case_data
    from .maximality import vertex_regions

    name = CASE_ALIASES.get(args.target, args.target)
    if name in CASES:
        B = case_data(name).blocking_polygon
        if args.catalog:
            cells = case_data(name).regions
        else:
            cells = vertex_regions(B, reflections=args.normalize)
    else:
        B = load_polygon(args.target)
        cells = vertex_regions(B, reflections=args.normalize)
    edges = []
    for i, (a, b) in enumerate(B.edges()):
        cs = cells[i]
        edges.append({
            "edge": [[str(a.x), str(a.y)], [str(b.x), str(b.y)]],
            "region": region_to_json(cs),
            "closures": [c.closure_polygon() if c.is_bounded() else None for c in cs],
        })
    return {"blocking_polygon": B, "edges": edges}, True


def cmd_verify(args):
    from .cases import build_case, verify_all, verify_case

    if args.all:
        reports = verify_all(args.grid, args.refine_iters, args.tol, args.jobs)
    else:
        reports = [verify_case(build_case(args.case), args.grid, args.refine_iters, args.tol)]
    return [r.to_json() for r in reports], all(r.passed for r in reports)


def cmd_search(args):
    from .oracle import isominwidth_scan, make_spec, search

    spec = make_spec(args.radius, 3 if args.shape == "tri" else 4, args.interior, allow_large=args.allow_large)
    if args.isominwidth:
        r = isominwidth_scan(spec, args.jobs)
        return {"max_width_by_k": r.max_width_by_k, "equality_classes": r.equality_cases,
                "polygons_checked": r.polygons_checked}, r.ok
    r = search(spec, args.jobs)
    if args.emit_argmax:
        with open(args.emit_argmax, "w", encoding="utf-8") as fh:
            fh.write(dumps({"max_width": r.max_width, "polygons": r.argmax_polygons}) + "\n")
    return {"max_width": r.max_width, "argmax_polygons": r.argmax_polygons, "histogram": r.histogram, "visited": r.visited}, True


def cmd_check(args):
    from .inequalities import run_suite

    res = run_suite(args.suite, seed=args.seed, samples=args.samples)
    return res, bool(res["passed"])


# --------------------------------------------------------------------------
# Parser
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_seed, default=0, help="seed for randomized sweeps (default 0)")
    common.add_argument("--jobs", type=int, default=None, help="worker processes (default: LATWIDTH_JOBS or CPU count)")
    common.add_argument("--timing", action="store_true", help="record wall-clock elapsed_ms (otherwise 0, for byte-identical reports)")
    common.add_argument("--envelope", action="store_true", help="wrap width/metrics output in the report envelope")

    p = argparse.ArgumentParser(prog="latwidth", description="Lattice width of planar convex bodies: exact metrics, verifiers and oracles.")
    p.add_argument("--version", action="version", version=f"latwidth {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("width", parents=[common], help="lattice width and a minimizing direction")
    s.add_argument("polygon")
    s.set_defaults(func=cmd_width, bare=True)

    s = sub.add_parser("metrics", parents=[common], help="all width functionals of a polygon")
    s.add_argument("polygon")
    s.set_defaults(func=cmd_metrics, bare=True)

    s = sub.add_parser("points", parents=[common], help="lattice points of a polygon")
    s.add_argument("polygon")
    s.add_argument("--interior", action="store_true")
    s.set_defaults(func=cmd_points)

    s = sub.add_parser("blocking", parents=[common], help="blocking points and the classified blocking polygon")
    s.add_argument("polygon")
    s.set_defaults(func=cmd_blocking)

    s = sub.add_parser("maximal", parents=[common], help="k-maximality test and extension")
    s.add_argument("polygon")
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--extend", action="store_true")
    s.set_defaults(func=cmd_maximal)

    s = sub.add_parser("regions", parents=[common], help="per-edge vertex regions of a blocking polygon")
    s.add_argument("target", help="case name or blocking polygon JSON")
    s.add_argument("--normalize", action="store_true", help="apply the symmetry reduction")
    s.add_argument("--catalog", action="store_true", help="print the stored case regions")
    s.set_defaults(func=cmd_regions)

    s = sub.add_parser("verify", parents=[common], help="grid verification of the circumscriber cases")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--all", action="store_true")
    g.add_argument("--case")
    s.add_argument("--grid", type=int, default=64)
    s.add_argument("--tol", type=float, default=1e-6)
    s.add_argument("--refine-iters", type=int, default=60)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", parents=[common], help="exhaustive lattice-polygon search")
    s.add_argument("--shape", choices=("tri", "quad"), default="tri")
    s.add_argument("--radius", type=int, required=True)
    s.add_argument("--interior", type=_interior_range, default=[0, 1], help="k or k_min..k_max")
    s.add_argument("--emit-argmax")
    s.add_argument("--allow-large", action="store_true", help="allow quadrilateral searches with R > 3")
    s.add_argument("--isominwidth", action="store_true", help="run the w^2 <= 9 G° scan instead")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("check", parents=[common], help="inequality and catalog suites")
    s.add_argument("--suite", choices=("extremizers", "isominwidth", "makai", "chain", "transference", "all"), default="all")
    s.add_argument("--samples", type=int, default=200)
    s.set_defaults(func=cmd_check)
    return p


def _inputs(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "bare", "timing", "envelope")}


def run(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with status 2
        return int(exc.code or 0)
    if args.jobs is not None and args.jobs < 1:
        print("latwidth: --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE
    t0 = time.perf_counter()
    try:
        results, passed = args.func(args)
    except UsageError as exc:
        print(f"latwidth: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GeometryError as exc:
        print(f"latwidth: {exc}", file=sys.stderr)
        out.write(dumps({"command": args.command, "error": {"code": exc.code, "message": str(exc)}}) + "\n")
        return EXIT_FAIL if exc.code in ASSERTION_CODES else EXIT_USAGE
    elapsed = int(round((time.perf_counter() - t0) * 1000)) if args.timing else 0
    if getattr(args, "bare", False) and not args.envelope:
        doc = results
    else:
        doc = {"command": args.command, "inputs": _inputs(args), "results": results, "version": __version__, "elapsed_ms": elapsed}
    out.write(dumps(doc) + "\n")
    return EXIT_OK if passed else EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
