"""Command-line interface: ``arrlab generate|analyze|verify|nerve|export-dot``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 computation budget exceeded (the report is still printed, with nulls).
"""

from __future__ import annotations

import argparse
import json
import platform
import sys
import time
from importlib import metadata

from . import families as fam
from . import verify as ver
from .casalg import arrangement_ideal, ci_regularity, link_degree
from .exactfield import Field, FieldError
from .graphs import (Graph, diameter, diameter_bound, dual_graph, export_dot, graph_properties,
                     valency_stats, vertex_connectivity)
from .nerve import (ComplexError, SimplicialComplex, ale_construction, max_facet_degree,
                    nerve_of_family, one_skeleton, reduced_homology_ranks)
from .projgeom import DEFAULT_MAX_Q, Arrangement, BudgetExceeded, GeometryError, has_only_planar_singularities
from .serialize import FormatError, dumps, from_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# input helpers
# ---------------------------------------------------------------------------

def _parse_value(text: str):
    if "," in text:
        return [_parse_value(t) for t in text.split(",") if t]
    try:
        return int(text)
    except ValueError:
        return text


def descriptor_from_args(name: str, pairs: list[str]) -> dict:
    """``fermat d=3 p=7`` -> {"name": "fermat", "params": {"d": 3}, "field": {...}}.

    ``p`` (with optional ``k``) selects F_{p^k}; ``field=QQ`` selects the rationals.
    """
    params: dict = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise UsageError(f"expected key=value, got {pair!r}")
        params[key] = _parse_value(value)
    desc: dict = {"name": name, "params": params}
    field_name = params.pop("field", None)
    p, k = params.pop("p", None), params.pop("k", 1)
    if field_name is not None:
        if str(field_name).upper() not in ("QQ", "Q"):
            raise UsageError("field= only accepts QQ; use p=<prime> [k=<degree>] for finite fields")
        desc["field"] = {"kind": "rational"}
    elif p is not None:
        desc["field"] = {"kind": "finite", "p": p, "k": k}
    return desc


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    if not text.strip():
        raise FormatError(f"{path}: empty input")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON: {exc}") from None


def load_object(path: str, max_q: int = DEFAULT_MAX_Q):
    """An arrangement, graph, complex or ideal document, or a family descriptor."""
    obj = _read_json(path)
    if isinstance(obj, dict) and "name" in obj:
        return build(obj, max_q)
    return from_json(obj)


def build(desc: dict, max_q: int = DEFAULT_MAX_Q):
    if desc.get("name") == "schur":
        desc = {**desc, "params": {"max_q": max_q, **(desc.get("params") or {})}}
    return fam.build_family(desc)


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# analysis report
# ---------------------------------------------------------------------------

def graph_report(g: Graph) -> dict:
    vs = valency_stats(g)
    props = graph_properties(g)
    kappa = vertex_connectivity(g) if g.vcount > 1 else 0
    diam = diameter(g) if g.vcount else 0
    return {
        "vertices": g.vcount,
        "edges": props.edge_count,
        "valencies": [g.valency(v) for v in range(g.vcount)],
        "min_valency": vs.delta,
        "max_valency": vs.Delta,
        "regular": vs.regular,
        "connectivity": kappa,
        "diameter": None if diam == float("inf") else diam,
        "diameter_bound": diameter_bound(g.vcount, kappa) if kappa >= 1 else None,
        "bipartite": props.bipartite,
        "triangle_free": props.triangle_free,
    }


def algebra_report(a: Arrangement, max_lines: int | None) -> tuple[dict, str | None]:
    block = {"ci": None, "regularity": None, "predicted_valency": None, "link_degrees": None}
    try:
        ideal = arrangement_ideal(a, max_lines)
        reg = ci_regularity(ideal)
        block["ci"] = reg is not None
        if reg is not None:
            block["regularity"] = reg
            block["predicted_valency"] = reg - 1
        block["link_degrees"] = [link_degree(a, i, max_lines) for i in range(len(a))]
    except BudgetExceeded as exc:
        return block, str(exc)
    return block, None


def analyze(obj, algebra: bool = False, max_lines: int | None = None) -> tuple[dict, Graph, str | None]:
    """The analysis report, the analysed graph, and a budget message if one was hit."""
    report: dict = {"arrangement": None}
    budget = None
    if isinstance(obj, Arrangement):
        g = dual_graph(obj)
        planar, witness = has_only_planar_singularities(obj)
        report["arrangement"] = {"field": obj.field.to_json(), "n": obj.n, "lines": len(obj)}
        report["planar_singularities"] = {"planar": planar,
                                          "witness": witness.to_json() if witness else None}
        if algebra:
            report["algebra"], budget = algebra_report(obj, max_lines)
    elif isinstance(obj, Graph):
        g = obj
        if algebra:
            raise UsageError("--algebra needs an arrangement, not a bare graph")
    else:
        raise UsageError(f"cannot analyze a {type(obj).__name__}")
    report["graph"] = graph_report(g)
    if budget:
        report["budget_exceeded"] = budget
    return report, g


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_generate(args) -> int:
    if args.descriptor:
        desc = _read_json(args.descriptor)
        if not isinstance(desc, dict):
            raise FormatError("a descriptor is a JSON object")
    elif args.family:
        desc = descriptor_from_args(args.family, args.params)
    else:
        raise UsageError("give a family name or --descriptor FILE")
    _write(dumps(build(desc, args.max_q)), args.output)
    return EXIT_OK


def cmd_analyze(args) -> int:
    t0 = time.perf_counter()
    obj = load_object(args.input, args.max_q)
    report, g = analyze(obj, args.algebra, args.max_lines_algebra)
    if args.meta:
        report["meta"] = {"version": _version(), "python": platform.python_version(),
                          "seconds": round(time.perf_counter() - t0, 3)}
    _write(dumps(report), args.output)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(export_dot(g))
    return EXIT_BUDGET if "budget_exceeded" in report else EXIT_OK


def cmd_verify(args) -> int:
    names = list(ver.SUITES) if args.suite == "all" else [args.suite]
    if any(n not in ver.SUITES for n in names):
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(ver.SUITES)} or all")
    results = [ver.run_suite(n) for n in names]
    if args.json:
        sys.stdout.write(dumps([r.to_json() for r in results]))
    else:
        sys.stdout.write(ver.format_table(results))
    return EXIT_OK if all(r.status != ver.FAIL for r in results) else EXIT_FAIL


def cmd_nerve(args) -> int:
    obj = load_object(args.input)
    if not isinstance(obj, SimplicialComplex):
        raise FormatError("expected a complex document with 'facets'")
    if args.action == "roundtrip":
        r = ale_construction(obj)
        N = len(obj.facets)
        M = max_facet_degree(obj)
        top = min(1, r.gamma.dim + 1)
        out = {
            "gamma": r.gamma.to_json(),
            "generators": [list(s) for s in r.generators],
            "nerve_equal": nerve_of_family(r.generators) == obj,
            "s": r.s,
            "s_bounds": [N, obj.n + N],
            "s_within_bounds": N <= r.s <= obj.n + N,
            "dim": r.dim,
            "dim_allowed": [M - 1, M],
            "homology_delta": reduced_homology_ranks(obj, min(1, obj.dim + 1)),
            "homology_gamma": reduced_homology_ranks(r.gamma, top),
        }
    elif args.action == "homology":
        out = {"reduced_betti": reduced_homology_ranks(obj, obj.dim)}
    else:
        out = one_skeleton(obj).to_json()
    _write(dumps(out), args.output)
    return EXIT_OK


def cmd_export_dot(args) -> int:
    obj = load_object(args.input, args.max_q)
    if isinstance(obj, Arrangement):
        obj = dual_graph(obj)
    elif isinstance(obj, SimplicialComplex):
        obj = one_skeleton(obj)
    if not isinstance(obj, Graph):
        raise UsageError(f"cannot draw a {type(obj).__name__}")
    _write(export_dot(obj), args.output)
    return EXIT_OK


def _version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "unknown"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arrlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_max_q=True):
        p.add_argument("-o", "--output", help="write to this file instead of stdout")
        if with_max_q:
            p.add_argument("--max-q", type=int, default=DEFAULT_MAX_Q,
                           help=f"largest field size for exhaustive line scans (default {DEFAULT_MAX_Q})")

    p = sub.add_parser("generate", help="build a family as JSON")
    p.add_argument("family", nargs="?", choices=fam.FAMILY_NAMES)
    p.add_argument("params", nargs="*", help="key=value pairs; p=<prime> [k=<n>] or field=QQ pick the field")
    p.add_argument("--descriptor", help="JSON file {name, params, field}")
    common(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("analyze", help="dual graph, connectivity and (optionally) algebra report")
    p.add_argument("input", help="arrangement, graph or descriptor JSON ('-' for stdin)")
    p.add_argument("--algebra", action="store_true", help="compute the ideal, CI regularity and link degrees")
    p.add_argument("--max-lines-algebra", type=int, default=None,
                   help="line budget for ideal computations (default 16 over F_q, 8 over Q)")
    p.add_argument("--dot", help="also write the dual graph as DOT to this file")
    p.add_argument("--meta", action="store_true", help="include version and timing metadata")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help=f"one of {', '.join(ver.SUITES)}, or all")
    p.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("nerve", help="nerve constructions on a complex JSON")
    p.add_argument("action", choices=("roundtrip", "homology", "skeleton"))
    p.add_argument("input")
    common(p, with_max_q=False)
    p.set_defaults(func=cmd_nerve)

    p = sub.add_parser("export-dot", help="DOT rendering of a graph, an arrangement's dual graph or a 1-skeleton")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"arrlab: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, FormatError, fam.FamilyError, ComplexError, FieldError, GeometryError) as exc:
        print(f"arrlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
