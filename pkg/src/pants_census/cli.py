"""Command line front end.  Output is JSON by default, CSV with --format csv."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, List, Optional, Sequence, Tuple

from .census import (
    SCHEMA,
    CensusQuery,
    SurfaceParams,
    pants_lower_bound,
    run_census,
    surface_lower_bound,
)
from .complex import build_complex
from .hyperbolic import (
    BASIS,
    SPANNING_TREE,
    build_holonomy,
    edge_dictionary,
    solve_hexagon,
    word_to_group,
)
from .oracle import build_domain, self_intersection_number, trace_geodesic, DEFAULT_SHIFT
from .path_graph import (
    DEFAULT_BUDGET,
    count_cyclic_paths,
    enumerate_cyclic_paths,
    path_to_word,
)
from .words import decompose, is_alternating, is_primitive, self_intersection, validate

Rows = List[dict]
Result = Tuple[dict, Optional[Rows]]


def _dump_alphabet(args) -> Result:
    cx = build_complex()
    out = cx.to_json()
    out["spanning_tree"] = [e.label for e in SPANNING_TREE]
    out["basis"] = {e.label: g for e, g in BASIS.items()}
    out["group_image"] = {e.label: w or "1" for e, w in sorted(edge_dictionary(cx).items())}
    return out, [_flat(letter) for letter in out["letters"]]


def _paths_count(args) -> Result:
    h = count_cyclic_paths(args.length)
    return {"n": args.length, "H": h}, None


def _paths_enumerate(args) -> Result:
    paths = enumerate_cyclic_paths(args.length, primitive_only=args.primitive, budget=args.budget)
    items = []
    for p in paths:
        items.append(
            {
                "path": p.labels,
                "arcs": list(p.edge_labels),
                "word": path_to_word(p).labels if len(p) >= 2 else None,
            }
        )
    out = {"n": args.length, "primitive_only": args.primitive, "count": len(items), "paths": items}
    rows = [
        {"path": " ".join(i["path"]), "arcs": "".join(i["arcs"]), "word": " ".join(i["word"] or [])}
        for i in items
    ]
    return out, rows


def _word_validate(args) -> Result:
    w = validate(args.word)
    d = decompose(w)
    out = {
        "word": w.labels,
        "valid": True,
        "length": len(w),
        "subword_lengths": list(d.lengths),
        "components": list(d.components),
        "primitive": is_primitive(w),
        "alternating": is_alternating(w),
    }
    return out, None


def _word_intersect(args) -> Result:
    w = validate(args.word)
    return {"word": w.labels, "length": len(w), "i_w": self_intersection(w)}, None


def _geometry_solve(args) -> Result:
    m = solve_hexagon(*args.boundary)
    h = build_holonomy(m)
    return {"metric": m.to_json(), "holonomy": h.to_json()}, None


def _oracle_intersections(args) -> Result:
    w = validate(args.word)
    m = solve_hexagon(*args.boundary)
    h = build_holonomy(m)
    g = word_to_group(w)
    i_geo = self_intersection_number(g, h)
    traced = trace_geodesic(g, h, build_domain(h, DEFAULT_SHIFT))
    pieces = [
        {
            "rotation": p.rotation,
            "start": p.start.tolist(),
            "end": p.end.tolist(),
            "entry_wall": p.entry_wall,
            "exit_wall": p.exit_wall,
            "length": p.length,
        }
        for p in traced.pieces
    ]
    out = {
        "word": w.labels,
        "group_element": g.conjugacy_form(),
        "i_w": self_intersection(w),
        "i_geo": i_geo,
        "total_length": traced.total_length,
        "pieces": pieces,
    }
    return out, None


def _census(args) -> Result:
    q = CensusQuery(args.L, args.K, tuple(args.boundary))
    c = run_census(q, with_oracle=args.oracle, budget=args.budget, tolerance=args.tolerance, workers=args.workers)
    out = c.to_json()
    return out, [_flat(rec) for rec in out["records"]]


def _bound_pants(args) -> Result:
    if args.l_max is None:
        if args.boundary is None:
            raise _Usage("bound pants needs --l-max or --boundary")
        l_max = solve_hexagon(*args.boundary).l_max
    else:
        l_max = args.l_max
    value = pants_lower_bound(args.L, args.K, l_max)
    out = {
        "L": args.L,
        "K": args.K,
        "l_max": l_max,
        "l_max_convention": "longest hexagon edge; the boundary/distance variant is at most 2 * l_max",
        "value": value,
    }
    return out, None


def _bound_surface(args) -> Result:
    p = SurfaceParams(args.g, args.n, args.area, args.sys, args.cx)
    b = surface_lower_bound(p, args.L, args.K)
    out = {"g": args.g, "n": args.n, "area": args.area, "systole": args.sys, "c_X": args.cx,
           "L": args.L, "K": args.K, **b.to_json()}
    rows = [{k: v for k, v in out.items() if k != "variants"}]
    return out, rows


def _flat(d: dict) -> dict:
    out = {}
    for k, v in d.items():
        if isinstance(v, list) and all(not isinstance(i, (dict, list)) for i in v):
            out[k] = " ".join(map(str, v))
        elif not isinstance(v, (dict, list)):
            out[k] = v
    return out


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _Usage(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="enumeration cap on path length")
    common.add_argument("--tolerance", type=float, default=1e-9)

    p = _Parser(prog="pants-census", description="Closed geodesics on a hyperbolic pair of pants.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def leaf(parent, name: str, fn: Callable, help: str):
        sp = parent.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=fn)
        return sp

    def group(name: str, help: str):
        g = sub.add_parser(name, help=help)
        return g.add_subparsers(dest="action", required=True, parser_class=_Parser)

    a = group("alphabet", "the 18-letter edge alphabet")
    leaf(a, "dump", _dump_alphabet, "incidence table")

    ps = group("paths", "cyclic paths in the transition graph")
    s = leaf(ps, "count", _paths_count, "closed-form H_n")
    s.add_argument("--length", type=int, required=True)
    s = leaf(ps, "enumerate", _paths_enumerate, "list canonical cyclic paths")
    s.add_argument("--length", type=int, required=True)
    s.add_argument("--primitive", action="store_true")

    ws = group("word", "cyclic words")
    for name, fn in (("validate", _word_validate), ("intersect", _word_intersect)):
        s = leaf(ws, name, fn, f"{name} a cyclic word")
        s.add_argument("--word", nargs="+", required=True, help="edge labels, e.g. x1 x4- y3")

    gs = group("geometry", "pants metric and holonomy")
    s = leaf(gs, "solve", _geometry_solve, "hexagon lengths and holonomy")
    s.add_argument("--boundary", type=float, nargs=3, required=True, metavar=("L1", "L2", "L3"))

    os_ = group("oracle", "geometric self-intersection")
    s = leaf(os_, "intersections", _oracle_intersections, "count crossings in a fundamental domain")
    s.add_argument("--boundary", type=float, nargs=3, required=True, metavar=("L1", "L2", "L3"))
    s.add_argument("--word", nargs="+", required=True)

    s = sub.add_parser("census", parents=[common], help="certified geodesics in G(L, K)")
    s.set_defaults(func=_census)
    s.add_argument("--L", type=float, required=True)
    s.add_argument("--K", type=float, required=True)
    s.add_argument("--boundary", type=float, nargs=3, required=True, metavar=("L1", "L2", "L3"))
    s.add_argument("--oracle", action="store_true", help="also count self-intersections geometrically")
    s.add_argument("--workers", type=int, default=1)

    bs = group("bound", "closed-form lower bounds")
    s = leaf(bs, "pants", _bound_pants, "lower bound on the pants")
    s.add_argument("--L", type=float, required=True)
    s.add_argument("--K", type=float, required=True)
    s.add_argument("--l-max", type=float, dest="l_max")
    s.add_argument("--boundary", type=float, nargs=3, metavar=("L1", "L2", "L3"))
    s = leaf(bs, "surface", _bound_surface, "lower bound on a surface")
    s.add_argument("--g", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--area", type=float, required=True)
    s.add_argument("--sys", type=float, required=True)
    s.add_argument("--cx", type=float, required=True)
    s.add_argument("--L", type=float, required=True)
    s.add_argument("--K", type=float, required=True)
    return p


def _render(payload: dict, rows: Optional[Rows], fmt: str) -> str:
    if fmt == "json":
        payload = {"schema": SCHEMA, **payload}
        # json emits repr(float), i.e. full double precision
        return json.dumps(payload, indent=2)
    if rows is None:
        rows = [_flat(payload)]
    buf = io.StringIO()
    fields: List[str] = []
    for r in rows:
        fields.extend(k for k in r if k not in fields)
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        payload, rows = args.func(args)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (ValueError, ArithmeticError) as exc:
        err = {"schema": SCHEMA, "error": type(exc).__name__, "message": str(exc)}
        cond = getattr(exc, "condition", None)
        if cond is not None:
            err["condition"] = cond
        print(json.dumps(err))
        return 1
    print(_render(payload, rows, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
