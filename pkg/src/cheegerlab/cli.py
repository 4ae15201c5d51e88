"""Command-line front end: file-driven computation, certificates, sweeps, SVG.

Subcommands: cheeger, structure, hales, certificate, honeycomb, chain,
optimize, render.  Inputs and outputs are schema-tagged JSON artifacts
(deterministic byte-for-byte for identical inputs and seeds); render emits
SVG 1.1 with true elliptical-arc path commands.

Exit codes: 0 success, 1 validation failure (including malformed JSON, with
line/column diagnostics), 2 solver or optimizer failure.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

from . import jsonio
from .arc_geometry import Arc, ArcCurve, Segment, curve_from_dict, curve_to_dict
from .chamber_lemmas import (
    chain_from_dict,
    pocket_outline,
    run_chain_sweep,
    verify_chain_bound,
)
from .cheeger import (
    cheeger_convex,
    domain_from_dict,
    inner_cheeger_boundary,
    polygon_from_dict,
    structure_report,
)
from .cluster import (
    certificate_to_dict,
    cluster_from_dict,
    cluster_to_dict,
    honeycomb_cluster,
    honeycomb_kcell,
    lower_bound_certificate,
)
from .errors import (
    GenerationError,
    OptimizationError,
    SolverError,
    ValidationError,
)
from .hales_deficit import deficit_report_to_dict, hales_check, place_nodes
from .partition_optimizer import asymptotic_report, optimize, trace_to_dict

_FMT = ".17g"


def _read_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return jsonio.loads(fh.read())
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc


def _write_text(path: str, text: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _default_threads(value):
    if value is not None:
        return value
    env = os.environ.get("CHEEGERLAB_THREADS")
    return int(env) if env else 1


# ---------------------------------------------------------------------------
# Subcommand implementations.

def _cmd_cheeger(args) -> int:
    obj = _read_json(args.input)
    jsonio.require_keys(obj, ["vertices"])
    result = cheeger_convex(polygon_from_dict(obj), tol=args.tol)
    out = {
        "h": result.h,
        "r": result.r,
        "iterations": result.iterations,
        "residual": result.residual,
        "boundary": curve_to_dict(result.cheeger_set_boundary),
        "roles": list(result.roles),
    }
    _write_text(args.output, jsonio.dumps(out))
    return 0


def _cmd_structure(args) -> int:
    obj = _read_json(args.input)
    jsonio.require_keys(obj, ["boundary", "roles", "h"])
    rep = structure_report(domain_from_dict(obj))
    out = {
        "is_class_A": rep.is_class_A,
        "violations": list(rep.violations),
        "angle_rule_residual": rep.angle_rule_residual,
        "perimeter_residual": rep.perimeter_residual,
        "area_residual": rep.area_residual,
        "representation_residuals": list(rep.representation_residuals)
        if rep.representation_residuals is not None
        else None,
    }
    _write_text(args.output, jsonio.dumps(out))
    return 0


def _cmd_hales(args) -> int:
    obj = _read_json(args.input)
    jsonio.require_keys(obj, ["boundary", "roles", "h"])
    domain = domain_from_dict(obj)
    off = inner_cheeger_boundary(domain)
    nodes = place_nodes(off, domain)
    r_star = args.r_star if args.r_star is not None else domain.r
    rep = hales_check(off.curve, nodes, r_star, clamp_mode=args.clamp_mode)
    out = deficit_report_to_dict(rep)
    out["r_star"] = r_star
    out["exceptional_nodes"] = int(sum(nodes.exceptional))
    _write_text(args.output, jsonio.dumps(out))
    return 0


def _cmd_certificate(args) -> int:
    obj = _read_json(args.input)
    jsonio.require_keys(
        obj,
        ["container", "cells"],
        ["container_area", "claimed_optimal", "adjacency", "border_contacts"],
    )
    cert = lower_bound_certificate(cluster_from_dict(obj), clamp_mode=args.clamp_mode)
    _write_text(args.output, jsonio.dumps(certificate_to_dict(cert)))
    return 0


def _cmd_honeycomb(args) -> int:
    if args.coords is not None:
        import json as _json

        try:
            coords = _json.loads(args.coords)
        except _json.JSONDecodeError as exc:
            raise ValidationError(f"--coords is not valid JSON: {exc}") from exc
        if not isinstance(coords, list):
            raise ValidationError("--coords expects a JSON array like [[0,0],[1,0]]")
        cl = honeycomb_kcell(coords, unit_hexagon=not args.unit_side)
    else:
        if args.l is None:
            raise ValidationError("honeycomb needs --l or --coords")
        cl = honeycomb_cluster(args.l, unit_hexagon=not args.unit_side)
    _write_text(args.output, jsonio.dumps(cluster_to_dict(cl)))
    return 0


def _cmd_chain(args) -> int:
    obj = _read_json(args.input)
    if "sweep" in obj:
        jsonio.require_keys(obj, ["sweep"])
        cfg = obj["sweep"]
        jsonio.require_keys(
            cfg, ["flavors", "count", "seed"], ["m_values", "mc_samples"]
        )
        lines = []
        total_violations = 0
        for flavor in cfg["flavors"]:
            records, violations = run_chain_sweep(
                flavor,
                int(cfg["count"]),
                int(cfg["seed"]),
                m_values=tuple(cfg.get("m_values", (3, 4, 5, 6))),
                mc_samples=int(cfg.get("mc_samples", 200_000)),
            )
            total_violations += len(violations)
            for rec in records:
                lines.append(jsonio.dumps(rec))
        _write_text(args.output, "".join(lines))
        return 0 if total_violations == 0 else 2
    jsonio.require_keys(obj, ["flavor", "centers", "radii"], ["lines"])
    chain = chain_from_dict(obj)
    rep = verify_chain_bound(chain, mc_samples=args.mc_samples)
    out = {
        "area": rep.area,
        "bound": rep.bound,
        "holds": rep.holds,
        "method": rep.method,
        "sample_error": rep.sample_error,
        "warnings": list(chain.warnings),
    }
    _write_text(args.output, jsonio.dumps(out))
    return 0


def _cmd_optimize(args) -> int:
    cfg = _read_json(args.config)
    jsonio.require_keys(
        cfg, ["container", "budget", "seed"], ["k", "ks", "restarts"]
    )
    container = polygon_from_dict(cfg["container"])
    restarts = int(cfg.get("restarts", 8))
    threads = _default_threads(args.threads)
    lines = []
    if "k" in cfg:
        trace = optimize(
            int(cfg["k"]), container, budget=int(cfg["budget"]),
            seed=int(cfg["seed"]), restarts=restarts, threads=threads,
        )
        lines.append(jsonio.dumps(trace_to_dict(trace)))
    if "ks" in cfg:
        rows = asymptotic_report(
            [int(k) for k in cfg["ks"]], container, budget=int(cfg["budget"]),
            seed=int(cfg["seed"]), restarts=restarts, threads=threads,
        )
        for row in rows:
            lines.append(jsonio.dumps({
                "k": row.k,
                "best_objective": row.best_objective,
                "scaled": row.scaled,
                "ratio": row.ratio,
            }))
    if not lines:
        raise ValidationError("optimize config needs 'k' or 'ks'")
    _write_text(args.output, "".join(lines))
    return 0


# ---------------------------------------------------------------------------
# SVG rendering.

def _f(x: float) -> str:
    return format(float(x), _FMT)


def _arc_commands(e: Arc):
    # SVG y-axis points down, so math-CCW arcs use sweep flag 0 on negated y.
    sweep_flag = 0 if e.turning == 1 else 1
    pieces = []
    sweep = e.sweep
    splits = max(1, math.ceil(sweep / math.pi - 1e-12))
    prev_t = 0.0
    for s in range(1, splits + 1):
        t = s / splits
        frac = sweep * (t - prev_t)
        end = e.point_at(t)
        large = 1 if frac > math.pi + 1e-12 else 0
        pieces.append(
            f"A {_f(e.radius)} {_f(e.radius)} 0 {large} {sweep_flag} {_f(end.x)} {_f(-end.y)}"
        )
        prev_t = t
    return pieces


def _curve_path(c: ArcCurve) -> str:
    start = c.edges[0].start
    cmds = [f"M {_f(start.x)} {_f(-start.y)}"]
    for e in c.edges:
        if isinstance(e, Segment):
            cmds.append(f"L {_f(e.end.x)} {_f(-e.end.y)}")
        else:
            cmds.extend(_arc_commands(e))
    if c.closed:
        cmds.append("Z")
    return " ".join(cmds)


def _curve_bbox(c: ArcCurve):
    xs, ys = [], []
    for e in c.edges:
        if isinstance(e, Arc):
            xs += [e.center.x - e.radius, e.center.x + e.radius]
            ys += [e.center.y - e.radius, e.center.y + e.radius]
        else:
            xs += [e.start.x, e.end.x]
            ys += [e.start.y, e.end.y]
    return min(xs), min(ys), max(xs), max(ys)


def _svg_document(body, bbox) -> str:
    x0, y0, x1, y1 = bbox
    pad = 0.05 * max(x1 - x0, y1 - y0, 1e-9)
    vb = (x0 - pad, -(y1 + pad), (x1 - x0) + 2 * pad, (y1 - y0) + 2 * pad)
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_f(vb[0])} {_f(vb[1])} {_f(vb[2])} {_f(vb[3])}">\n'
    )
    return head + "".join(body) + "</svg>\n"


def _polygon_curve(vertices) -> ArcCurve:
    from .arc_geometry import Point

    pts = [Point(float(x), float(y)) for x, y in vertices]
    edges = [Segment(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts))]
    return ArcCurve(tuple(edges), closed=True)


def render_svg(obj: dict) -> str:
    """Render a geometry artifact (curve, polygon, domain, cluster, chain) as SVG."""
    style = 'fill="none" stroke="black" stroke-width="0.01"'
    if "edges" in obj:
        curve = curve_from_dict(obj)
        return _svg_document(
            [f'<path {style} d="{_curve_path(curve)}"/>\n'], _curve_bbox(curve)
        )
    if "boundary" in obj:
        curve = curve_from_dict(obj["boundary"])
        return _svg_document(
            [f'<path {style} d="{_curve_path(curve)}"/>\n'], _curve_bbox(curve)
        )
    if "cells" in obj:
        cl = cluster_from_dict(obj)
        body = []
        container = _polygon_curve(cl.container.vertices)
        heavy = 'fill="none" stroke="black" stroke-width="0.02"'
        body.append(f'<path {heavy} d="{_curve_path(container)}"/>\n')
        for cell in cl.cells:
            body.append(f'<path {style} d="{_curve_path(cell.boundary)}"/>\n')
        return _svg_document(body, _curve_bbox(container))
    if "flavor" in obj:
        chain = chain_from_dict(obj)
        body = []
        pocket = pocket_outline(chain)
        body.append(
            f'<path fill="#cccccc" stroke="none" d="{_curve_path(pocket)}"/>\n'
        )
        for (cx, cy), r in zip(chain.centers, chain.radii):
            body.append(
                f'<circle cx="{_f(cx)}" cy="{_f(-cy)}" r="{_f(r)}" {style}/>\n'
            )
        xs = chain.centers[:, 0]
        ys = chain.centers[:, 1]
        bbox = (
            float(xs.min() - chain.radii.max()),
            float(min(ys.min() - chain.radii.max(), 0.0)),
            float(xs.max() + chain.radii.max()),
            float(ys.max() + chain.radii.max()),
        )
        return _svg_document(body, bbox)
    if "vertices" in obj:
        poly = polygon_from_dict(obj)
        curve = _polygon_curve(poly.vertices)
        return _svg_document(
            [f'<path {style} d="{_curve_path(curve)}"/>\n'], _curve_bbox(curve)
        )
    raise ValidationError("unknown geometry kind: expected curve, polygon, domain, cluster, or chain")


def _cmd_render(args) -> int:
    obj = _read_json(args.input)
    _write_text(args.output, render_svg(obj))
    return 0


# ---------------------------------------------------------------------------
# Argument parsing and dispatch.

def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cheegerlab", description=__doc__)
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads (fallback: CHEEGERLAB_THREADS, default 1)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cheeger", help="Cheeger constant of a convex polygon")
    c.add_argument("--input", required=True)
    c.add_argument("--output", required=True)
    c.add_argument("--tol", type=float, default=1e-13)
    c.set_defaults(fn=_cmd_cheeger)

    s = sub.add_parser("structure", help="class-A report for an arc domain")
    s.add_argument("--input", required=True)
    s.add_argument("--output", required=True)
    s.set_defaults(fn=_cmd_structure)

    h = sub.add_parser("hales", help="hexagonal inequality report for an arc domain")
    h.add_argument("--input", required=True)
    h.add_argument("--output", required=True)
    h.add_argument("--r-star", type=float, default=None)
    h.add_argument("--clamp-mode", choices=["scaled", "literal"], default="scaled")
    h.set_defaults(fn=_cmd_hales)

    ce = sub.add_parser("certificate", help="lower-bound certificate for a cluster")
    ce.add_argument("--input", required=True)
    ce.add_argument("--output", required=True)
    ce.add_argument("--clamp-mode", choices=["scaled", "literal"], default="scaled")
    ce.set_defaults(fn=_cmd_certificate)

    hc = sub.add_parser("honeycomb", help="build a honeycomb k-triangle or k-cell cluster")
    hc.add_argument("--l", type=int, default=None)
    hc.add_argument("--coords", default=None,
                    help="JSON list of axial coordinates for a k-cell")
    hc.add_argument("--unit-side", action="store_true",
                    help="unit side length instead of unit area")
    hc.add_argument("--output", required=True)
    hc.set_defaults(fn=_cmd_honeycomb)

    ch = sub.add_parser("chain", help="disk-chain bound report or randomized sweep")
    ch.add_argument("--input", required=True)
    ch.add_argument("--output", required=True)
    ch.add_argument("--mc-samples", type=int, default=10_000_000)
    ch.set_defaults(fn=_cmd_chain)

    op = sub.add_parser("optimize", help="power-diagram upper bounds for M_k")
    op.add_argument("--config", required=True)
    op.add_argument("--output", required=True)
    op.set_defaults(fn=_cmd_optimize)

    re = sub.add_parser("render", help="render a geometry JSON artifact as SVG")
    re.add_argument("--input", required=True)
    re.add_argument("--output", required=True)
    re.set_defaults(fn=_cmd_render)
    return p


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (SolverError, OptimizationError, GenerationError, AssertionError) as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
