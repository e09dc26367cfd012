"""Command-line interface: scene-file driven reports and figures.

Every subcommand reads named objects from a JSON scene, runs one toolkit
operation, and emits a JSON report (sorted keys, stable layout) so reruns
are byte-identical. Exit status: 0 success, 1 parse/usage errors, 2 violated
mathematical preconditions. Set STAIRCASE_LOG=debug|info to trace progress
on stderr without touching report bytes.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from .core import Pt2, rat, rat_str
from .errors import GeometryError, ParseError
from .hull import ortho_hull, ortho_hull_points
from .limits import (
    SegmentSet,
    blaschke_select,
    closure_preserves,
    hausdorff,
    path_convergence_report,
    shortest_ortho_path,
)
from .ndim import GridRegionN, check_equivalences, is_ortho_convex_n, ortho_hull_n
from .predicates import Polyline, check_sandwich, classify_monotone, is_ortho_convex_path
from .regions import (
    GridRegion,
    PointSet2,
    RectilinearPolygon,
    is_ortho_convex_region,
    is_path_connected,
    polygon_to_region,
)
from .representation import four_chain_decomposition, intersect_family
from .scene import (
    cert_from_json,
    cert_to_json,
    family_from_json,
    family_to_json,
    line_to_json,
    load_scene,
    pt_to_json,
    region_to_json,
    scene_object,
)
from .separation import separate_point, separate_sets, verify_certificate
from .svg import render_svg

log = logging.getLogger("orthoconvex")


def _parse_point(scene: dict, value: str) -> Pt2:
    if "," in value:
        parts = value.split(",")
        if len(parts) != 2:
            raise ParseError(f"bad point literal {value!r}, expected 'x,y'")
        return Pt2(rat(parts[0].strip()), rat(parts[1].strip()))
    obj = scene_object(scene, value)
    if not isinstance(obj, Pt2):
        raise ParseError(f"object {value!r} is not a point")
    return obj


def _parse_int_list(value: str) -> list[int]:
    try:
        return [int(tok) for tok in value.split(",") if tok.strip()]
    except ValueError as exc:
        raise ParseError(f"bad integer list {value!r}") from exc


def _parse_rat_list(value: str) -> list:
    return [rat(tok.strip()) for tok in value.split(",") if tok.strip()]


def _region_report(region: GridRegion) -> dict:
    return {
        "kind": "grid_region",
        "cells": len(region.cells),
        "path_connected": is_path_connected(region),
        "ortho_convex": is_ortho_convex_region(region),
    }


def _polyline_report(g: Polyline) -> dict:
    mc = classify_monotone(g)
    report = {
        "kind": "polyline",
        "vertices": len(g.vertices),
        "monotone": mc.value if mc else None,
        "ortho_convex_path": is_ortho_convex_path(g),
    }
    if mc is not None:
        s = check_sandwich(g)
        report["sandwich"] = {
            "norm2": [rat_str(s.norm2_lo), rat_str(s.norm2_hi)],
            "length": [rat_str(s.length_lo), rat_str(s.length_hi)],
            "norm1": rat_str(s.norm1),
            "lower_ok": s.lower_ok,
            "upper_ok": s.upper_ok,
            "lower_strict": s.lower_strict,
            "upper_strict": s.upper_strict,
        }
    return report


def _cmd_check(scene: dict, args) -> dict:
    obj = scene_object(scene, args.object)
    if isinstance(obj, GridRegion):
        return _region_report(obj)
    if isinstance(obj, RectilinearPolygon):
        region = polygon_to_region(obj, rat(args.cell))
        report = _region_report(region)
        report["kind"] = "polygon"
        report["cell"] = rat_str(rat(args.cell))
        return report
    if isinstance(obj, Polyline):
        return _polyline_report(obj)
    if isinstance(obj, GridRegionN):
        eq = check_equivalences(obj)
        return {
            "kind": "grid_region_n",
            "dim": obj.dim,
            "cells": len(obj.cells),
            "ortho_convex": is_ortho_convex_n(obj),
            "equivalences": eq,
        }
    if isinstance(obj, SegmentSet):
        rep = closure_preserves(obj)
        return {
            "kind": "segments",
            "segments": len(obj.segments),
            "ortho_convex": rep.original_ortho,
            "closure_ortho_convex": rep.closure_ortho,
            "closure_preserves": rep.preserved,
        }
    raise ParseError(f"cannot check object of type {type(obj).__name__}")


def _cmd_hull(scene: dict, args) -> dict:
    obj = scene_object(scene, args.object)
    if isinstance(obj, RectilinearPolygon):
        obj = polygon_to_region(obj, rat(args.cell))
    if isinstance(obj, PointSet2):
        result = ortho_hull_points(obj, rat(args.cell))
    elif isinstance(obj, GridRegion):
        result = ortho_hull(obj)
    else:
        raise ParseError(f"cannot hull object of type {type(obj).__name__}")
    region = result.region
    return {
        "kind": "hull",
        "iterations": result.iterations,
        "cells": [list(c) for c in sorted(region.cells)],
        "cell_count": len(region.cells),
        "origin": pt_to_json(region.origin),
        "cell": rat_str(region.cell),
        "ortho_convex_weak_rows_cols": True,
    }


def _cmd_hull_n(scene: dict, args) -> dict:
    obj = scene_object(scene, args.object)
    if not isinstance(obj, GridRegionN):
        raise ParseError(f"object {args.object!r} is not a grid_region_n")
    hull = ortho_hull_n(obj)
    return {
        "kind": "hull_n",
        "dim": hull.dim,
        "cells": [list(c) for c in sorted(hull.cells)],
        "cell_count": len(hull.cells),
    }


def _require_region(scene: dict, name: str) -> GridRegion:
    obj = scene_object(scene, name)
    if not isinstance(obj, GridRegion):
        raise ParseError(f"object {name!r} is not a grid_region")
    return obj


def _cmd_separate(scene: dict, args) -> dict:
    a = _require_region(scene, args.a)
    b = _require_region(scene, args.b)
    cert = separate_sets(a, b)
    return {
        "kind": "separation",
        "certificate": cert_to_json(cert),
        "verification": verify_certificate(cert, a, b),
    }


def _cmd_separate_point(scene: dict, args) -> dict:
    region = _require_region(scene, args.set)
    p = _parse_point(scene, args.point)
    cert = separate_point(region, p)
    return {
        "kind": "point_separation",
        "point": pt_to_json(p),
        "certificate": cert_to_json(cert),
        "verification": verify_certificate(cert, region, p),
    }


def _cmd_represent(scene: dict, args) -> dict:
    region = _require_region(scene, args.object)
    family = four_chain_decomposition(region)
    return {"kind": "representation", "family": family_to_json(family)}


def _cmd_intersect(scene: dict, args) -> dict:
    try:
        raw = json.loads(Path(args.halfplanes).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read halfplane file: {exc}") from exc
    spec = raw.get("family", raw) if isinstance(raw, dict) else None
    if spec is None:
        raise ParseError("halfplane file must hold a family object")
    family = family_from_json(spec)
    parts = args.origin.split(",")
    if len(parts) != 2:
        raise ParseError(f"bad origin {args.origin!r}")
    origin = Pt2(rat(parts[0]), rat(parts[1]))
    window = _parse_int_list(args.window)
    if len(window) != 4:
        raise ParseError("window must be 'imin,imax,jmin,jmax'")
    region = intersect_family(
        family, origin, rat(args.cell), (window[0], window[1]), (window[2], window[3])
    )
    return {
        "kind": "intersection",
        "cells": [list(c) for c in sorted(region.cells)],
        "cell_count": len(region.cells),
    }


def _carrier(scene: dict, name: str):
    obj = scene_object(scene, name)
    if isinstance(obj, (GridRegion, PointSet2, Polyline)):
        return obj
    raise ParseError(f"object {name!r} is not a distance carrier")


def _cmd_hausdorff(scene: dict, args) -> dict:
    a = _carrier(scene, args.a)
    b = _carrier(scene, args.b)
    hd = hausdorff(a, b, rat(args.refine))
    return {
        "kind": "hausdorff",
        "lo": rat_str(hd.lo),
        "hi": rat_str(hd.hi),
        "refine": rat_str(hd.refine),
    }


def _cmd_geodesic(scene: dict, args) -> dict:
    region = _require_region(scene, args.region)
    a = _parse_point(scene, args.a)
    b = _parse_point(scene, args.b)
    path = shortest_ortho_path(region, a, b)
    mc = classify_monotone(path)
    return {
        "kind": "geodesic",
        "vertices": [pt_to_json(v) for v in path.vertices],
        "monotone": mc.value if mc else None,
    }


def _cmd_converge(scene: dict, args) -> dict:
    region = _require_region(scene, args.region)
    a = _parse_point(scene, args.a)
    b = _parse_point(scene, args.b)
    ns = _parse_int_list(args.ns)
    report = path_convergence_report(region, a, b, ns, rat(args.refine_factor))
    report["kind"] = "convergence"
    return report


def _cmd_blaschke(scene: dict, args) -> dict:
    seq = scene_object(scene, args.sequence)
    if not isinstance(seq, list):
        raise ParseError(f"object {args.sequence!r} is not a sequence")
    schedule = _parse_rat_list(args.schedule)
    result = blaschke_select(seq, schedule)
    return {
        "kind": "selection",
        "indices": list(result.indices),
        "count": len(result.indices),
        "tol_final": rat_str(result.tol_final),
        "pairwise_bound": rat_str(result.pairwise_bound),
        "history": list(result.history),
        "spot_checks": list(result.spot_checks),
    }


def _cmd_verify(scene: dict, args) -> dict:
    try:
        raw = json.loads(Path(args.cert).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read certificate file: {exc}") from exc
    spec = raw.get("certificate", raw) if isinstance(raw, dict) else None
    if spec is None:
        raise ParseError("certificate file must hold a certificate object")
    cert = cert_from_json(spec)
    a_obj = scene_object(scene, args.a) if "," not in args.a else _parse_point(scene, args.a)
    b_obj = scene_object(scene, args.b) if "," not in args.b else _parse_point(scene, args.b)
    return {
        "kind": "verification",
        "line": line_to_json(cert.line),
        "result": verify_certificate(cert, a_obj, b_obj),
    }


def _cmd_render(scene: dict, args) -> str:
    names = [n.strip() for n in args.objects.split(",") if n.strip()]
    items = [(n, scene_object(scene, n)) for n in names]
    return render_svg(items)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthoconvex",
        description="exact computations with orthogonally convex sets",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--scene", required=True, help="scene JSON file")
        p.add_argument("--out", help="write the report here instead of stdout")
        return p

    p = add("check", help="predicates for one object")
    p.add_argument("--object", required=True)
    p.add_argument("--cell", default="1", help="tiling pitch for polygons")

    p = add("hull", help="orthogonal convex hull of a region/polygon/points")
    p.add_argument("--object", required=True)
    p.add_argument("--cell", default="1")

    p = add("hull-n", help="hull on an n-dimensional lattice")
    p.add_argument("--object", required=True)

    p = add("separate", help="staircase line separating two regions")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = add("separate-point", help="staircase line separating a point from a region")
    p.add_argument("--set", required=True)
    p.add_argument("--point", required=True, help="'x,y' literal or point object")

    p = add("represent", help="four-chain halfplane family of a region")
    p.add_argument("--object", required=True)

    p = add("intersect", help="materialize a halfplane family on a lattice window")
    p.add_argument("--halfplanes", required=True, help="JSON family file")
    p.add_argument("--origin", default="0,0")
    p.add_argument("--cell", default="1")
    p.add_argument("--window", required=True, help="imin,imax,jmin,jmax")

    p = add("hausdorff", help="certified Hausdorff distance interval")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--refine", default="1/16")

    p = add("geodesic", help="shortest path inside a region")
    p.add_argument("--region", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = add("converge", help="geodesic convergence experiment")
    p.add_argument("--region", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--ns", default="1,2,4,8,16,32,64")
    p.add_argument("--refine-factor", default="1/4")

    p = add("blaschke", help="signature-stable subsequence selection")
    p.add_argument("--sequence", required=True)
    p.add_argument("--schedule", default="1,1/2,1/4,1/8")

    p = add("verify", help="re-check a separation certificate")
    p.add_argument("--cert", required=True, help="certificate JSON file")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = add("render", help="deterministic SVG figure of scene objects")
    p.add_argument(
        "--objects", "--layers", dest="objects", required=True,
        help="comma-separated names",
    )

    return parser


_HANDLERS = {
    "check": _cmd_check,
    "hull": _cmd_hull,
    "hull-n": _cmd_hull_n,
    "separate": _cmd_separate,
    "separate-point": _cmd_separate_point,
    "represent": _cmd_represent,
    "intersect": _cmd_intersect,
    "hausdorff": _cmd_hausdorff,
    "geodesic": _cmd_geodesic,
    "converge": _cmd_converge,
    "blaschke": _cmd_blaschke,
    "verify": _cmd_verify,
    "render": _cmd_render,
}


def _emit(payload, out_path) -> None:
    if isinstance(payload, str):
        text = payload
    else:
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    level = os.environ.get("STAIRCASE_LOG")
    if level:
        logging.basicConfig(
            level=getattr(logging, level.upper(), logging.INFO), stream=sys.stderr
        )
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        scene = load_scene(args.scene)
        log.info("scene %s: %d object(s)", args.scene, len(scene))
        payload = _HANDLERS[args.command](scene, args)
        _emit(payload, args.out)
        return 0
    except GeometryError as exc:
        _emit(exc.payload(), None)
        return exc.exit_status


if __name__ == "__main__":
    sys.exit(main())
