"""Scene files: named geometric objects serialized as JSON.

A scene is ``{"objects": {"<name>": {"type": ..., ...}}}``. Rationals are
written as integers or "p/q" strings; JSON floats are rejected to keep the
toolkit exact. Deserialized staircase lines re-run full validation in the
constructor, so a tampered certificate cannot masquerade as a valid one.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .core import Pt2, Rat, rat, rat_str
from .errors import ParseError, UnknownObject
from .limits import OpenSegment, SegmentSet
from .ndim import GridRegionN
from .predicates import Polyline
from .regions import GridRegion, PointSet2, RectilinearPolygon
from .representation import HalfplaneFamily, StaircaseHalfplane
from .separation import SeparationCert, Side, StaircaseLine

__all__ = [
    "SceneObject",
    "load_scene",
    "scene_object",
    "pt_to_json",
    "pt_from_json",
    "region_to_json",
    "line_to_json",
    "line_from_json",
    "family_to_json",
    "family_from_json",
    "cert_to_json",
    "cert_from_json",
]

SceneObject = Union[
    GridRegion,
    RectilinearPolygon,
    PointSet2,
    Polyline,
    GridRegionN,
    StaircaseLine,
    SegmentSet,
    Pt2,
    list,  # sequence of grid regions
]


def pt_from_json(pair) -> Pt2:
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise ParseError(f"expected [x, y], got {pair!r}")
    return Pt2(rat(pair[0]), rat(pair[1]))


def pt_to_json(p: Pt2) -> list[str]:
    return [rat_str(p.x), rat_str(p.y)]


def _cells_from_json(raw, arity: int) -> frozenset:
    cells = set()
    for entry in raw:
        if not isinstance(entry, (list, tuple)) or len(entry) != arity:
            raise ParseError(f"bad cell index {entry!r}")
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in entry):
            raise ParseError(f"cell indices must be integers, got {entry!r}")
        cells.add(tuple(entry))
    return frozenset(cells)


def region_from_json(spec: dict) -> GridRegion:
    origin = pt_from_json(spec.get("origin", [0, 0]))
    cell = rat(spec.get("cell", 1))
    cells = frozenset((i, j) for i, j in _cells_from_json(spec.get("cells", []), 2))
    return GridRegion(cells, origin, cell)


def region_to_json(region: GridRegion) -> dict:
    return {
        "type": "grid_region",
        "origin": pt_to_json(region.origin),
        "cell": rat_str(region.cell),
        "cells": [list(c) for c in sorted(region.cells)],
    }


def line_from_json(spec: dict) -> StaircaseLine:
    vertices = tuple(pt_from_json(v) for v in spec.get("vertices", []))
    tail = spec.get("tail")
    head = spec.get("head")
    for d in (tail, head):
        if (
            not isinstance(d, (list, tuple))
            or len(d) != 2
            or not all(isinstance(v, int) for v in d)
        ):
            raise ParseError(f"bad ray direction {d!r}")
    return StaircaseLine(vertices, tuple(tail), tuple(head))


def line_to_json(line: StaircaseLine) -> dict:
    return {
        "type": "staircase_line",
        "vertices": [pt_to_json(v) for v in line.vertices],
        "tail": list(line.tail_dir),
        "head": list(line.head_dir),
    }


def family_to_json(family: HalfplaneFamily) -> dict:
    return {
        "type": "halfplane_family",
        "halfplanes": [
            {"line": line_to_json(h.line), "side": h.side.value}
            for h in family.halfplanes
        ],
    }


def family_from_json(spec: dict) -> HalfplaneFamily:
    out = []
    for h in spec.get("halfplanes", []):
        side = _side_from_json(h.get("side"))
        out.append(StaircaseHalfplane(line_from_json(h.get("line", {})), side))
    return HalfplaneFamily(tuple(out))


def _side_from_json(raw) -> Side:
    try:
        side = Side(raw)
    except ValueError:
        raise ParseError(f"bad side {raw!r}") from None
    if side == Side.ON:
        raise ParseError("halfplane side cannot be 'on'")
    return side


def cert_to_json(cert: SeparationCert) -> dict:
    return {
        "type": "separation_certificate",
        "line": line_to_json(cert.line),
        "side_a": cert.side_a.value,
        "side_b": cert.side_b.value,
        "kind": cert.kind,
        "pitch": rat_str(cert.pitch),
    }


def cert_from_json(spec: dict) -> SeparationCert:
    try:
        side_a = Side(spec.get("side_a"))
        side_b = Side(spec.get("side_b"))
    except ValueError:
        raise ParseError("bad certificate sides") from None
    return SeparationCert(
        line=line_from_json(spec.get("line", {})),
        side_a=side_a,
        side_b=side_b,
        kind=str(spec.get("kind", "unknown")),
        pitch=rat(spec.get("pitch", 1)),
    )


def _segments_from_json(spec: dict) -> SegmentSet:
    segs = []
    for s in spec.get("segments", []):
        segs.append(
            OpenSegment(
                pt_from_json(s.get("p")),
                pt_from_json(s.get("q")),
                bool(s.get("include_p", True)),
                bool(s.get("include_q", True)),
            )
        )
    return SegmentSet(tuple(segs))


def _parse_object(name: str, spec, objects: dict) -> SceneObject:
    if not isinstance(spec, dict):
        raise ParseError(f"object {name!r} must be a JSON object")
    kind = spec.get("type")
    if kind == "grid_region":
        return region_from_json(spec)
    if kind == "polygon":
        return RectilinearPolygon(
            tuple(pt_from_json(v) for v in spec.get("vertices", []))
        )
    if kind == "points":
        return PointSet2(frozenset(pt_from_json(v) for v in spec.get("points", [])))
    if kind == "point":
        return pt_from_json(spec.get("at"))
    if kind == "polyline":
        return Polyline(tuple(pt_from_json(v) for v in spec.get("vertices", [])))
    if kind == "grid_region_n":
        dim = spec.get("dim")
        if not isinstance(dim, int) or isinstance(dim, bool):
            raise ParseError(f"object {name!r} needs an integer dim")
        return GridRegionN(dim, _cells_from_json(spec.get("cells", []), dim))
    if kind == "staircase_line":
        return line_from_json(spec)
    if kind == "segments":
        return _segments_from_json(spec)
    if kind == "sequence":
        items = []
        for ref in spec.get("items", []):
            if ref not in objects:
                raise UnknownObject(
                    f"sequence {name!r} references undefined object {ref!r}"
                )
            target = objects[ref]
            if not isinstance(target, GridRegion):
                raise ParseError(
                    f"sequence {name!r} item {ref!r} is not a grid_region"
                )
            items.append(target)
        return items
    raise ParseError(f"object {name!r} has unknown type {kind!r}")


def load_scene(path) -> dict[str, SceneObject]:
    """Parse a scene file into named objects. Sequences may reference only
    objects defined earlier in the file."""
    try:
        raw = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ParseError(f"cannot read scene file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"scene file {path} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict) or not isinstance(raw.get("objects"), dict):
        raise ParseError("scene file must be {\"objects\": {...}}")
    objects: dict[str, SceneObject] = {}
    for name, spec in raw["objects"].items():
        objects[name] = _parse_object(name, spec, objects)
    return objects


def scene_object(scene: dict, name: str) -> SceneObject:
    if name not in scene:
        raise UnknownObject(f"scene has no object named {name!r}")
    return scene[name]
