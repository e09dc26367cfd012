"""Deterministic SVG rendering of scene objects.

Output depends only on the input objects: cells are drawn in sorted order,
coordinates are formatted as fixed six-decimal strings derived by integer
arithmetic, and no timestamps or random ids appear. Rerunning a render on
the same scene yields byte-identical output.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .core import Pt2, Rat
from .predicates import Polyline
from .regions import GridRegion, PointSet2
from .separation import StaircaseLine

__all__ = ["render_svg"]

_PALETTE = [
    "#4878a8",
    "#a85448",
    "#48a878",
    "#8458a8",
    "#a89048",
    "#4898a8",
]

_VIEW_W = Rat(640)
_MARGIN_FRAC = Rat(1, 10)


def _fmt(x: Rat) -> str:
    """Fixed 6-decimal representation, floor-rounded, via integer math."""
    scaled = x * 10**6
    n = scaled.numerator // scaled.denominator
    sign = "-" if n < 0 else ""
    n = abs(n)
    return f"{sign}{n // 10**6}.{n % 10**6:06d}"


class _View:
    def __init__(self, xmin: Rat, xmax: Rat, ymin: Rat, ymax: Rat):
        span_x = max(xmax - xmin, Rat(1, 1000))
        span_y = max(ymax - ymin, Rat(1, 1000))
        mx = span_x * _MARGIN_FRAC
        my = span_y * _MARGIN_FRAC
        self.xmin = xmin - mx
        self.xmax = xmax + mx
        self.ymin = ymin - my
        self.ymax = ymax + my
        self.scale = _VIEW_W / (self.xmax - self.xmin)
        self.height = (self.ymax - self.ymin) * self.scale

    def px(self, x: Rat) -> str:
        return _fmt((x - self.xmin) * self.scale)

    def py(self, y: Rat) -> str:
        return _fmt((self.ymax - y) * self.scale)  # SVG y grows downward


def _object_bounds(obj) -> Iterable[tuple[Rat, Rat]]:
    if isinstance(obj, GridRegion):
        if obj.cells:
            r = obj.bbox()
            yield (r.xmin, r.ymin)
            yield (r.xmax, r.ymax)
    elif isinstance(obj, Polyline):
        for v in obj.vertices:
            yield (v.x, v.y)
    elif isinstance(obj, PointSet2):
        for p in obj.points:
            yield (p.x, p.y)
    elif isinstance(obj, StaircaseLine):
        for v in obj.vertices:
            yield (v.x, v.y)
    elif isinstance(obj, Pt2):
        yield (obj.x, obj.y)


def _render_region(view: _View, region: GridRegion, color: str) -> list[str]:
    out = []
    for ij in sorted(region.cells):
        r = region.cell_rect(ij)
        out.append(
            f'<rect x="{view.px(r.xmin)}" y="{view.py(r.ymax)}" '
            f'width="{_fmt((r.xmax - r.xmin) * view.scale)}" '
            f'height="{_fmt((r.ymax - r.ymin) * view.scale)}" '
            f'fill="{color}" fill-opacity="0.45" stroke="{color}" '
            f'stroke-width="0.5"/>'
        )
    return out


def _polyline_points(view: _View, pts: Sequence[Pt2]) -> str:
    return " ".join(f"{view.px(p.x)},{view.py(p.y)}" for p in pts)


def _render_polyline(view: _View, g: Polyline, color: str) -> list[str]:
    if len(g.vertices) == 1:
        v = g.vertices[0]
        return [
            f'<circle cx="{view.px(v.x)}" cy="{view.py(v.y)}" r="3" '
            f'fill="{color}"/>'
        ]
    return [
        f'<polyline points="{_polyline_points(view, g.vertices)}" '
        f'fill="none" stroke="{color}" stroke-width="2"/>'
    ]


def _ray_end(view: _View, start: Pt2, direction: tuple[int, int]) -> Pt2:
    dx, dy = direction
    x = view.xmax if dx > 0 else view.xmin if dx < 0 else start.x
    y = view.ymax if dy > 0 else view.ymin if dy < 0 else start.y
    return Pt2(x if dx else start.x, y if dy else start.y)


def _render_line(view: _View, line: StaircaseLine, color: str) -> list[str]:
    out = []
    tail_end = _ray_end(view, line.vertices[0], line.tail_dir)
    head_end = _ray_end(view, line.vertices[-1], line.head_dir)
    pts = [tail_end, *line.vertices, head_end]
    out.append(
        f'<polyline points="{_polyline_points(view, pts)}" fill="none" '
        f'stroke="{color}" stroke-width="2"/>'
    )
    # arrowhead marking the head ray direction
    hx, hy = line.head_dir
    tip = head_end
    left = Pt2(tip.x - 8 * hx / view.scale + 4 * hy / view.scale,
               tip.y - 8 * hy / view.scale - 4 * hx / view.scale)
    right = Pt2(tip.x - 8 * hx / view.scale - 4 * hy / view.scale,
                tip.y - 8 * hy / view.scale + 4 * hx / view.scale)
    out.append(
        f'<polygon points="{_polyline_points(view, [tip, left, right])}" '
        f'fill="{color}"/>'
    )
    return out


def _render_points(view: _View, ps: PointSet2, color: str) -> list[str]:
    return [
        f'<circle cx="{view.px(p.x)}" cy="{view.py(p.y)}" r="3" fill="{color}"/>'
        for p in sorted(ps.points)
    ]


def _grid_lines(view: _View, pitch: Rat, origin: Pt2) -> list[str]:
    out = []
    k0 = _ceil_div(view.xmin - origin.x, pitch)
    x = origin.x + k0 * pitch
    while x <= view.xmax:
        out.append(
            f'<line x1="{view.px(x)}" y1="{view.py(view.ymin)}" '
            f'x2="{view.px(x)}" y2="{view.py(view.ymax)}" '
            f'stroke="#cccccc" stroke-width="0.5"/>'
        )
        x += pitch
    k0 = _ceil_div(view.ymin - origin.y, pitch)
    y = origin.y + k0 * pitch
    while y <= view.ymax:
        out.append(
            f'<line x1="{view.px(view.xmin)}" y1="{view.py(y)}" '
            f'x2="{view.px(view.xmax)}" y2="{view.py(y)}" '
            f'stroke="#cccccc" stroke-width="0.5"/>'
        )
        y += pitch
    return out


def _ceil_div(x: Rat, pitch: Rat) -> int:
    q = x / pitch
    return -((-q.numerator) // q.denominator)


def render_svg(named_objects: Sequence[tuple[str, object]]) -> str:
    """Render (name, object) pairs to a standalone SVG document.

    Colors follow the fixed palette in input order; the viewport is the
    common bounding box with a 10% margin; background lattice lines use the
    first region's pitch when a region is present.
    """
    bounds = [b for _, obj in named_objects for b in _object_bounds(obj)]
    if not bounds:
        bounds = [(Rat(0), Rat(0)), (Rat(1), Rat(1))]
    xs = [b[0] for b in bounds]
    ys = [b[1] for b in bounds]
    view = _View(min(xs), max(xs), min(ys), max(ys))

    body: list[str] = []
    grid_source = next(
        (obj for _, obj in named_objects if isinstance(obj, GridRegion) and obj.cells),
        None,
    )
    if grid_source is not None:
        body += _grid_lines(view, grid_source.cell, grid_source.origin)
    for k, (name, obj) in enumerate(named_objects):
        color = _PALETTE[k % len(_PALETTE)]
        body.append(f"<!-- {name} -->")
        if isinstance(obj, GridRegion):
            body += _render_region(view, obj, color)
        elif isinstance(obj, Polyline):
            body += _render_polyline(view, obj, color)
        elif isinstance(obj, StaircaseLine):
            body += _render_line(view, obj, color)
        elif isinstance(obj, PointSet2):
            body += _render_points(view, obj, color)
        elif isinstance(obj, Pt2):
            body.append(
                f'<circle cx="{view.px(obj.x)}" cy="{view.py(obj.y)}" r="4" '
                f'fill="{color}" stroke="#222222"/>'
            )
        else:
            body.append(f"<!-- {name}: unrenderable {type(obj).__name__} -->")
    height = _fmt(view.height)
    width = _fmt(_VIEW_W)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">\n'
        + "\n".join(body)
        + "\n</svg>\n"
    )
