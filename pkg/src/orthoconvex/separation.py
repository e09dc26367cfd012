"""Monotone staircase lines and constructive separation certificates.

A staircase line is an unbounded simple curve made of axis-parallel segments
plus two infinite axis-parallel rays, monotone as a whole: traversed from the
tail ray to the head ray, x never decreases while y never decreases (rising)
or never increases (falling), up to a traversal reversal that is normalized
away internally. Such a curve splits the plane into two sides; rotating
coordinates by 45 degrees turns the curve into the graph of a piecewise
slope +-1 function, which makes the side query a single binary search over
exact rationals.

Separation constructions follow a fixed recipe: pick a grid pitch s from the
exact distance between the inputs (s^2 in [3d^2/32, d^2/8], so d/4 < s <
d/2), thicken one input to the grid cells it touches, and try a small fixed
family of candidate lines along that neighborhood's boundary, returning the
first candidate that passes exhaustive verification.
"""

from __future__ import annotations

import enum
from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .core import Pt2, Rat, rat_sqrt_lower
from .errors import (
    ConstructionFailed,
    EmptyInput,
    NotAxisAligned,
    NotDisjoint,
    NotMonotone,
    NotOrthoConvex,
    NotPathConnected,
    PointInside,
)
from .regions import (
    GridRegion,
    is_ortho_convex_region,
    is_path_connected,
    point_region_distance_sq,
    region_distance_sq,
    touching_index_range,
)

__all__ = [
    "Side",
    "StaircaseLine",
    "side_of",
    "SeparationCert",
    "separate_point",
    "separate_sets",
    "verify_certificate",
]

_AXIS_DIRS = {(1, 0), (-1, 0), (0, 1), (0, -1)}


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    ON = "on"


def _flip(side: Side) -> Side:
    if side == Side.LEFT:
        return Side.RIGHT
    if side == Side.RIGHT:
        return Side.LEFT
    return side


@dataclass(frozen=True)
class StaircaseLine:
    """Vertices of the finite part plus the two ray directions.

    ``tail_dir`` points from ``vertices[0]`` away to infinity along the tail
    ray; ``head_dir`` likewise from ``vertices[-1]``. The traversal used for
    orientation runs tail ray -> vertices -> head ray.
    """

    vertices: tuple[Pt2, ...]
    tail_dir: tuple[int, int]
    head_dir: tuple[int, int]
    _rising: bool = field(init=False, compare=False, repr=False)
    _reversed: bool = field(init=False, compare=False, repr=False)
    _u: tuple = field(init=False, compare=False, repr=False)
    _w: tuple = field(init=False, compare=False, repr=False)
    _slopes: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if not self.vertices:
            raise NotAxisAligned("staircase line needs at least one vertex")
        if self.tail_dir not in _AXIS_DIRS or self.head_dir not in _AXIS_DIRS:
            raise NotAxisAligned(
                f"ray directions must be unit axis vectors, got "
                f"{self.tail_dir} and {self.head_dir}"
            )
        for k in range(len(self.vertices) - 1):
            d = self.vertices[k + 1] - self.vertices[k]
            if d == Pt2(Rat(0), Rat(0)):
                raise NotAxisAligned(f"repeated staircase vertex at index {k}")
            if d.x != 0 and d.y != 0:
                raise NotAxisAligned(f"staircase edge {k} is not axis-parallel")
        self._init_canonical()

    def _motions(
        self, vertices: tuple[Pt2, ...], tail, head
    ) -> list[tuple[int, int]]:
        out = [(-tail[0], -tail[1])]
        for k in range(len(vertices) - 1):
            d = vertices[k + 1] - vertices[k]
            out.append((_sign(d.x), _sign(d.y)))
        out.append(head)
        return out

    def _init_canonical(self) -> None:
        vertices, tail, head = self.vertices, self.tail_dir, self.head_dir
        motions = self._motions(vertices, tail, head)
        sx = _consistent_sign(m[0] for m in motions)
        sy = _consistent_sign(m[1] for m in motions)
        if sx is None or sy is None:
            raise NotMonotone("staircase traversal mixes opposite directions")
        reversed_ = sx == -1
        if reversed_:
            vertices = tuple(reversed(vertices))
            tail, head = head, tail
            motions = self._motions(vertices, tail, head)
            sx, sy = -sx, -sy
        rising = sy >= 0
        if rising:
            to_uw = lambda p: (p.x + p.y, p.x - p.y)
        else:
            to_uw = lambda p: (p.x - p.y, p.x + p.y)
        us, ws = [], []
        for v in vertices:
            u, w = to_uw(v)
            us.append(u)
            ws.append(w)
        assert all(us[k] < us[k + 1] for k in range(len(us) - 1))
        # horizontal motion advances w with u, vertical motion opposes it
        slopes = [1 if m[1] == 0 else -1 for m in motions]
        object.__setattr__(self, "_rising", rising)
        object.__setattr__(self, "_reversed", reversed_)
        object.__setattr__(self, "_u", tuple(us))
        object.__setattr__(self, "_w", tuple(ws))
        object.__setattr__(self, "_slopes", tuple(slopes))

    def side_of(self, p: Pt2) -> Side:
        if self._rising:
            u, w = p.x + p.y, p.x - p.y
        else:
            u, w = p.x - p.y, p.x + p.y
        us, ws, slopes = self._u, self._w, self._slopes
        if u <= us[0]:
            w_line = ws[0] + (u - us[0]) * slopes[0]
        elif u >= us[-1]:
            w_line = ws[-1] + (u - us[-1]) * slopes[-1]
        else:
            k = bisect_right(us, u) - 1
            w_line = ws[k] + (u - us[k]) * slopes[k + 1]
        if w == w_line:
            return Side.ON
        if self._rising:
            side = Side.LEFT if w < w_line else Side.RIGHT
        else:
            side = Side.LEFT if w > w_line else Side.RIGHT
        return _flip(side) if self._reversed else side


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _consistent_sign(values: Iterable[int]) -> Optional[int]:
    seen = {v for v in values if v != 0}
    if len(seen) > 1:
        return None
    return seen.pop() if seen else 0


def side_of(line: StaircaseLine, p: Pt2) -> Side:
    """Which side of the staircase line the point is on (exact)."""
    return line.side_of(p)


@dataclass(frozen=True)
class SeparationCert:
    """A staircase line with the verified sides of the two inputs."""

    line: StaircaseLine
    side_a: Side
    side_b: Side
    kind: str
    pitch: Rat


# which bbox corner the L-line sits at -> (tail_dir, head_dir)
_CORNER_DIRS = {
    "ne": ((-1, 0), (0, -1)),
    "se": ((-1, 0), (0, 1)),
    "sw": ((1, 0), (0, 1)),
    "nw": ((0, -1), (1, 0)),
}


def _corner_line(corner: Pt2, which: str) -> StaircaseLine:
    tail, head = _CORNER_DIRS[which]
    return StaircaseLine((corner,), tail, head)


def _dedup(vertices: list[Pt2]) -> tuple[Pt2, ...]:
    out: list[Pt2] = []
    for v in vertices:
        if not out or out[-1] != v:
            out.append(v)
    return tuple(out)


def _profile_chain(
    origin: Pt2,
    pitch: Rat,
    cols: dict[int, tuple[int, int]],
    which: str,
) -> StaircaseLine:
    """Boundary chain line of a column profile.

    ``cols`` maps each column index (a contiguous range) to its (bottom,
    top) edge indices, bottom < top. Ortho-convexity of the source makes the
    top profile unimodal and the bottom profile anti-unimodal, which the
    walks below assert.
    """
    imin, imax = min(cols), max(cols)
    assert all(i in cols for i in range(imin, imax + 1)), "column gap"

    def X(i: int) -> Rat:
        return origin.x + i * pitch

    def Y(l: int) -> Rat:
        return origin.y + l * pitch

    tops = {i: cols[i][1] for i in cols}
    bots = {i: cols[i][0] for i in cols}

    if which == "ne":
        ty = max(tops.values())
        i2 = max(i for i in cols if tops[i] == ty)
        h = ty
        verts = [Pt2(X(i2 + 1), Y(ty))]
        for i in range(i2 + 1, imax + 1):
            t = tops[i]
            assert t <= h, "top profile not unimodal"
            if t < h:
                verts += [Pt2(X(i), Y(h)), Pt2(X(i), Y(t))]
                h = t
        verts.append(Pt2(X(imax + 1), Y(h)))
        return StaircaseLine(_dedup(verts), (-1, 0), (0, -1))
    if which == "se":
        by = min(bots.values())
        i2 = max(i for i in cols if bots[i] == by)
        h = by
        verts = [Pt2(X(i2 + 1), Y(by))]
        for i in range(i2 + 1, imax + 1):
            b = bots[i]
            assert b >= h, "bottom profile not anti-unimodal"
            if b > h:
                verts += [Pt2(X(i), Y(h)), Pt2(X(i), Y(b))]
                h = b
        verts.append(Pt2(X(imax + 1), Y(h)))
        return StaircaseLine(_dedup(verts), (-1, 0), (0, 1))
    if which == "sw":
        by = min(bots.values())
        i1 = min(i for i in cols if bots[i] == by)
        h = by
        verts = [Pt2(X(i1), Y(by))]
        for i in range(i1 - 1, imin - 1, -1):
            b = bots[i]
            assert b >= h, "bottom profile not anti-unimodal"
            if b > h:
                verts += [Pt2(X(i + 1), Y(h)), Pt2(X(i + 1), Y(b))]
                h = b
        verts.append(Pt2(X(imin), Y(h)))
        return StaircaseLine(_dedup(verts), (1, 0), (0, 1))
    if which == "nw":
        ty = max(tops.values())
        i1 = min(i for i in cols if tops[i] == ty)
        h = tops[imin]
        verts = [Pt2(X(imin), Y(h))]
        for i in range(imin + 1, i1 + 1):
            t = tops[i]
            assert t >= h, "top profile not unimodal"
            if t > h:
                verts += [Pt2(X(i), Y(h)), Pt2(X(i), Y(t))]
                h = t
        return StaircaseLine(_dedup(verts), (0, -1), (1, 0))
    raise ValueError(f"unknown chain {which!r}")


def region_column_profile(region: GridRegion) -> dict[int, tuple[int, int]]:
    """Per-column (bottom edge, top edge) index pairs of a region's cells."""
    cols: dict[int, tuple[int, int]] = {}
    for i, j in region.cells:
        lo, hi = cols.get(i, (j, j + 1))
        cols[i] = (min(lo, j), max(hi, j + 1))
    return cols


def _classify_side(
    line: StaircaseLine, pts: Iterable[Pt2]
) -> Optional[Side]:
    """The single strict side all points lie on, or None."""
    result: Optional[Side] = None
    for p in pts:
        s = line.side_of(p)
        if s == Side.ON:
            return None
        if result is None:
            result = s
        elif s != result:
            return None
    return result


def _try_certificate(
    line: StaircaseLine,
    a_points: Sequence[Pt2],
    b_points: Sequence[Pt2],
    kind: str,
    pitch: Rat,
) -> Optional[SeparationCert]:
    side_a = _classify_side(line, a_points)
    if side_a is None:
        return None
    side_b = _classify_side(line, b_points)
    if side_b is None or side_b == side_a:
        return None
    return SeparationCert(line, side_a, side_b, kind, pitch)


def _require_ortho_connected(region: GridRegion, label: str) -> None:
    if not region.cells:
        raise EmptyInput(f"{label} is empty")
    if not is_path_connected(region):
        raise NotPathConnected(f"{label} is not path-connected")
    if not is_ortho_convex_region(region):
        raise NotOrthoConvex(f"{label} is not ortho-convex")


def _grid_pitch(d2: Rat) -> Rat:
    # s^2 in [3/32, 1/8] * d^2, hence d/4 < s <= d/(2*sqrt(2)) < d/2
    s = rat_sqrt_lower(d2 / 8, d2 / 32)
    assert 0 < s * s <= d2 / 8
    return s


def separate_point(region: GridRegion, p: Pt2) -> SeparationCert:
    """Staircase line strictly separating an exterior point from a
    path-connected ortho-convex region.

    Builds a grid of pitch s anchored at p; the four corners of the 2x2
    cell block around p (all within d/2 of p, hence clear of the region)
    provide four L-shaped candidate lines, one of which must verify.
    """
    _require_ortho_connected(region, "region")
    if region.contains_point(p):
        raise PointInside(f"point ({p.x}, {p.y}) lies in the region")
    d2 = point_region_distance_sq(p, region)
    s = _grid_pitch(d2)
    corners = {
        "ne": Pt2(p.x + s, p.y + s),
        "se": Pt2(p.x + s, p.y - s),
        "sw": Pt2(p.x - s, p.y - s),
        "nw": Pt2(p.x - s, p.y + s),
    }
    region_corners = sorted(region.corner_points())
    for which in ("ne", "se", "sw", "nw"):
        cert = _try_certificate(
            _corner_line(corners[which], which),
            region_corners,
            [p],
            kind=f"corner_{which}",
            pitch=s,
        )
        if cert:
            return cert
    raise ConstructionFailed(
        "no corner line of the pitch block separates the point"
    )


def _grid_neighborhood_profile(
    region: GridRegion, pitch: Rat
) -> dict[int, tuple[int, int]]:
    """Column profile (per grid column: bottom, top edge indices) of the set
    of pitch-grid cells touching the region.

    For a path-connected ortho-convex region, consecutive column extents
    overlap, so each grid column's touched rows form one run and the union
    over source columns is exact.
    """
    cols_src = region_column_profile(region)
    out: dict[int, tuple[int, int]] = {}
    for i, (jb, jt) in cols_src.items():
        xlo = region.origin.x + i * region.cell
        xhi = xlo + region.cell
        ylo = region.origin.y + jb * region.cell
        yhi = region.origin.y + jt * region.cell
        k_lo, k_hi = touching_index_range(xlo, xhi, pitch)
        l_lo, l_hi = touching_index_range(ylo, yhi, pitch)
        for k in range(k_lo, k_hi + 1):
            if k in out:
                lo, hi = out[k]
                out[k] = (min(lo, l_lo), max(hi, l_hi + 1))
            else:
                out[k] = (l_lo, l_hi + 1)
    return out


def separate_sets(a: GridRegion, b: GridRegion) -> SeparationCert:
    """Staircase line strictly separating two disjoint path-connected
    ortho-convex regions.

    The grid neighborhood of ``a`` at pitch s contains ``a`` in its open
    interior and stays at distance >= d - sqrt(2)*s > d/2 from ``b``; its
    four boundary chains plus the four corner lines of its bounding box are
    the candidates. Corner candidates are tried first when ``b`` avoids the
    bounding box entirely.
    """
    _require_ortho_connected(a, "set A")
    _require_ortho_connected(b, "set B")
    d2 = region_distance_sq(a, b)
    if d2 == 0:
        raise NotDisjoint("the sets touch: distance is zero")
    s = _grid_pitch(d2)
    grid_origin = Pt2(Rat(0), Rat(0))
    profile = _grid_neighborhood_profile(a, s)
    kmin, kmax = min(profile), max(profile)
    lmin = min(lo for lo, _ in profile.values())
    lmax = max(hi for _, hi in profile.values())
    px0, px1 = kmin * s, (kmax + 1) * s
    py0, py1 = lmin * s, lmax * s
    corner_pts = {
        "ne": Pt2(px1, py1),
        "se": Pt2(px1, py0),
        "sw": Pt2(px0, py0),
        "nw": Pt2(px0, py1),
    }

    b_meets_box = False
    for ij in b.cells:
        r = b.cell_rect(ij)
        if r.xmin <= px1 and r.xmax >= px0 and r.ymin <= py1 and r.ymax >= py0:
            b_meets_box = True
            break

    corner_candidates = [
        (f"corner_{w}", _corner_line(corner_pts[w], w))
        for w in ("ne", "se", "sw", "nw")
    ]
    chain_candidates = [
        (f"chain_{w}", _profile_chain(grid_origin, s, profile, w))
        for w in ("ne", "se", "sw", "nw")
    ]
    candidates = (
        corner_candidates + chain_candidates
        if not b_meets_box
        else chain_candidates + corner_candidates
    )
    a_corners = sorted(a.corner_points())
    b_corners = sorted(b.corner_points())
    for kind, line in candidates:
        cert = _try_certificate(line, a_corners, b_corners, kind, s)
        if cert:
            return cert
    raise ConstructionFailed("no candidate line separates the two sets")


def _carrier_points(obj) -> list[Pt2]:
    if isinstance(obj, GridRegion):
        if not obj.cells:
            raise EmptyInput("cannot verify against an empty region")
        return sorted(obj.corner_points())
    if isinstance(obj, Pt2):
        return [obj]
    raise TypeError(f"unsupported carrier {type(obj).__name__}")


def verify_certificate(cert: SeparationCert, a, b) -> dict:
    """Re-check a separation certificate against the two inputs.

    For regions, testing every cell's four corners is exhaustive: a monotone
    staircase line that has all corners of a box strictly on one side cannot
    enter the box, so no interior point can sit elsewhere. Line validity is
    re-established by the StaircaseLine constructor on deserialization.
    """
    pts_a = _carrier_points(a)
    pts_b = _carrier_points(b)
    side_a = _classify_side(cert.line, pts_a)
    side_b = _classify_side(cert.line, pts_b)
    ok = (
        side_a is not None
        and side_b is not None
        and side_a != side_b
        and side_a == cert.side_a
        and side_b == cert.side_b
    )
    return {
        "valid": ok,
        "side_a": side_a.value if side_a else None,
        "side_b": side_b.value if side_b else None,
        "claimed_side_a": cert.side_a.value,
        "claimed_side_b": cert.side_b.value,
        "checked_a": len(pts_a),
        "checked_b": len(pts_b),
        "kind": cert.kind,
    }
