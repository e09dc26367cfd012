"""Polylines: monotonicity classification and ortho-convexity of images.

``classify_monotone`` is exact at the *point* level: two parameter values
s < t on the polyline must never produce a displacement in a forbidden open
quadrant. Vertex pairs alone cannot decide this (a path may rise and then
fall back through previously visited y-values without any vertex pair
witnessing it), so the test runs over ordered segment pairs via the convex
set of displacements between them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import Pt2, Rat, norm1, norm2_sq, rat, sqrt_interval
from .errors import NotMonotone, ParseError

__all__ = [
    "Polyline",
    "MonotoneClass",
    "classify_monotone",
    "is_ortho_convex_path",
    "path_length",
    "SandwichResult",
    "check_sandwich",
]


class MonotoneClass(enum.Enum):
    """Which monotone senses a polyline satisfies at point level."""

    INCREASING = "increasing"
    DECREASING = "decreasing"
    BOTH = "both"


@dataclass(frozen=True)
class Polyline:
    """A directed polygonal path; consecutive vertices must differ."""

    vertices: tuple[Pt2, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ParseError("polyline needs at least one vertex")
        for k in range(len(self.vertices) - 1):
            if self.vertices[k] == self.vertices[k + 1]:
                raise ParseError(f"zero-length polyline segment at index {k}")

    @classmethod
    def of(cls, pts) -> "Polyline":
        return cls(tuple(Pt2(rat(x), rat(y)) for x, y in pts))

    def segments(self) -> list[tuple[Pt2, Pt2]]:
        v = self.vertices
        return [(v[k], v[k + 1]) for k in range(len(v) - 1)]


def _open_interval_of_positive(a: Rat, b: Rat):
    """Parameter t-interval (open, as (lo, hi) with None = unbounded) where
    the linear function a + t*(b - a) is strictly positive."""
    if a == b:
        return (None, None) if a > 0 else "empty"
    t0 = a / (a - b)
    if b > a:
        return (t0, None)
    return (None, t0)


def _edge_meets_open_quadrant(a: Pt2, b: Pt2, sx: int, sy: int) -> bool:
    """Does the closed segment [a, b] contain a point with
    sx*x > 0 and sy*y > 0?"""
    ix = _open_interval_of_positive(sx * a.x, sx * b.x)
    if ix == "empty":
        return False
    iy = _open_interval_of_positive(sy * a.y, sy * b.y)
    if iy == "empty":
        return False
    lo = max((v for v in (ix[0], iy[0]) if v is not None), default=None)
    hi = min((v for v in (ix[1], iy[1]) if v is not None), default=None)
    # intersect open (lo, hi) with closed [0, 1]
    if lo is not None and hi is not None and lo >= hi:
        return False
    if lo is not None and lo >= 1:
        return False
    if hi is not None and hi <= 0:
        return False
    return True


def _pair_meets_quadrant(
    si: tuple[Pt2, Pt2], sj: tuple[Pt2, Pt2], sx: int, sy: int
) -> bool:
    """True iff some displacement q - p with p on si, q on sj lies strictly
    inside the open quadrant signed by (sx, sy).

    The displacement set is a (possibly degenerate) parallelogram; an open
    quadrant that meets a convex set also meets its boundary, because from
    any interior hit one can walk along the quadrant's recession direction
    to the boundary. Checking the four boundary edges is therefore exact.
    """
    v1 = sj[0] - si[0]
    v2 = sj[0] - si[1]
    v3 = sj[1] - si[1]
    v4 = sj[1] - si[0]
    return (
        _edge_meets_open_quadrant(v1, v2, sx, sy)
        or _edge_meets_open_quadrant(v2, v3, sx, sy)
        or _edge_meets_open_quadrant(v3, v4, sx, sy)
        or _edge_meets_open_quadrant(v4, v1, sx, sy)
    )


def classify_monotone(g: Polyline) -> Optional[MonotoneClass]:
    """Point-level monotone classification, or None.

    Increasing: all point-pair displacements satisfy dx*dy >= 0.
    Decreasing: all satisfy dx*dy <= 0. BOTH when every displacement is
    axis-aligned (staircase along a single row/column, or a point).
    """
    segs = g.segments()
    inc = dec = True
    for p, q in segs:
        d = q - p
        prod = d.x * d.y
        if prod > 0:
            dec = False
        elif prod < 0:
            inc = False
        if not inc and not dec:
            return None
    n = len(segs)
    for i in range(n):
        for j in range(i + 1, n):
            if inc and (
                _pair_meets_quadrant(segs[i], segs[j], -1, 1)
                or _pair_meets_quadrant(segs[i], segs[j], 1, -1)
            ):
                inc = False
            if dec and (
                _pair_meets_quadrant(segs[i], segs[j], 1, 1)
                or _pair_meets_quadrant(segs[i], segs[j], -1, -1)
            ):
                dec = False
            if not inc and not dec:
                return None
    if inc and dec:
        return MonotoneClass.BOTH
    return MonotoneClass.INCREASING if inc else MonotoneClass.DECREASING


def _line_hits(
    segs: Sequence[tuple[Pt2, Pt2]], coord: Rat, axis: int
) -> list[tuple[Rat, Rat]]:
    """Intersections of each segment with the line {axis-coordinate == coord},
    as closed intervals in the other coordinate."""
    hits: list[tuple[Rat, Rat]] = []
    for p, q in segs:
        a = (p.x, p.y)[axis]
        b = (q.x, q.y)[axis]
        oa = (p.x, p.y)[1 - axis]
        ob = (q.x, q.y)[1 - axis]
        if a == b:
            if a == coord:
                hits.append((min(oa, ob), max(oa, ob)))
        else:
            lo, hi = (a, b) if a <= b else (b, a)
            if lo <= coord <= hi:
                t = (coord - a) / (b - a)
                y = oa + t * (ob - oa)
                hits.append((y, y))
    return hits


def _components(intervals: list[tuple[Rat, Rat]]) -> int:
    if not intervals:
        return 0
    intervals.sort()
    count = 1
    _, cur_hi = intervals[0]
    for lo, hi in intervals[1:]:
        if lo > cur_hi:
            count += 1
            cur_hi = hi
        else:
            cur_hi = max(cur_hi, hi)
    return count


def is_ortho_convex_path(g: Polyline) -> bool:
    """True iff the image of g meets every axis-parallel line in a
    connected set.

    Connectivity of line-slices can only change at segment endpoint
    coordinates or where two segments cross, so it suffices to test those
    coordinates plus a midpoint between each consecutive pair.
    """
    segs = g.segments()
    for axis in (0, 1):
        coords = {(v.x, v.y)[axis] for v in g.vertices}
        for i in range(len(segs)):
            for j in range(i + 1, len(segs)):
                c = _crossing_coord(segs[i], segs[j], axis)
                if c is not None:
                    coords.add(c)
        cs = sorted(coords)
        samples = list(cs)
        for k in range(len(cs) - 1):
            samples.append((cs[k] + cs[k + 1]) / 2)
        for c in samples:
            if _components(_line_hits(segs, c, axis)) > 1:
                return False
    return True


def _crossing_coord(
    s: tuple[Pt2, Pt2], t: tuple[Pt2, Pt2], axis: int
) -> Optional[Rat]:
    """Sweep coordinate at which the two segments' slice values coincide,
    if it lies inside both segments' sweep spans."""

    def unpack(seg):
        p, q = seg
        return (
            ((p.x, p.y)[axis], (p.x, p.y)[1 - axis]),
            ((q.x, q.y)[axis], (q.x, q.y)[1 - axis]),
        )

    (a1, b1), (a2, b2) = unpack(s)
    (a3, b3), (a4, b4) = unpack(t)
    if a1 == a2 or a3 == a4:
        return None  # slice-constant segments break at endpoint coords anyway
    # y_s(c) = y_t(c): linear in c
    m1 = (b2 - b1) / (a2 - a1)
    m2 = (b4 - b3) / (a4 - a3)
    if m1 == m2:
        return None
    c = (b3 - b1 + m1 * a1 - m2 * a3) / (m1 - m2)
    if min(a1, a2) <= c <= max(a1, a2) and min(a3, a4) <= c <= max(a3, a4):
        return c
    return None


def _merge_collinear(segs: list[tuple[Pt2, Pt2]]) -> list[tuple[Pt2, Pt2]]:
    merged: list[tuple[Pt2, Pt2]] = []
    for p, q in segs:
        if merged:
            mp, mq = merged[-1]
            d1 = mq - mp
            d2 = q - p
            cross = d1.x * d2.y - d1.y * d2.x
            dot = d1.x * d2.x + d1.y * d2.y
            if mq == p and cross == 0 and dot > 0:
                merged[-1] = (mp, q)
                continue
        merged.append((p, q))
    return merged


def path_length(g: Polyline, width: Rat = Rat(1, 2**20)) -> tuple[Rat, Rat]:
    """Certified enclosure of the Euclidean length: lo <= len(g) <= hi with
    hi - lo <= width. Exact (lo == hi) when all segments are axis-aligned."""
    width = rat(width)
    segs = g.segments()
    if not segs:
        return Rat(0), Rat(0)
    lo = hi = Rat(0)
    per = width / len(segs)
    for p, q in segs:
        if p.x == q.x or p.y == q.y:
            d = norm1(p, q)
            lo += d
            hi += d
        else:
            slo, shi = sqrt_interval(norm2_sq(p, q), per)
            lo += slo
            hi += shi
    return lo, hi


@dataclass(frozen=True)
class SandwichResult:
    """Outcome of the distance sandwich check for a monotone polyline:
    straight-line distance <= path length <= taxicab distance."""

    monotone: MonotoneClass
    norm2_lo: Rat
    norm2_hi: Rat
    length_lo: Rat
    length_hi: Rat
    norm1: Rat
    lower_ok: bool
    upper_ok: bool
    lower_strict: bool
    upper_strict: bool


_REFINE_WIDTHS = [Rat(1, 2 ** (20 * 2**k)) for k in range(6)]  # cap 2^-640


def check_sandwich(g: Polyline) -> SandwichResult:
    """Verify the length sandwich for a monotone polyline, exactly.

    Raises NotMonotone when classify_monotone(g) is None. Equality cases
    (single straight run for the lower bound, all-axis-aligned staircase for
    the upper bound) are decided by exact rational comparison of squares; the
    remaining cases are strict and resolve under interval refinement.
    """
    mc = classify_monotone(g)
    if mc is None:
        raise NotMonotone("polyline is not monotone in either sense")
    a = g.vertices[0]
    b = g.vertices[-1]
    n1 = norm1(a, b)
    n2sq = norm2_sq(a, b)
    merged = _merge_collinear(g.segments())
    all_axis = all(p.x == q.x or p.y == q.y for p, q in merged)

    if len(merged) <= 1:
        # single straight run: length^2 == |a-b|^2
        n2_lo, n2_hi = sqrt_interval(n2sq, _REFINE_WIDTHS[0])
        upper_strict = n2sq < n1 * n1
        return SandwichResult(
            mc, n2_lo, n2_hi, n2_lo, n2_hi, n1,
            lower_ok=True,
            upper_ok=n2sq <= n1 * n1,
            lower_strict=False,
            upper_strict=upper_strict,
        )
    if all_axis:
        # monotone staircase: exact length equals the taxicab distance
        length = sum((norm1(p, q) for p, q in merged), Rat(0))
        n2_lo, n2_hi = sqrt_interval(n2sq, _REFINE_WIDTHS[0])
        return SandwichResult(
            mc, n2_lo, n2_hi, length, length, n1,
            lower_ok=length * length >= n2sq,
            upper_ok=length <= n1,
            lower_strict=length * length > n2sq,
            upper_strict=False,
        )
    # mixed directions: both inequalities are strict; refine until witnessed
    for width in _REFINE_WIDTHS:
        n2_lo, n2_hi = sqrt_interval(n2sq, width)
        l_lo, l_hi = path_length(g, width)
        if n2_hi < l_lo and l_hi < n1:
            return SandwichResult(
                mc, n2_lo, n2_hi, l_lo, l_hi, n1,
                lower_ok=True, upper_ok=True,
                lower_strict=True, upper_strict=True,
            )
    raise AssertionError(
        "interval refinement failed to separate strictly ordered lengths"
    )
