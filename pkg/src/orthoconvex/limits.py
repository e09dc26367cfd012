"""Limit machinery: certified Hausdorff distance, lattice geodesics,
convergence experiments, signature-based selection, and closure carriers.

All numeric claims come with rational certificates. Hausdorff distances are
returned as enclosing intervals whose validity follows from exact sample
distances plus a sampling-density slack; geodesic lengths compare through
interval refinement of square-root sums; the selection routine's pairwise
bound is a theorem about shared grid signatures, not a float estimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from .core import Pt2, Rat, norm1, norm2_sq, rat, rat_str, sqrt_interval
from .errors import (
    EmptyInput,
    InsufficientItems,
    NotPathConnected,
    ParseError,
    PointOutside,
)
from .predicates import Polyline, classify_monotone, path_length
from .regions import (
    GridRegion,
    PointSet2,
    is_ortho_convex_region,
    point_region_distance_sq,
    touching_index_range,
)

__all__ = [
    "Carrier",
    "HausdorffDist",
    "hausdorff",
    "shortest_ortho_path",
    "path_convergence_report",
    "region_signature",
    "BlaschkeResult",
    "blaschke_select",
    "OpenSegment",
    "SegmentSet",
    "segment_closure",
    "is_ortho_convex_segments",
    "ClosureReport",
    "closure_preserves",
]

Carrier = Union[GridRegion, PointSet2, Polyline]

# rational upper bounds: 99/70 > sqrt(2), 99/140 > sqrt(2)/2
_SQRT2_UP = Rat(99, 70)
_HALF_SQRT2_UP = Rat(99, 140)


@dataclass(frozen=True)
class HausdorffDist:
    """Certified enclosure lo <= d_H <= hi at the given sampling refinement."""

    lo: Rat
    hi: Rat
    refine: Rat


def _ceil_rat(x: Rat) -> int:
    return -((-x.numerator) // x.denominator)


def _samples_of(obj: Carrier, refine: Rat) -> tuple[list[Pt2], Rat]:
    """Sample points covering the carrier to within a certified slack: every
    carrier point is within ``slack`` of some sample."""
    if isinstance(obj, PointSet2):
        if not obj.points:
            raise EmptyInput("empty point set")
        return sorted(obj.points), Rat(0)
    if isinstance(obj, GridRegion):
        if not obj.cells:
            raise EmptyInput("empty region")
        k = max(1, _ceil_rat(obj.cell / refine))
        step = obj.cell / k
        seen: set[tuple[int, int]] = set()
        for i, j in obj.cells:
            for a in range(k + 1):
                for b in range(k + 1):
                    seen.add((i * k + a, j * k + b))
        pts = [
            Pt2(obj.origin.x + ia * step, obj.origin.y + jb * step)
            for ia, jb in sorted(seen)
        ]
        # farthest in-cell point from the sample sub-grid: half a diagonal
        return pts, _HALF_SQRT2_UP * step
    if isinstance(obj, Polyline):
        seen_pts: set[Pt2] = set()
        for p, q in obj.segments():
            k = max(1, _ceil_rat(norm1(p, q) / refine))
            for m in range(k + 1):
                t = Rat(m, k)
                seen_pts.add(Pt2(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)))
        if not seen_pts:
            seen_pts = {obj.vertices[0]}
        # piece length <= taxicab/k <= refine, nearest sample within half that
        return sorted(seen_pts), refine / 2
    raise TypeError(f"unsupported carrier {type(obj).__name__}")


def _point_seg_dist_sq(p: Pt2, a: Pt2, b: Pt2) -> Rat:
    dx, dy = b.x - a.x, b.y - a.y
    px, py = p.x - a.x, p.y - a.y
    denom = dx * dx + dy * dy
    t = (px * dx + py * dy) / denom
    t = Rat(0) if t < 0 else (Rat(1) if t > 1 else t)
    ex = px - t * dx
    ey = py - t * dy
    return ex * ex + ey * ey


def _dist_sq_to(obj: Carrier, p: Pt2) -> Rat:
    if isinstance(obj, GridRegion):
        return point_region_distance_sq(p, obj)
    if isinstance(obj, PointSet2):
        return min(norm2_sq(p, q) for q in obj.points)
    if isinstance(obj, Polyline):
        if len(obj.vertices) == 1:
            return norm2_sq(p, obj.vertices[0])
        return min(_point_seg_dist_sq(p, a, b) for a, b in obj.segments())
    raise TypeError(f"unsupported carrier {type(obj).__name__}")


def _directed_max_d2(samples: list[Pt2], target: Carrier) -> Rat:
    return max(_dist_sq_to(target, p) for p in samples)


_INT64_SAFE = 2**31


def _int_scale(*values: Rat) -> int:
    s = 1
    for v in values:
        s = s * v.denominator // math.gcd(s, v.denominator)
    return s


def _region_fast_arrays(
    region: GridRegion, refine: Rat, scale: int
) -> Optional[tuple[np.ndarray, np.ndarray, Rat]]:
    """(samples (S,2), boxes (C,4), slack) in scale-multiplied int64, or
    None when coordinates do not fit the overflow-safe window."""
    k = max(1, _ceil_rat(region.cell / refine))
    step = region.cell / k
    ox = region.origin.x * scale
    oy = region.origin.y * scale
    st = step * scale
    if ox.denominator != 1 or oy.denominator != 1 or st.denominator != 1:
        return None
    ox, oy, st = int(ox), int(oy), int(st)
    cells = sorted(region.cells)
    idx = set()
    for i, j in cells:
        for a in range(k + 1):
            for b in range(k + 1):
                idx.add((i * k + a, j * k + b))
    sample_arr = np.array(
        [(ox + ia * st, oy + jb * st) for ia, jb in sorted(idx)], dtype=np.int64
    )
    c = st * k  # cell * scale
    box_arr = np.empty((len(cells), 4), dtype=np.int64)
    for m, (i, j) in enumerate(cells):
        box_arr[m] = (ox + i * c, ox + (i + 1) * c, oy + j * c, oy + (j + 1) * c)
    values = [sample_arr, box_arr]
    if any(np.abs(v).max(initial=0) >= _INT64_SAFE for v in values):
        return None
    return sample_arr, box_arr, _HALF_SQRT2_UP * step


def _directed_max_d2_int(samples: np.ndarray, boxes: np.ndarray) -> int:
    best = 0
    chunk = 4096
    for lo in range(0, len(samples), chunk):
        s = samples[lo : lo + chunk]
        dx = np.maximum(
            0,
            np.maximum(
                boxes[None, :, 0] - s[:, None, 0],
                s[:, None, 0] - boxes[None, :, 1],
            ),
        )
        dy = np.maximum(
            0,
            np.maximum(
                boxes[None, :, 2] - s[:, None, 1],
                s[:, None, 1] - boxes[None, :, 3],
            ),
        )
        d2 = (dx * dx + dy * dy).min(axis=1)
        m = int(d2.max())
        best = max(best, m)
    return best


def hausdorff(a: Carrier, b: Carrier, refine) -> HausdorffDist:
    """Certified interval around the Hausdorff distance of two carriers.

    Exact squared distances are evaluated from a sample net of pitch at most
    ``refine`` on each carrier; the returned upper end adds the net's
    covering slack, so the true distance always lies inside [lo, hi] and
    hi - lo stays below about 1.5 * refine.
    """
    refine = rat(refine)
    if refine <= 0:
        raise ParseError(f"refine must be positive, got {refine}")

    d2_ab = d2_ba = None
    slack_a = slack_b = None
    if isinstance(a, GridRegion) and isinstance(b, GridRegion):
        if not a.cells or not b.cells:
            raise EmptyInput("hausdorff of an empty region")
        ka = max(1, _ceil_rat(a.cell / refine))
        kb = max(1, _ceil_rat(b.cell / refine))
        scale = _int_scale(
            a.origin.x, a.origin.y, a.cell / ka, b.origin.x, b.origin.y, b.cell / kb
        )
        fa = _region_fast_arrays(a, refine, scale)
        fb = _region_fast_arrays(b, refine, scale)
        if fa is not None and fb is not None:
            sa, boxes_a, slack_a = fa
            sb, boxes_b, slack_b = fb
            d2_ab = Rat(_directed_max_d2_int(sa, boxes_b), scale * scale)
            d2_ba = Rat(_directed_max_d2_int(sb, boxes_a), scale * scale)
    if d2_ab is None:
        samples_a, slack_a = _samples_of(a, refine)
        samples_b, slack_b = _samples_of(b, refine)
        d2_ab = _directed_max_d2(samples_a, b)
        d2_ba = _directed_max_d2(samples_b, a)

    width = refine / 100
    lo_ab, hi_ab = sqrt_interval(d2_ab, width)
    lo_ba, hi_ba = sqrt_interval(d2_ba, width)
    lo = max(lo_ab, lo_ba)
    hi = max(hi_ab + slack_a, hi_ba + slack_b)
    assert lo <= hi
    return HausdorffDist(lo, hi, refine)


# ---------------------------------------------------------------------------
# geodesics


@dataclass(frozen=True)
class _SqrtSum:
    """Sum of square roots of rationals, compared via interval refinement."""

    terms: tuple[Rat, ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def bounds(self, width: Rat) -> tuple[Rat, Rat]:
        if width not in self._cache:
            lo = hi = Rat(0)
            nz = [t for t in self.terms if t > 0]
            for t in nz:
                a, b = sqrt_interval(t, width / len(nz))
                lo += a
                hi += b
            self._cache[width] = (lo, hi)
        return self._cache[width]

    def add(self, term: Rat) -> "_SqrtSum":
        return _SqrtSum(self.terms + (term,))


_CMP_WIDTHS = [Rat(1, 2**30), Rat(1, 2**90), Rat(1, 2**240)]


def _sqrtsum_cmp(x: _SqrtSum, y: _SqrtSum) -> int:
    """-1, 0, or 1; 0 means indistinguishable at the refinement cap, which
    for lattice geodesics only happens on genuinely equal lengths."""
    for width in _CMP_WIDTHS:
        xlo, xhi = x.bounds(width)
        ylo, yhi = y.bounds(width)
        if xhi < ylo:
            return -1
        if yhi < xlo:
            return 1
    return 0


def _graph_nodes(region: GridRegion, a: Pt2, b: Pt2) -> list[Pt2]:
    """a, b, plus the lattice corners where a geodesic can bend: reflex
    corners (3 incident cells) and pinch corners (2 diagonal cells)."""
    nodes = {a, b}
    corners: dict[tuple[int, int], int] = {}
    for i, j in region.cells:
        for ci, cj in ((i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)):
            corners[(ci, cj)] = corners.get((ci, cj), 0) + 1
    for (ci, cj), count in corners.items():
        if count == 3:
            nodes.add(
                Pt2(
                    region.origin.x + ci * region.cell,
                    region.origin.y + cj * region.cell,
                )
            )
        elif count == 2:
            diag1 = (ci - 1, cj - 1) in region.cells and (ci, cj) in region.cells
            diag2 = (ci - 1, cj) in region.cells and (ci, cj - 1) in region.cells
            if diag1 or diag2:
                nodes.add(
                    Pt2(
                        region.origin.x + ci * region.cell,
                        region.origin.y + cj * region.cell,
                    )
                )
    return sorted(nodes)


def _segment_in_region(region: GridRegion, p: Pt2, q: Pt2) -> bool:
    """Is the closed segment covered by the closed cell union?"""
    xmin, xmax = min(p.x, q.x), max(p.x, q.x)
    ymin, ymax = min(p.y, q.y), max(p.y, q.y)
    i0, i1 = touching_index_range(
        xmin - region.origin.x, xmax - region.origin.x, region.cell
    )
    j0, j1 = touching_index_range(
        ymin - region.origin.y, ymax - region.origin.y, region.cell
    )
    dx, dy = q.x - p.x, q.y - p.y
    intervals: list[tuple[Rat, Rat]] = []
    for i in range(i0, i1 + 1):
        for j in range(j0, j1 + 1):
            if (i, j) not in region.cells:
                continue
            r = region.cell_rect((i, j))
            t0, t1 = Rat(0), Rat(1)
            ok = True
            for coord, d, lo, hi in (
                (p.x, dx, r.xmin, r.xmax),
                (p.y, dy, r.ymin, r.ymax),
            ):
                if d == 0:
                    if not lo <= coord <= hi:
                        ok = False
                        break
                else:
                    ta = (lo - coord) / d
                    tb = (hi - coord) / d
                    if ta > tb:
                        ta, tb = tb, ta
                    t0 = max(t0, ta)
                    t1 = min(t1, tb)
            if ok and t0 <= t1:
                intervals.append((t0, t1))
    intervals.sort()
    covered = Rat(0)
    for lo, hi in intervals:
        if lo > covered:
            return False
        covered = max(covered, hi)
        if covered >= 1:
            return True
    return covered >= 1


def shortest_ortho_path(region: GridRegion, a: Pt2, b: Pt2) -> Polyline:
    """Euclidean geodesic between two points of a closed grid region.

    Exact Dijkstra over the visibility graph of the bend candidates; length
    labels are square-root sums ordered by interval refinement. For an
    ortho-convex region the result is checked to be a monotone polyline.
    """
    if not region.cells:
        raise EmptyInput("empty region")
    for name, p in (("a", a), ("b", b)):
        if not region.contains_point(p):
            raise PointOutside(f"endpoint {name}=({p.x}, {p.y}) outside the region")
    if a == b:
        return Polyline((a,))
    nodes = _graph_nodes(region, a, b)
    index = {p: k for k, p in enumerate(nodes)}
    n = len(nodes)
    adj: list[list[tuple[int, Rat]]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if _segment_in_region(region, nodes[i], nodes[j]):
                w2 = norm2_sq(nodes[i], nodes[j])
                adj[i].append((j, w2))
                adj[j].append((i, w2))

    src, dst = index[a], index[b]
    dist: list[Optional[_SqrtSum]] = [None] * n
    prev: list[Optional[int]] = [None] * n
    settled = [False] * n
    dist[src] = _SqrtSum(())
    for _ in range(n):
        u = -1
        for v in range(n):
            if settled[v] or dist[v] is None:
                continue
            if u == -1 or _sqrtsum_cmp(dist[v], dist[u]) < 0:
                u = v
        if u == -1:
            break
        settled[u] = True
        if u == dst:
            break
        for v, w2 in adj[u]:
            if settled[v]:
                continue
            alt = dist[u].add(w2)
            if dist[v] is None or _sqrtsum_cmp(alt, dist[v]) < 0:
                dist[v] = alt
                prev[v] = u
    if dist[dst] is None:
        raise NotPathConnected("no path between the endpoints inside the region")
    order = []
    v: Optional[int] = dst
    while v is not None:
        order.append(nodes[v])
        v = prev[v]
    path = Polyline(tuple(reversed(order)))
    if is_ortho_convex_region(region):
        assert classify_monotone(path) is not None, (
            "geodesic in an ortho-convex region must be monotone"
        )
    return path


# ---------------------------------------------------------------------------
# convergence experiment


def path_convergence_report(
    region: GridRegion,
    a: Pt2,
    b: Pt2,
    ns: Sequence[int],
    refine_factor: Rat = Rat(1, 4),
) -> dict:
    """Geodesics between endpoints perturbed by (1/n, 1/n) and (-1/n, 1/n)
    converging to the segment [a, b]: certified lengths and Hausdorff
    intervals per n, with rational error envelopes.

    The envelopes are guarantees for axis-aligned endpoint pairs in a
    straight channel (the geodesic is monotone, so its length sits between
    the perturbed endpoints' Euclidean and taxicab distances); reported
    per-n flags state whether the certified intervals landed inside them.
    """
    limit = Polyline((a, b)) if a != b else Polyline((a,))
    limit_len_lo, limit_len_hi = sqrt_interval(norm2_sq(a, b), Rat(1, 2**40))
    rows = []
    for n in ns:
        if n < 1:
            raise ParseError(f"n must be >= 1, got {n}")
        e = Rat(1, n)
        an = Pt2(a.x + e, a.y + e)
        bn = Pt2(b.x - e, b.y + e)
        gamma = shortest_ortho_path(region, an, bn)
        l_lo, l_hi = path_length(gamma, Rat(1, 2**40))
        refine_n = refine_factor * e
        hd = hausdorff(gamma, limit, refine_n)
        env_len = (2 + 2 * _SQRT2_UP) * e
        env_hd = _SQRT2_UP * (e + refine_n)
        len_err = max(abs(l_lo - limit_len_hi), abs(l_hi - limit_len_lo))
        rows.append(
            {
                "n": n,
                "length": [rat_str(l_lo), rat_str(l_hi)],
                "length_error_bound": rat_str(len_err),
                "length_envelope": rat_str(env_len),
                "length_within_envelope": len_err <= env_len,
                "hausdorff": [rat_str(hd.lo), rat_str(hd.hi)],
                "hausdorff_envelope": rat_str(env_hd),
                "hausdorff_within_envelope": hd.hi <= env_hd,
                "refine": rat_str(refine_n),
                "vertices": len(gamma.vertices),
            }
        )
    return {
        "limit_length": [rat_str(limit_len_lo), rat_str(limit_len_hi)],
        "rows": rows,
    }


# ---------------------------------------------------------------------------
# signature selection


def region_signature(region: GridRegion, tol: Rat) -> frozenset[tuple[int, int]]:
    """The tol-grid cells (anchored at the coordinate origin) that the
    closed region intersects. Two regions sharing a signature at tol are
    within sqrt(2)*tol of each other in Hausdorff distance: every point of
    one lies in a common tol-cell with some point of the other."""
    sig: set[tuple[int, int]] = set()
    for i, j in region.cells:
        x0 = region.origin.x + i * region.cell
        y0 = region.origin.y + j * region.cell
        k0, k1 = touching_index_range(x0, x0 + region.cell, tol)
        l0, l1 = touching_index_range(y0, y0 + region.cell, tol)
        for k in range(k0, k1 + 1):
            for l in range(l0, l1 + 1):
                sig.add((k, l))
    return frozenset(sig)


@dataclass(frozen=True)
class BlaschkeResult:
    """Indices of the selected subsequence plus the certificate data."""

    indices: tuple[int, ...]
    tol_final: Rat
    pairwise_bound: Rat
    history: tuple[dict, ...]
    spot_checks: tuple[dict, ...]


def blaschke_select(
    items: Sequence[GridRegion],
    schedule: Sequence[Rat],
    max_spot_checks: int = 8,
) -> BlaschkeResult:
    """Select a subsequence that stays mutually close at every tolerance of
    a decreasing schedule.

    At each tolerance the survivors are bucketed by grid signature and the
    largest bucket is kept (ties: most members, then earliest first index).
    Members of the final bucket are pairwise within sqrt(2)*tol_final (a
    theorem of shared signatures, reported as the rational bound 99/70 *
    tol_final); a few pairs are additionally spot-checked with certified
    Hausdorff intervals. Raises InsufficientItems when fewer than two items
    survive a round.
    """
    if len(items) < 2:
        raise InsufficientItems(f"need at least 2 items, got {len(items)}")
    sched = [rat(t) for t in schedule]
    if not sched or any(t <= 0 for t in sched):
        raise ParseError("schedule must be nonempty positive tolerances")
    if any(sched[k + 1] >= sched[k] for k in range(len(sched) - 1)):
        raise ParseError("schedule must be strictly decreasing")

    survivors = list(range(len(items)))
    history = []
    for tol in sched:
        buckets: dict[frozenset, list[int]] = {}
        for idx in survivors:
            buckets.setdefault(region_signature(items[idx], tol), []).append(idx)
        best = max(buckets.values(), key=lambda b: (len(b), -min(b)))
        history.append(
            {
                "tol": rat_str(tol),
                "bucket_sizes": sorted((len(b) for b in buckets.values()), reverse=True),
                "kept": len(best),
            }
        )
        if len(best) < 2:
            raise InsufficientItems(
                f"majority bucket has {len(best)} item(s) at tolerance {tol}"
            )
        survivors = sorted(best)

    tol_final = sched[-1]
    spot = []
    anchor = survivors[0]
    for other in survivors[1 : 1 + max_spot_checks]:
        hd = hausdorff(items[anchor], items[other], tol_final / 4)
        spot.append(
            {
                "pair": [anchor, other],
                "lo": rat_str(hd.lo),
                "hi": rat_str(hd.hi),
            }
        )
    return BlaschkeResult(
        indices=tuple(survivors),
        tol_final=tol_final,
        pairwise_bound=_SQRT2_UP * tol_final,
        history=tuple(history),
        spot_checks=tuple(spot),
    )


# ---------------------------------------------------------------------------
# closure carriers


@dataclass(frozen=True)
class OpenSegment:
    """Axis-parallel segment with independently open or closed endpoints."""

    p: Pt2
    q: Pt2
    include_p: bool = True
    include_q: bool = True

    def __post_init__(self) -> None:
        if self.p == self.q:
            raise ParseError("degenerate open segment")
        if self.p.x != self.q.x and self.p.y != self.q.y:
            raise ParseError("open segment must be axis-parallel")


@dataclass(frozen=True)
class SegmentSet:
    segments: tuple[OpenSegment, ...]


def segment_closure(s: SegmentSet) -> SegmentSet:
    return SegmentSet(
        tuple(OpenSegment(seg.p, seg.q, True, True) for seg in s.segments)
    )


def _pieces_on_line(s: SegmentSet, axis: int, coord: Rat):
    """Intersections with the line {axis coordinate == coord} as
    (lo, lo_closed, hi, hi_closed) pieces in the other coordinate."""
    pieces = []
    for seg in s.segments:
        pa = (seg.p.x, seg.p.y)[axis]
        qa = (seg.q.x, seg.q.y)[axis]
        po = (seg.p.x, seg.p.y)[1 - axis]
        qo = (seg.q.x, seg.q.y)[1 - axis]
        if pa == qa:
            if pa == coord:
                (lo, lc), (hi, hc) = sorted(
                    [(po, seg.include_p), (qo, seg.include_q)]
                )
                pieces.append((lo, lc, hi, hc))
        else:
            lo_a, hi_a = min(pa, qa), max(pa, qa)
            if lo_a < coord < hi_a:
                pieces.append((po, True, po, True))
            elif coord == pa and seg.include_p:
                pieces.append((po, True, po, True))
            elif coord == qa and seg.include_q:
                pieces.append((qo, True, qo, True))
    return pieces


def _pieces_connected(pieces) -> bool:
    if len(pieces) <= 1:
        return True
    # closed-at-lo pieces first among equal lo, so a closed point can bridge
    # an open end before the scan sees another open start at that coordinate
    pieces.sort(key=lambda t: (t[0], not t[1], t[2], not t[3]))
    _, _, hi, hc = pieces[0]
    for nlo, nlc, nhi, nhc in pieces[1:]:
        if nlo > hi:
            return False
        if nlo == hi and not (hc or nlc):
            # touching endpoints both open: the shared point is missing
            return False
        if nhi > hi or (nhi == hi and nhc):
            hi, hc = nhi, nhc
    return True


def is_ortho_convex_segments(s: SegmentSet) -> bool:
    """Every axis-parallel line must meet the union in a connected set.

    Segment endpoints are the only coordinates where slice connectivity can
    change, so those coordinates and midpoints between them are exhaustive.
    """
    for axis in (0, 1):
        coords = set()
        for seg in s.segments:
            coords.add((seg.p.x, seg.p.y)[axis])
            coords.add((seg.q.x, seg.q.y)[axis])
        cs = sorted(coords)
        samples = list(cs) + [
            (cs[k] + cs[k + 1]) / 2 for k in range(len(cs) - 1)
        ]
        for c in samples:
            if not _pieces_connected(_pieces_on_line(s, axis, c)):
                return False
    return True


@dataclass(frozen=True)
class ClosureReport:
    original_ortho: bool
    closure_ortho: bool
    preserved: bool


def closure_preserves(s: SegmentSet) -> ClosureReport:
    """Does taking the topological closure keep the set ortho-convex?

    ``preserved`` is the implication: either the original set was not
    ortho-convex to begin with, or its closure still is.
    """
    orig = is_ortho_convex_segments(s)
    clos = is_ortho_convex_segments(segment_closure(s))
    return ClosureReport(orig, clos, (not orig) or clos)
