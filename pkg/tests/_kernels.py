"""Exact integer kernels for the exhaustive small-lattice path experiment.

Vertices of the n x n sub-lattice of a 6x6 board are numbered y*6 + x and a
directed segment from vertex a to vertex b gets id a*36 + b. Two verdict
functions are implemented with deliberately different candidate-line
constructions so that exhaustive agreement is evidence, not tautology:

* the event sweep mirrors orthoconvex.predicates.is_ortho_convex_path:
  per axis it checks vertex coordinates, pairwise crossing coordinates of
  slice-varying segments, and midpoints of consecutive candidates, all in
  exact fraction arithmetic over int64;

* the sample sweep checks every vertex-coordinate line exactly and then 7
  fixed interior positions (eighths) in each strip between consecutive
  vertex coordinates. Inside an open strip every hit is a point moving
  linearly with the sweep coordinate, so the component count is constant
  except where two of those linear functions coincide, and a coincidence
  only ever lowers the count. Each segment pair coincides at most once
  overall, so with at most 4 segments there are at most C(4,2) = 6 such
  coordinates and one of the 7 samples per strip must see the generic
  count. This makes the sample sweep exact for paths with <= 5 vertices.

Both sweeps share the vertex-coordinate phase: if some vertex line is
already disconnected, both verdicts are False and the expensive phases are
skipped.

All hit values for the sample sweep are precomputed: a line at coordinate
k/8 meets a slice-varying segment at scaled height 480*y, an integer
because 60 is divisible by every slice span up to 5.
"""

from __future__ import annotations

import numpy as np
from numba import njit

BOARD = 6
NV = BOARD * BOARD
NS = NV * NV
YS = 480  # common integer scale for heights on eighth-lines


# --- table builders --------------------------------------------------------

@njit(cache=True)
def _orient(ax, ay, bx, by, cx, cy):
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


@njit(cache=True)
def _on_span(ax, ay, bx, by, px, py):
    # collinearity established by the caller
    if ax <= bx:
        if px < ax or px > bx:
            return False
    else:
        if px < bx or px > ax:
            return False
    if ay <= by:
        return ay <= py <= by
    return by <= py <= ay


@njit(cache=True)
def _segments_meet(ax, ay, bx, by, cx, cy, dx, dy):
    d1 = _orient(cx, cy, dx, dy, ax, ay)
    d2 = _orient(cx, cy, dx, dy, bx, by)
    d3 = _orient(ax, ay, bx, by, cx, cy)
    d4 = _orient(ax, ay, bx, by, dx, dy)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
        (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
    ):
        return True
    if d1 == 0 and _on_span(cx, cy, dx, dy, ax, ay):
        return True
    if d2 == 0 and _on_span(cx, cy, dx, dy, bx, by):
        return True
    if d3 == 0 and _on_span(ax, ay, bx, by, cx, cy):
        return True
    if d4 == 0 and _on_span(ax, ay, bx, by, dx, dy):
        return True
    return False


@njit(cache=True)
def _edge_meets_quadrant(ax, ay, bx, by, sx, sy):
    # does the closed segment [a, b] contain a point with sx*x>0 and sy*y>0?
    ax *= sx
    bx *= sx
    ay *= sy
    by *= sy
    if ax > 0 and ay > 0:
        return True
    if bx > 0 and by > 0:
        return True
    d0 = ax - ay
    d1 = bx - by
    if (d0 > 0 and d1 < 0) or (d0 < 0 and d1 > 0):
        dd = d0 - d1
        val = ax * dd + (bx - ax) * d0
        if dd < 0:
            val = -val
        return val > 0
    return False


@njit(cache=True)
def _pair_meets(px, py, qx, qy, rx, ry, tx, ty, sx, sy):
    # displacement parallelogram {u - v: u on segment r->t, v on segment p->q}
    # against the open quadrant signed by (sx, sy); its edges suffice
    v1x, v1y = rx - px, ry - py
    v2x, v2y = rx - qx, ry - qy
    v3x, v3y = tx - qx, ty - qy
    v4x, v4y = tx - px, ty - py
    return (
        _edge_meets_quadrant(v1x, v1y, v2x, v2y, sx, sy)
        or _edge_meets_quadrant(v2x, v2y, v3x, v3y, sx, sy)
        or _edge_meets_quadrant(v3x, v3y, v4x, v4y, sx, sy)
        or _edge_meets_quadrant(v4x, v4y, v1x, v1y, sx, sy)
    )


@njit(cache=True)
def _build_pair_tables(adj_ok, dis_ok, inc_kill, dec_kill):
    for s1 in range(NS):
        a = s1 // NV
        b = s1 % NV
        if a == b:
            continue
        ax, ay = a % BOARD, a // BOARD
        bx, by = b % BOARD, b // BOARD
        for s2 in range(NS):
            c = s2 // NV
            d = s2 % NV
            if c == d:
                continue
            cx, cy = c % BOARD, c // BOARD
            dx, dy = d % BOARD, d // BOARD
            if _segments_meet(ax, ay, bx, by, cx, cy, dx, dy):
                dis_ok[s1, s2] = 0
            else:
                dis_ok[s1, s2] = 1
            if b == c:
                # consecutive segments a->b, b->d share exactly b unless the
                # second one turns back along the first
                cross = (ax - bx) * (dy - by) - (ay - by) * (dx - bx)
                dot = (ax - bx) * (dx - bx) + (ay - by) * (dy - by)
                if cross == 0 and dot > 0:
                    adj_ok[s1, s2] = 0
                else:
                    adj_ok[s1, s2] = 1
            if _pair_meets(ax, ay, bx, by, cx, cy, dx, dy, -1, 1) or _pair_meets(
                ax, ay, bx, by, cx, cy, dx, dy, 1, -1
            ):
                inc_kill[s1, s2] = 1
            if _pair_meets(ax, ay, bx, by, cx, cy, dx, dy, 1, 1) or _pair_meets(
                ax, ay, bx, by, cx, cy, dx, dy, -1, -1
            ):
                dec_kill[s1, s2] = 1


@njit(cache=True)
def _build_geometry(mono, sa, oa, sb, ob, span_lo, span_hi, is_const, clo, chi, ypt):
    for s in range(NS):
        a = s // NV
        b = s % NV
        if a == b:
            continue
        ax, ay = a % BOARD, a // BOARD
        bx, by = b % BOARD, b // BOARD
        dx = bx - ax
        dy = by - ay
        # bit 0: compatible with the increasing class, bit 1: decreasing
        m = 0
        if dx * dy >= 0:
            m |= 1
        if dx * dy <= 0:
            m |= 2
        mono[s] = m
        for axis in range(2):
            if axis == 0:
                a1, o1, a2, o2 = ax, ay, bx, by
            else:
                a1, o1, a2, o2 = ay, ax, by, bx
            sa[s, axis] = a1
            oa[s, axis] = o1
            sb[s, axis] = a2
            ob[s, axis] = o2
            lo = a1 if a1 < a2 else a2
            hi = a1 + a2 - lo
            span_lo[s, axis] = 8 * lo
            span_hi[s, axis] = 8 * hi
            if a1 == a2:
                is_const[s, axis] = 1
                olo = o1 if o1 < o2 else o2
                clo[s, axis] = YS * olo
                chi[s, axis] = YS * (o1 + o2 - olo)
            else:
                is_const[s, axis] = 0
                da = a2 - a1
                do = o2 - o1
                for k in range(8 * lo, 8 * hi + 1):
                    ypt[s, axis, k] = YS * o1 + (60 * k - YS * a1) // da * do


def build_tables():
    adj_ok = np.zeros((NS, NS), dtype=np.uint8)
    dis_ok = np.zeros((NS, NS), dtype=np.uint8)
    inc_kill = np.zeros((NS, NS), dtype=np.uint8)
    dec_kill = np.zeros((NS, NS), dtype=np.uint8)
    mono = np.zeros(NS, dtype=np.uint8)
    sa = np.zeros((NS, 2), dtype=np.int64)
    oa = np.zeros((NS, 2), dtype=np.int64)
    sb = np.zeros((NS, 2), dtype=np.int64)
    ob = np.zeros((NS, 2), dtype=np.int64)
    span_lo = np.zeros((NS, 2), dtype=np.int64)
    span_hi = np.zeros((NS, 2), dtype=np.int64)
    is_const = np.zeros((NS, 2), dtype=np.uint8)
    clo = np.zeros((NS, 2), dtype=np.int64)
    chi = np.zeros((NS, 2), dtype=np.int64)
    ypt = np.zeros((NS, 2, 41), dtype=np.int64)
    _build_pair_tables(adj_ok, dis_ok, inc_kill, dec_kill)
    _build_geometry(mono, sa, oa, sb, ob, span_lo, span_hi, is_const, clo, chi, ypt)
    return (
        adj_ok, dis_ok, inc_kill, dec_kill, mono, sa, oa, sb, ob,
        span_lo, span_hi, is_const, clo, chi, ypt,
    )


_TABLES = None


def tables():
    global _TABLES
    if _TABLES is None:
        _TABLES = build_tables()
    return _TABLES


# --- per-line component counting -------------------------------------------

@njit(cache=True, inline="always")
def _components(los, his, m):
    for i in range(1, m):
        lo = los[i]
        hi = his[i]
        j = i - 1
        while j >= 0 and los[j] > lo:
            los[j + 1] = los[j]
            his[j + 1] = his[j]
            j -= 1
        los[j + 1] = lo
        his[j + 1] = hi
    count = 1
    cur = his[0]
    for i in range(1, m):
        if los[i] > cur:
            count += 1
            cur = his[i]
        elif his[i] > cur:
            cur = his[i]
    return count


@njit(cache=True, inline="always")
def _eighth_line_connected(segs, nsegs, k, axis,
                           span_lo, span_hi, is_const, clo, chi, ypt,
                           los, his):
    m = 0
    for i in range(nsegs):
        s = segs[i]
        if span_lo[s, axis] <= k <= span_hi[s, axis]:
            if is_const[s, axis] == 1:
                los[m] = clo[s, axis]
                his[m] = chi[s, axis]
            else:
                y = ypt[s, axis, k]
                los[m] = y
                his[m] = y
            m += 1
    if m < 2:
        return True
    return _components(los, his, m) <= 1


# --- shared vertex-line phase ----------------------------------------------

@njit(cache=True, inline="always")
def _vertex_lines_connected(segs, nsegs, coords, nc, axis,
                            span_lo, span_hi, is_const, clo, chi, ypt,
                            los, his):
    for t in range(nc):
        if not _eighth_line_connected(
            segs, nsegs, 8 * coords[t], axis,
            span_lo, span_hi, is_const, clo, chi, ypt, los, his,
        ):
            return False
    return True


# --- sample sweep (oracle) --------------------------------------------------

@njit(cache=True, inline="always")
def _strips_connected(segs, nsegs, coords, nc, axis,
                      span_lo, span_hi, is_const, clo, chi, ypt,
                      los, his):
    for t in range(nc - 1):
        base = 8 * coords[t]
        step = coords[t + 1] - coords[t]
        for i in range(1, 8):
            if not _eighth_line_connected(
                segs, nsegs, base + i * step, axis,
                span_lo, span_hi, is_const, clo, chi, ypt, los, his,
            ):
                return False
    return True


# --- event sweep (mirrors the package predicate) ----------------------------

@njit(cache=True)
def _events_connected(segs, nsegs, coords, nc, axis,
                      sa, oa, sb, ob, los, his, evn, evd):
    ne = 0
    for t in range(nc):
        evn[ne] = coords[t]
        evd[ne] = 1
        ne += 1
    for i in range(nsegs):
        si = segs[i]
        a1 = sa[si, axis]
        o1 = oa[si, axis]
        a2 = sb[si, axis]
        o2 = ob[si, axis]
        da1 = a2 - a1
        if da1 == 0:
            continue
        do1 = o2 - o1
        for j in range(i + 1, nsegs):
            sj = segs[j]
            a3 = sa[sj, axis]
            o3 = oa[sj, axis]
            a4 = sb[sj, axis]
            o4 = ob[sj, axis]
            da2 = a4 - a3
            if da2 == 0:
                continue
            do2 = o4 - o3
            den = do1 * da2 - do2 * da1
            if den == 0:
                continue
            num = da1 * (o3 * da2 - a3 * do2) - da2 * (o1 * da1 - a1 * do1)
            if den < 0:
                den = -den
                num = -num
            lo1 = a1 if a1 < a2 else a2
            hi1 = a1 + a2 - lo1
            lo2 = a3 if a3 < a4 else a4
            hi2 = a3 + a4 - lo2
            if num < lo1 * den or num > hi1 * den:
                continue
            if num < lo2 * den or num > hi2 * den:
                continue
            evn[ne] = num
            evd[ne] = den
            ne += 1
    for i in range(1, ne):
        n_ = evn[i]
        d_ = evd[i]
        j = i - 1
        while j >= 0 and evn[j] * d_ > n_ * evd[j]:
            evn[j + 1] = evn[j]
            evd[j + 1] = evd[j]
            j -= 1
        evn[j + 1] = n_
        evd[j + 1] = d_
    nu = 0
    for i in range(ne):
        if nu == 0 or evn[i] * evd[nu - 1] != evn[nu - 1] * evd[i]:
            evn[nu] = evn[i]
            evd[nu] = evd[i]
            nu += 1
    for t in range(2 * nu - 1):
        if t % 2 == 0:
            cn = evn[t // 2]
            cd = evd[t // 2]
        else:
            cn = evn[t // 2] * evd[t // 2 + 1] + evn[t // 2 + 1] * evd[t // 2]
            cd = 2 * evd[t // 2] * evd[t // 2 + 1]
        m = 0
        for q in range(nsegs):
            s = segs[q]
            a1 = sa[s, axis]
            o1 = oa[s, axis]
            a2 = sb[s, axis]
            o2 = ob[s, axis]
            if a1 == a2:
                if cn == a1 * cd:
                    ol = o1 if o1 < o2 else o2
                    los[m] = ol * cd * 60
                    his[m] = (o1 + o2 - ol) * cd * 60
                    m += 1
            else:
                lo1 = a1 if a1 < a2 else a2
                hi1 = a1 + a2 - lo1
                if lo1 * cd <= cn <= hi1 * cd:
                    da = a2 - a1
                    y = o1 * cd * 60 + (cn - a1 * cd) * (o2 - o1) * (60 // da)
                    los[m] = y
                    his[m] = y
                    m += 1
        if m >= 2 and _components(los, his, m) > 1:
            return False
    return True


# --- per-polyline verdicts ---------------------------------------------------

@njit(cache=True, inline="always")
def _axis_coords(vals, nv, out):
    nc = 0
    for i in range(nv):
        v = vals[i]
        known = False
        for t in range(nc):
            if out[t] == v:
                known = True
                break
        if known:
            continue
        j = nc - 1
        while j >= 0 and out[j] > v:
            out[j + 1] = out[j]
            j -= 1
        out[j + 1] = v
        nc += 1
    return nc


@njit(cache=True, inline="always")
def _verdicts(segs, nsegs, vx, vy, nv,
              sa, oa, sb, ob, span_lo, span_hi, is_const, clo, chi, ypt,
              coords0, coords1, los, his, evn, evd):
    nc0 = _axis_coords(vx, nv, coords0)
    nc1 = _axis_coords(vy, nv, coords1)
    if not _vertex_lines_connected(segs, nsegs, coords0, nc0, 0,
                                   span_lo, span_hi, is_const, clo, chi, ypt,
                                   los, his):
        return False, False
    if not _vertex_lines_connected(segs, nsegs, coords1, nc1, 1,
                                   span_lo, span_hi, is_const, clo, chi, ypt,
                                   los, his):
        return False, False
    oracle = (
        _strips_connected(segs, nsegs, coords0, nc0, 0,
                          span_lo, span_hi, is_const, clo, chi, ypt, los, his)
        and _strips_connected(segs, nsegs, coords1, nc1, 1,
                              span_lo, span_hi, is_const, clo, chi, ypt,
                              los, his)
    )
    pred = (
        _events_connected(segs, nsegs, coords0, nc0, 0,
                          sa, oa, sb, ob, los, his, evn, evd)
        and _events_connected(segs, nsegs, coords1, nc1, 1,
                              sa, oa, sb, ob, los, his, evn, evd)
    )
    return pred, oracle


@njit(cache=True, inline="always")
def _is_monotone(segs, nsegs, mono, inc_kill, dec_kill):
    inc = True
    dec = True
    for i in range(nsegs):
        b = mono[segs[i]]
        if b & 1 == 0:
            inc = False
        if b & 2 == 0:
            dec = False
    if not inc and not dec:
        return False
    for i in range(nsegs):
        for j in range(i + 1, nsegs):
            if inc and inc_kill[segs[i], segs[j]] == 1:
                inc = False
            if dec and dec_kill[segs[i], segs[j]] == 1:
                dec = False
            if not inc and not dec:
                return False
    return True


@njit(cache=True, inline="always")
def _is_simple(segs, nsegs, adj_ok, dis_ok):
    for i in range(nsegs - 1):
        if adj_ok[segs[i], segs[i + 1]] == 0:
            return False
    for i in range(nsegs):
        for j in range(i + 2, nsegs):
            if dis_ok[segs[i], segs[j]] == 0:
                return False
    return True


# counters layout:
#  0 polylines checked          5 simple count
#  1 event-sweep True           6 simple with (monotone != ortho)
#  2 sample-sweep True          7 monotone but not ortho
#  3 verdict disagreements      8 monotone count
#  4..  (9..14: first disagreeing vertex sequence, -1 padded)

@njit(cache=True)
def _enumerate_all(n,
                   adj_ok, dis_ok, inc_kill, dec_kill, mono,
                   sa, oa, sb, ob, span_lo, span_hi, is_const, clo, chi, ypt):
    counters = np.zeros(16, dtype=np.int64)
    segs = np.zeros(4, dtype=np.int64)
    vx = np.zeros(5, dtype=np.int64)
    vy = np.zeros(5, dtype=np.int64)
    vid = np.zeros(5, dtype=np.int64)
    coords0 = np.zeros(5, dtype=np.int64)
    coords1 = np.zeros(5, dtype=np.int64)
    los = np.zeros(8, dtype=np.int64)
    his = np.zeros(8, dtype=np.int64)
    evn = np.zeros(16, dtype=np.int64)
    evd = np.zeros(16, dtype=np.int64)
    nverts = n * n
    for u0 in range(nverts):
        v0 = (u0 // n) * BOARD + (u0 % n)
        vid[0] = v0
        vx[0] = v0 % BOARD
        vy[0] = v0 // BOARD
        for u1 in range(nverts):
            v1 = (u1 // n) * BOARD + (u1 % n)
            if v1 == v0:
                continue
            vid[1] = v1
            vx[1] = v1 % BOARD
            vy[1] = v1 // BOARD
            segs[0] = v0 * NV + v1
            _tally(counters, segs, 1, vx, vy, 2, vid,
                   adj_ok, dis_ok, inc_kill, dec_kill, mono, sa, oa, sb, ob,
                   span_lo, span_hi, is_const, clo, chi, ypt,
                   coords0, coords1, los, his, evn, evd)
            for u2 in range(nverts):
                v2 = (u2 // n) * BOARD + (u2 % n)
                if v2 == v1:
                    continue
                vid[2] = v2
                vx[2] = v2 % BOARD
                vy[2] = v2 // BOARD
                segs[1] = v1 * NV + v2
                _tally(counters, segs, 2, vx, vy, 3, vid,
                       adj_ok, dis_ok, inc_kill, dec_kill, mono,
                       sa, oa, sb, ob,
                       span_lo, span_hi, is_const, clo, chi, ypt,
                       coords0, coords1, los, his, evn, evd)
                for u3 in range(nverts):
                    v3 = (u3 // n) * BOARD + (u3 % n)
                    if v3 == v2:
                        continue
                    vid[3] = v3
                    vx[3] = v3 % BOARD
                    vy[3] = v3 // BOARD
                    segs[2] = v2 * NV + v3
                    _tally(counters, segs, 3, vx, vy, 4, vid,
                           adj_ok, dis_ok, inc_kill, dec_kill, mono,
                           sa, oa, sb, ob,
                           span_lo, span_hi, is_const, clo, chi, ypt,
                           coords0, coords1, los, his, evn, evd)
                    for u4 in range(nverts):
                        v4 = (u4 // n) * BOARD + (u4 % n)
                        if v4 == v3:
                            continue
                        vid[4] = v4
                        vx[4] = v4 % BOARD
                        vy[4] = v4 // BOARD
                        segs[3] = v3 * NV + v4
                        _tally(counters, segs, 4, vx, vy, 5, vid,
                               adj_ok, dis_ok, inc_kill, dec_kill, mono,
                               sa, oa, sb, ob,
                               span_lo, span_hi, is_const, clo, chi, ypt,
                               coords0, coords1, los, his, evn, evd)
    return counters


@njit(cache=True, inline="always")
def _tally(counters, segs, nsegs, vx, vy, nv, vid,
           adj_ok, dis_ok, inc_kill, dec_kill, mono, sa, oa, sb, ob,
           span_lo, span_hi, is_const, clo, chi, ypt,
           coords0, coords1, los, his, evn, evd):
    pred, oracle = _verdicts(segs, nsegs, vx, vy, nv,
                             sa, oa, sb, ob,
                             span_lo, span_hi, is_const, clo, chi, ypt,
                             coords0, coords1, los, his, evn, evd)
    counters[0] += 1
    if pred:
        counters[1] += 1
    if oracle:
        counters[2] += 1
    if pred != oracle:
        counters[3] += 1
        if counters[3] == 1:
            for i in range(5):
                counters[9 + i] = vid[i] if i < nv else -1
    monotone = _is_monotone(segs, nsegs, mono, inc_kill, dec_kill)
    if monotone:
        counters[8] += 1
        if not oracle:
            counters[7] += 1
    if _is_simple(segs, nsegs, adj_ok, dis_ok):
        counters[5] += 1
        if monotone != oracle:
            counters[6] += 1
    return


# --- python-facing wrappers --------------------------------------------------

def run_exhaustive(n=BOARD):
    """Check every vertex sequence of length 2..5 on the n x n sub-lattice."""
    (adj_ok, dis_ok, inc_kill, dec_kill, mono, sa, oa, sb, ob,
     span_lo, span_hi, is_const, clo, chi, ypt) = tables()
    counters = _enumerate_all(n, adj_ok, dis_ok, inc_kill, dec_kill, mono,
                              sa, oa, sb, ob,
                              span_lo, span_hi, is_const, clo, chi, ypt)
    return {
        "total": int(counters[0]),
        "event_true": int(counters[1]),
        "sample_true": int(counters[2]),
        "disagreements": int(counters[3]),
        "simple": int(counters[5]),
        "simple_lemma_violations": int(counters[6]),
        "monotone_not_ortho": int(counters[7]),
        "monotone": int(counters[8]),
        "first_disagreement": (
            [int(counters[9 + i]) for i in range(5)] if counters[3] else None
        ),
    }


def verdicts_for(points):
    """Kernel verdicts for one vertex sequence given as (x, y) integer pairs.

    Returns (event_sweep, sample_sweep, simple, monotone).
    """
    (adj_ok, dis_ok, inc_kill, dec_kill, mono, sa, oa, sb, ob,
     span_lo, span_hi, is_const, clo, chi, ypt) = tables()
    pts = [(int(x), int(y)) for x, y in points]
    if len(pts) < 2:
        return True, True, True, True
    for x, y in pts:
        if not (0 <= x < BOARD and 0 <= y < BOARD):
            raise ValueError("vertex off the 6x6 board")
    vx = np.zeros(5, dtype=np.int64)
    vy = np.zeros(5, dtype=np.int64)
    segs = np.zeros(4, dtype=np.int64)
    for i, (x, y) in enumerate(pts):
        vx[i] = x
        vy[i] = y
    nsegs = 0
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if (x0, y0) == (x1, y1):
            raise ValueError("repeated consecutive vertex")
        segs[nsegs] = (y0 * BOARD + x0) * NV + (y1 * BOARD + x1)
        nsegs += 1
    coords0 = np.zeros(5, dtype=np.int64)
    coords1 = np.zeros(5, dtype=np.int64)
    los = np.zeros(8, dtype=np.int64)
    his = np.zeros(8, dtype=np.int64)
    evn = np.zeros(16, dtype=np.int64)
    evd = np.zeros(16, dtype=np.int64)
    pred, oracle = _verdicts(segs, nsegs, vx, vy, len(pts),
                             sa, oa, sb, ob,
                             span_lo, span_hi, is_const, clo, chi, ypt,
                             coords0, coords1, los, his, evn, evd)
    monotone = bool(_is_monotone(segs, nsegs, mono, inc_kill, dec_kill))
    simple = bool(_is_simple(segs, nsegs, adj_ok, dis_ok))
    return bool(pred), bool(oracle), simple, monotone
