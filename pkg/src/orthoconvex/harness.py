"""Seeded generators for demos and property-test harnesses.

Everything here is deterministic given the Random instance or seed, so
reports built on top of these generators reproduce byte-for-byte.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .core import Pt2, Rat, rat
from .hull import ortho_hull
from .ndim import GridRegionN, ortho_hull_n
from .predicates import Polyline
from .regions import GridRegion, region_distance_sq

Cell = tuple[int, int]


def walk_cells(rng: random.Random, window: tuple[int, int], steps: int,
               start: Cell | None = None) -> frozenset[Cell]:
    """4-connected random walk clipped to [0,w)x[0,h)."""
    w, h = window
    if start is None:
        start = (rng.randrange(w), rng.randrange(h))
    cells = {start}
    cur = start
    for _ in range(steps):
        di, dj = rng.choice(((1, 0), (-1, 0), (0, 1), (0, -1)))
        nxt = (cur[0] + di, cur[1] + dj)
        if 0 <= nxt[0] < w and 0 <= nxt[1] < h:
            cur = nxt
            cells.add(cur)
    return frozenset(cells)


def random_ortho_region(rng: random.Random, window: tuple[int, int] = (20, 20),
                        steps: int = 8, start: Cell | None = None) -> GridRegion:
    """Random path-connected ortho-convex polyomino.

    Hull of a 4-connected walk: row/column filling preserves connectivity,
    and a connected region whose rows and columns are runs also satisfies
    the adjacent-line condition, so no rejection loop is needed.
    """
    seed = walk_cells(rng, window, steps, start)
    return ortho_hull(GridRegion.from_cells(seed)).region


def random_disjoint_pair(rng: random.Random, window: tuple[int, int] = (20, 20),
                         steps: int = 6) -> tuple[GridRegion, GridRegion]:
    """Two positively separated random ortho-convex regions in the window."""
    w, h = window
    while True:
        a = random_ortho_region(rng, window, steps,
                                start=(rng.randrange(w // 3), rng.randrange(h)))
        b = random_ortho_region(rng, window, steps,
                                start=(rng.randrange(2 * w // 3, w), rng.randrange(h)))
        if region_distance_sq(a, b) > 0:
            return a, b


def random_exterior_point(rng: random.Random, region: GridRegion,
                          margin: int = 3) -> Pt2:
    i0 = min(i for i, _ in region.cells)
    i1 = max(i for i, _ in region.cells)
    j0 = min(j for _, j in region.cells)
    j1 = max(j for _, j in region.cells)
    while True:
        den = rng.choice((1, 2, 3, 4, 8))
        x = Fraction(rng.randrange((i0 - margin) * den, (i1 + 1 + margin) * den), den)
        y = Fraction(rng.randrange((j0 - margin) * den, (j1 + 1 + margin) * den), den)
        p = Pt2(region.origin.x + x * region.cell, region.origin.y + y * region.cell)
        if not region.contains_point(p):
            return p


def random_monotone_polyline(rng: random.Random, box: int = 10,
                             max_segments: int = 6) -> Polyline:
    """Random rising or falling polyline with rational vertices in [0,box]^2.

    Coordinates move weakly in their class direction, so the result is
    monotone by construction; axis-flat runs appear with fair frequency.
    """
    nseg = rng.randrange(1, max_segments + 1)
    falling = rng.random() < 0.5

    def coords(n: int) -> list[Rat]:
        den = rng.choice((1, 2, 4, 8, 16, 32))
        vals = sorted(Fraction(rng.randrange(0, box * den + 1), den) for _ in range(n))
        return vals

    xs = coords(nseg + 1)
    ys = coords(nseg + 1)
    if falling:
        ys = ys[::-1]
    pts = []
    for x, y in zip(xs, ys):
        p = Pt2(rat(x), rat(y))
        if not pts or pts[-1] != p:
            pts.append(p)
    if len(pts) == 1:
        pts.append(Pt2(pts[0].x + 1, pts[0].y))
    return Polyline(tuple(pts))


def random_region_n(rng: random.Random, dim: int, side: int,
                    density: float = 0.35) -> GridRegionN:
    """Uniform random cell subset of [0,side)^dim (not necessarily convex)."""
    cells = []
    for flat in range(side ** dim):
        if rng.random() < density:
            c = []
            v = flat
            for _ in range(dim):
                c.append(v % side)
                v //= side
            cells.append(tuple(c))
    if not cells:
        cells.append((0,) * dim)
    return GridRegionN(dim, frozenset(cells))


def random_ortho_region_n(rng: random.Random, dim: int, side: int,
                          seeds: int = 5) -> GridRegionN:
    """Random ortho-convex lattice region: axis-fill fixpoint of a seed set."""
    cells = frozenset(
        tuple(rng.randrange(side) for _ in range(dim)) for _ in range(seeds)
    )
    return ortho_hull_n(GridRegionN(dim, cells))


# --- template sequence for the subsequence-selection demo -----------------
#
# Three polyomino shapes at pitch 1/16, origin (1/16, 1/16), anchored so the
# common left face sits at x = 9/8, a multiple of 1/8. Per-item jitter bumps
# a run of leftmost-column cells one cell to the left. A bump cell pokes at
# most 1/16 past the face, and for every tolerance t in {1, 1/2, 1/4, 1/8}
# either the face lies on a t-gridline (so the cell across it is already
# touched) or the face is at least 1/8 inside its t-cell; both ways the set
# of touched t-cells is unchanged, making jitter invisible to signatures at
# every schedule level while the three shapes stay mutually distinguishable.

_PITCH = Fraction(1, 16)
_ORIGIN = Pt2(Fraction(1, 16), Fraction(1, 16))
_LO, _HI = 17, 48  # 32x32 block of 1/16-cells, spans [9/8, 9/8+2]^2


def _template_cells(label: int) -> frozenset[Cell]:
    block = [(i, j) for i in range(_LO, _HI + 1) for j in range(_LO, _HI + 1)]
    if label == 0:  # full square block
        return frozenset(block)
    if label == 1:  # staircase cut across the NE corner
        return frozenset(
            (i, j) for (i, j) in block if (i - _LO) + (j - _LO) <= 40
        )
    if label == 2:  # plus: two centered 12-cell-wide bars
        return frozenset(
            (i, j) for (i, j) in block
            if 27 <= i <= 38 or 27 <= j <= 38
        )
    raise ValueError(f"no template {label}")


def _left_column_rows(cells: frozenset[Cell]) -> list[int]:
    lo = min(i for i, _ in cells)
    return sorted(j for i, j in cells if i == lo)


def template_sequence(seed: int = 2026, counts: tuple[int, int, int] = (80, 70, 50),
                      ) -> tuple[list[GridRegion], list[int]]:
    """Shuffled sequence of jittered template copies with ground-truth labels."""
    rng = random.Random(seed)
    labels = [0] * counts[0] + [1] * counts[1] + [2] * counts[2]
    rng.shuffle(labels)
    bases = {k: _template_cells(k) for k in range(3)}
    items = []
    for label in labels:
        cells = set(bases[label])
        rows = _left_column_rows(bases[label])
        bump_len = rng.randrange(0, 6)
        if bump_len:
            start = rng.randrange(0, len(rows) - bump_len + 1)
            run = rows[start:start + bump_len]
            # bumps only valid on contiguous row runs of the left column
            if run == list(range(run[0], run[0] + bump_len)):
                for j in run:
                    cells.add((_LO - 1, j))
        items.append(GridRegion(frozenset(cells), origin=_ORIGIN, cell=_PITCH))
    return items, labels
