"""Grid regions on a rational lattice and their orthogonal-convexity tests.

A :class:`GridRegion` is a finite union of closed square cells of pitch
``cell`` anchored at ``origin``; cells are addressed by integer index pairs
``(i, j)``. The closed-set point of view matters: an axis-parallel line on
the shared boundary of two cell columns meets the closure of both, which is
why :func:`is_ortho_convex_region` checks adjacent index unions and not just
per-row/per-column runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .core import AxisRect, Pt2, Rat, rat
from .errors import EmptyInput, NonAlignedCell, ParseError

__all__ = [
    "GridRegion",
    "PointSet2",
    "RectilinearPolygon",
    "polygon_to_region",
    "is_path_connected",
    "is_ortho_convex_region",
    "region_distance_sq",
    "point_region_distance_sq",
    "boundary_cells",
    "contiguous",
    "touching_index_range",
]

Cell = tuple[int, int]


def contiguous(indices: Iterable[int]) -> bool:
    """True iff the integer set forms a run with no gaps (empty => True)."""
    s = set(indices)
    if not s:
        return True
    return max(s) - min(s) + 1 == len(s)


@dataclass(frozen=True)
class GridRegion:
    """Finite union of closed axis-aligned square cells.

    Cell ``(i, j)`` occupies
    ``[origin.x + i*cell, origin.x + (i+1)*cell] x
    [origin.y + j*cell, origin.y + (j+1)*cell]``.
    """

    cells: frozenset[Cell]
    origin: Pt2 = Pt2(Rat(0), Rat(0))
    cell: Rat = Rat(1)

    def __post_init__(self) -> None:
        if self.cell <= 0:
            raise ParseError(f"cell pitch must be positive, got {self.cell}")

    @classmethod
    def from_cells(
        cls,
        cells: Iterable[Cell],
        origin: tuple = (0, 0),
        cell: object = 1,
    ) -> "GridRegion":
        pts = frozenset((int(i), int(j)) for i, j in cells)
        return cls(pts, Pt2(rat(origin[0]), rat(origin[1])), rat(cell))

    def __len__(self) -> int:
        return len(self.cells)

    def cell_rect(self, ij: Cell) -> AxisRect:
        i, j = ij
        x0 = self.origin.x + i * self.cell
        y0 = self.origin.y + j * self.cell
        return AxisRect(x0, x0 + self.cell, y0, y0 + self.cell)

    def bbox(self) -> AxisRect:
        if not self.cells:
            raise EmptyInput("bbox of empty region")
        xs = [i for i, _ in self.cells]
        ys = [j for _, j in self.cells]
        return AxisRect(
            self.origin.x + min(xs) * self.cell,
            self.origin.x + (max(xs) + 1) * self.cell,
            self.origin.y + min(ys) * self.cell,
            self.origin.y + (max(ys) + 1) * self.cell,
        )

    def corner_points(self) -> set[Pt2]:
        """All distinct cell corner points of the region."""
        corners: set[Pt2] = set()
        for i, j in self.cells:
            for di in (0, 1):
                for dj in (0, 1):
                    corners.add(
                        Pt2(
                            self.origin.x + (i + di) * self.cell,
                            self.origin.y + (j + dj) * self.cell,
                        )
                    )
        return corners

    def contains_point(self, p: Pt2) -> bool:
        """Membership of p in the closed union of cells."""
        fx = (p.x - self.origin.x) / self.cell
        fy = (p.y - self.origin.y) / self.cell
        ix, iy = _floor_rat(fx), _floor_rat(fy)
        cand_i = {ix, ix - 1} if fx == ix else {ix}
        cand_j = {iy, iy - 1} if fy == iy else {iy}
        return any((i, j) in self.cells for i in cand_i for j in cand_j)


def _floor_rat(x: Rat) -> int:
    return x.numerator // x.denominator


def touching_index_range(lo: Rat, hi: Rat, pitch: Rat) -> tuple[int, int]:
    """Indices k whose closed pitch-cell [k*pitch, (k+1)*pitch] meets the
    closed interval [lo, hi]. A boundary exactly on a gridline touches the
    cells on both of its sides."""
    qlo = lo / pitch
    qhi = hi / pitch
    kmin = qlo.numerator - 1 if qlo.denominator == 1 else _floor_rat(qlo)
    kmax = qhi.numerator if qhi.denominator == 1 else _floor_rat(qhi)
    return kmin, kmax


@dataclass(frozen=True)
class PointSet2:
    """A finite set of exact points, used as a distance/limit carrier."""

    points: frozenset[Pt2]

    @classmethod
    def of(cls, pts) -> "PointSet2":
        return cls(frozenset(Pt2(rat(x), rat(y)) for x, y in pts))

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class RectilinearPolygon:
    """Simple closed rectilinear polygon, normalized to CCW orientation.

    Vertices must alternate horizontal and vertical edges; the closing edge
    (last vertex back to the first) counts. Zero-length edges and
    self-intersections are rejected.
    """

    vertices: tuple[Pt2, ...]

    def __post_init__(self) -> None:
        v = self.vertices
        n = len(v)
        if n < 4:
            raise ParseError("rectilinear polygon needs at least 4 vertices")
        for k in range(n):
            a, b = v[k], v[(k + 1) % n]
            if a == b:
                raise ParseError(f"zero-length polygon edge at vertex {k}")
            if a.x != b.x and a.y != b.y:
                raise ParseError(f"polygon edge {k} is not axis-parallel")
        for k in range(n):
            a, b = v[k], v[(k + 1) % n]
            c, d = v[(k + 1) % n], v[(k + 2) % n]
            horiz_ab = a.y == b.y
            horiz_cd = c.y == d.y
            if horiz_ab == horiz_cd:
                raise ParseError(f"consecutive collinear edges at vertex {k}")
        if _polygon_self_intersects(v):
            raise ParseError("polygon is self-intersecting")
        if _signed_area2(v) < 0:
            object.__setattr__(self, "vertices", (v[0],) + tuple(reversed(v[1:])))

    @classmethod
    def of(cls, pts) -> "RectilinearPolygon":
        return cls(tuple(Pt2(rat(x), rat(y)) for x, y in pts))


def _signed_area2(v: tuple[Pt2, ...]) -> Rat:
    total = Rat(0)
    for k in range(len(v)):
        a, b = v[k], v[(k + 1) % len(v)]
        total += a.x * b.y - b.x * a.y
    return total


def _polygon_self_intersects(v: tuple[Pt2, ...]) -> bool:
    # axis-parallel edges only: exact overlap / crossing tests
    n = len(v)
    edges = [(v[k], v[(k + 1) % n]) for k in range(n)]

    def span(a: Rat, b: Rat) -> tuple[Rat, Rat]:
        return (a, b) if a <= b else (b, a)

    for i in range(n):
        for j in range(i + 1, n):
            adjacent = j == i + 1 or (i == 0 and j == n - 1)
            a, b = edges[i]
            c, d = edges[j]
            hi, hj = a.y == b.y, c.y == d.y
            if hi and hj:
                if a.y != c.y:
                    continue
                lo1, hi1 = span(a.x, b.x)
                lo2, hi2 = span(c.x, d.x)
                if max(lo1, lo2) < min(hi1, hi2):
                    return True
                if max(lo1, lo2) == min(hi1, hi2) and not adjacent:
                    return True
            elif not hi and not hj:
                if a.x != c.x:
                    continue
                lo1, hi1 = span(a.y, b.y)
                lo2, hi2 = span(c.y, d.y)
                if max(lo1, lo2) < min(hi1, hi2):
                    return True
                if max(lo1, lo2) == min(hi1, hi2) and not adjacent:
                    return True
            else:
                if hj:
                    a, b, c, d = c, d, a, b  # make (a,b) horizontal
                lo1, hi1 = span(a.x, b.x)
                lo2, hi2 = span(c.y, d.y)
                x, y = c.x, a.y
                strict = lo1 < x < hi1 and lo2 < y < hi2
                touch = lo1 <= x <= hi1 and lo2 <= y <= hi2
                if strict:
                    return True
                if touch and not adjacent:
                    # sharing just the common vertex of adjacent edges is fine;
                    # any other touch makes the polygon non-simple
                    return True
    return False


def polygon_to_region(
    poly: RectilinearPolygon,
    cell: Rat,
    origin: Optional[Pt2] = None,
) -> GridRegion:
    """Tile the closed interior of a rectilinear polygon by grid cells.

    Raises NonAlignedCell unless every vertex lies on the grid
    ``origin + cell * Z^2`` (origin defaults to the bbox min corner).
    """
    cell = rat(cell)
    if cell <= 0:
        raise ParseError(f"cell pitch must be positive, got {cell}")
    xs = [p.x for p in poly.vertices]
    ys = [p.y for p in poly.vertices]
    if origin is None:
        origin = Pt2(min(xs), min(ys))
    for p in poly.vertices:
        for delta in (p.x - origin.x, p.y - origin.y):
            if (delta / cell).denominator != 1:
                raise NonAlignedCell(
                    f"vertex ({p.x}, {p.y}) not on the cell-{cell} grid"
                )
    i_lo = int((min(xs) - origin.x) / cell)
    i_hi = int((max(xs) - origin.x) / cell)
    j_lo = int((min(ys) - origin.y) / cell)
    j_hi = int((max(ys) - origin.y) / cell)
    cells = set()
    for i in range(i_lo, i_hi):
        cx = origin.x + i * cell + cell / 2
        for j in range(j_lo, j_hi):
            cy = origin.y + j * cell + cell / 2
            if _point_in_polygon(poly, cx, cy):
                cells.add((i, j))
    return GridRegion(frozenset(cells), origin, cell)


def _point_in_polygon(poly: RectilinearPolygon, px: Rat, py: Rat) -> bool:
    # even-odd ray cast to +x; the query point is a cell center, so it never
    # sits on an edge of a grid-aligned polygon
    v = poly.vertices
    n = len(v)
    inside = False
    for k in range(n):
        a, b = v[k], v[(k + 1) % n]
        if a.x != b.x:
            continue  # only vertical edges can cross a horizontal ray
        y_lo, y_hi = (a.y, b.y) if a.y <= b.y else (b.y, a.y)
        if y_lo <= py < y_hi and a.x > px:
            inside = not inside
    return inside


def is_path_connected(region: GridRegion) -> bool:
    """Connectivity of the closed union. Cells touching only at a corner
    still connect (the union is closed), hence 8-neighbor adjacency.
    Empty regions count as connected."""
    if not region.cells:
        return True
    cells = region.cells
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        i, j = stack.pop()
        for di in (-1, 0, 1):
            for dj in (-1, 0, 1):
                nb = (i + di, j + dj)
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
    return len(seen) == len(cells)


def is_ortho_convex_region(region: GridRegion) -> bool:
    """Every axis-parallel line meets the closed union in a connected set.

    Lines strictly inside a cell row/column see that row's/column's index
    set; lines on a shared lattice boundary see the union of both adjacent
    index sets. All of those must be gap-free runs.
    """
    cols: dict[int, set[int]] = {}
    rows: dict[int, set[int]] = {}
    for i, j in region.cells:
        cols.setdefault(i, set()).add(j)
        rows.setdefault(j, set()).add(i)
    for table in (cols, rows):
        for idx, members in table.items():
            if not contiguous(members):
                return False
            nxt = table.get(idx + 1)
            if nxt and not contiguous(members | nxt):
                return False
    return True


def boundary_cells(cells: frozenset[Cell]) -> list[Cell]:
    """Cells with at least one absent axis neighbor.

    Minimum distances between closed cell unions are achieved on their
    topological boundaries, and every boundary point lies on a face of a
    cell whose across-face neighbor is missing, so pruning to these cells
    preserves exact distances.
    """
    out = []
    for i, j in cells:
        if (
            (i - 1, j) not in cells
            or (i + 1, j) not in cells
            or (i, j - 1) not in cells
            or (i, j + 1) not in cells
        ):
            out.append((i, j))
    return out


_INT64_SAFE = 2**31


def region_distance_sq(a: GridRegion, b: GridRegion) -> Rat:
    """Exact squared Euclidean distance between two closed cell unions.

    Box-gap formula per cell pair; vectorized over int64 after rescaling to
    a common denominator, with a pure-rational fallback when the scaled
    coordinates would overflow.
    """
    if not a.cells or not b.cells:
        raise EmptyInput("distance needs two nonempty regions")
    pa = boundary_cells(a.cells)
    pb = boundary_cells(b.cells)

    scale = _common_scale(
        a.origin.x, a.origin.y, a.cell, b.origin.x, b.origin.y, b.cell
    )
    boxes_a = _scaled_boxes(a, pa, scale)
    boxes_b = _scaled_boxes(b, pb, scale)
    if boxes_a is not None and boxes_b is not None:
        d2 = _min_gap_sq_int(boxes_a, boxes_b)
        return Rat(int(d2), scale * scale)

    best: Optional[Rat] = None
    for ca in pa:
        ra = a.cell_rect(ca)
        for cb in pb:
            rb = b.cell_rect(cb)
            dx = max(Rat(0), ra.xmin - rb.xmax, rb.xmin - ra.xmax)
            dy = max(Rat(0), ra.ymin - rb.ymax, rb.ymin - ra.ymax)
            d2 = dx * dx + dy * dy
            if best is None or d2 < best:
                best = d2
                if best == 0:
                    return best
    assert best is not None
    return best


def point_region_distance_sq(p: Pt2, region: GridRegion) -> Rat:
    """Exact squared distance from a point to a closed cell union."""
    if not region.cells:
        raise EmptyInput("distance to an empty region")
    if region.contains_point(p):
        # the boundary prune below would miss containment in interior cells
        return Rat(0)
    best: Optional[Rat] = None
    for ij in boundary_cells(region.cells):
        r = region.cell_rect(ij)
        dx = max(Rat(0), r.xmin - p.x, p.x - r.xmax)
        dy = max(Rat(0), r.ymin - p.y, p.y - r.ymax)
        d2 = dx * dx + dy * dy
        if best is None or d2 < best:
            best = d2
            if best == 0:
                return best
    assert best is not None
    return best


def _common_scale(*values: Rat) -> int:
    scale = 1
    for v in values:
        scale = scale * v.denominator // np.gcd(scale, v.denominator)
    return int(scale)


def _scaled_boxes(region: GridRegion, cells: list[Cell], scale: int):
    """(n, 4) int64 array [xmin, xmax, ymin, ymax], or None on overflow."""
    ox = region.origin.x * scale
    oy = region.origin.y * scale
    c = region.cell * scale
    assert ox.denominator == oy.denominator == c.denominator == 1
    ox, oy, c = int(ox), int(oy), int(c)
    arr = np.empty((len(cells), 4), dtype=np.int64)
    for k, (i, j) in enumerate(cells):
        x0 = ox + i * c
        y0 = oy + j * c
        vals = (x0, x0 + c, y0, y0 + c)
        if any(abs(v) >= _INT64_SAFE for v in vals):
            return None
        arr[k] = vals
    return arr


def _min_gap_sq_int(boxes_a: np.ndarray, boxes_b: np.ndarray) -> int:
    best = None
    chunk = 2048
    for lo in range(0, len(boxes_b), chunk):
        bb = boxes_b[lo : lo + chunk]
        dx = np.maximum(
            0,
            np.maximum(
                boxes_a[:, None, 0] - bb[None, :, 1],
                bb[None, :, 0] - boxes_a[:, None, 1],
            ),
        )
        dy = np.maximum(
            0,
            np.maximum(
                boxes_a[:, None, 2] - bb[None, :, 3],
                bb[None, :, 2] - boxes_a[:, None, 3],
            ),
        )
        d2 = dx * dx + dy * dy
        m = int(d2.min())
        if best is None or m < best:
            best = m
        if best == 0:
            return 0
    assert best is not None
    return best
