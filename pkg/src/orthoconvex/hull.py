"""Orthogonal convex hull of grid regions via row/column interval filling.

Filling every row and column span to a gap-free run is a closure operator:
monotone, inflationary, idempotent. Its fixpoint is the smallest superset of
the input whose rows and columns are all runs, which is what the hull
operations here compute and what the minimality tests certify against an
independent intersection-of-supersets oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Pt2, Rat, rat
from .errors import NonAlignedCell
from .regions import GridRegion, PointSet2

__all__ = ["HullResult", "ortho_hull", "ortho_hull_points"]


@dataclass(frozen=True)
class HullResult:
    """Hull region plus the number of fill passes needed to stabilize."""

    region: GridRegion
    iterations: int


def _fill_axis(cells: set[tuple[int, int]], axis: int) -> set[tuple[int, int]]:
    groups: dict[int, list[int]] = {}
    for c in cells:
        groups.setdefault(c[1 - axis], []).append(c[axis])
    out: set[tuple[int, int]] = set()
    for other, vals in groups.items():
        for v in range(min(vals), max(vals) + 1):
            out.add((v, other) if axis == 0 else (other, v))
    return out


def ortho_hull(region: GridRegion) -> HullResult:
    """Smallest row/column-run superset of the region, on the same lattice.

    Iterates row filling and column filling until neither changes the cell
    set; ``iterations`` counts the passes executed (at least 1 for nonempty
    input).
    """
    cells = set(region.cells)
    if not cells:
        return HullResult(region, 0)
    iterations = 0
    while True:
        iterations += 1
        filled = _fill_axis(_fill_axis(cells, 0), 1)
        if filled == cells:
            break
        cells = filled
    return HullResult(
        GridRegion(frozenset(cells), region.origin, region.cell), iterations
    )


def ortho_hull_points(
    points: PointSet2, cell: object = 1, origin: tuple = (0, 0)
) -> HullResult:
    """Hull of a finite point set, snapped to the lattice.

    Each point must be a lattice vertex of the given grid; it is represented
    by the cell having the point as its minimum corner. Raises NonAlignedCell
    otherwise.
    """
    c = rat(cell)
    o = Pt2(rat(origin[0]), rat(origin[1]))
    cells = set()
    for p in points.points:
        fx = (p.x - o.x) / c
        fy = (p.y - o.y) / c
        if fx.denominator != 1 or fy.denominator != 1:
            raise NonAlignedCell(f"point ({p.x}, {p.y}) is not a lattice vertex")
        cells.add((fx.numerator, fy.numerator))
    return ortho_hull(GridRegion(frozenset(cells), o, c))
