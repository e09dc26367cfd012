"""Ortho-convexity on n-dimensional integer lattices.

Cells are integer index tuples; the region is the union of the closed unit
cubes they address. The predicate here is the index-level one: along every
axis, the cells sharing all other coordinates must form a gap-free run.
Three independently implemented characterizations of that property are
compared by :func:`check_equivalences`:

(a) per-axis run contiguity of the index set,
(b) connectivity of the region's slice along every axis line through the
    cell centers of the bounding box,
(c) for every pair of cells differing in exactly one coordinate, presence
    of all the cells between them along that axis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .errors import EmptyInput, ParseError
from .regions import contiguous

__all__ = [
    "GridRegionN",
    "is_ortho_convex_n",
    "slice_region",
    "check_equivalences",
    "ortho_hull_n",
    "interior_region",
]

CellN = tuple[int, ...]


@dataclass(frozen=True)
class GridRegionN:
    """Finite set of unit lattice cells in dimension ``dim``."""

    dim: int
    cells: frozenset[CellN]

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ParseError(f"dimension must be >= 1, got {self.dim}")
        for c in self.cells:
            if len(c) != self.dim:
                raise ParseError(f"cell {c} does not have {self.dim} coordinates")

    @classmethod
    def of(cls, dim: int, cells: Iterable[Iterable[int]]) -> "GridRegionN":
        return cls(dim, frozenset(tuple(int(v) for v in c) for c in cells))

    def __len__(self) -> int:
        return len(self.cells)

    def bounds(self) -> list[tuple[int, int]]:
        if not self.cells:
            raise EmptyInput("bounds of empty region")
        return [
            (min(c[k] for c in self.cells), max(c[k] for c in self.cells))
            for k in range(self.dim)
        ]


def _axis_groups(region: GridRegionN, axis: int) -> dict[CellN, set[int]]:
    groups: dict[CellN, set[int]] = {}
    for c in region.cells:
        key = c[:axis] + c[axis + 1 :]
        groups.setdefault(key, set()).add(c[axis])
    return groups


def is_ortho_convex_n(region: GridRegionN) -> bool:
    """Index-level ortho-convexity: every axis-aligned run of cells sharing
    the remaining coordinates is contiguous."""
    for axis in range(region.dim):
        for members in _axis_groups(region, axis).values():
            if not contiguous(members):
                return False
    return True


def slice_region(region: GridRegionN, axis: int, value: int) -> GridRegionN:
    """Cells with the given coordinate, with that coordinate dropped."""
    if not 0 <= axis < region.dim:
        raise ParseError(f"axis {axis} out of range for dim {region.dim}")
    if region.dim == 1:
        raise ParseError("cannot slice a 1-dimensional region")
    kept = frozenset(
        c[:axis] + c[axis + 1 :] for c in region.cells if c[axis] == value
    )
    return GridRegionN(region.dim - 1, kept)


def _ortho_by_center_lines(region: GridRegionN) -> bool:
    # sweep every axis line through cell centers of the full bounding box
    if not region.cells:
        return True
    bounds = region.bounds()
    for axis in range(region.dim):
        other_ranges = [
            range(lo, hi + 1) for k, (lo, hi) in enumerate(bounds) if k != axis
        ]
        for other in itertools.product(*other_ranges):
            hit = []
            for v in range(bounds[axis][0], bounds[axis][1] + 1):
                cell = other[:axis] + (v,) + other[axis:]
                if cell in region.cells:
                    hit.append(v)
            if hit and (max(hit) - min(hit) + 1 != len(hit)):
                return False
    return True


def _ortho_by_cell_pairs(region: GridRegionN) -> bool:
    # bridge condition on every cell pair differing in one coordinate
    cells = region.cells
    for a in cells:
        for b in cells:
            diff = [k for k in range(region.dim) if a[k] != b[k]]
            if len(diff) != 1:
                continue
            k = diff[0]
            lo, hi = min(a[k], b[k]), max(a[k], b[k])
            for v in range(lo + 1, hi):
                if a[:k] + (v,) + a[k + 1 :] not in cells:
                    return False
    return True


def check_equivalences(region: GridRegionN) -> dict:
    """Evaluate the three characterizations independently and report whether
    they agree (they must, for every input)."""
    a = is_ortho_convex_n(region)
    b = _ortho_by_center_lines(region)
    c = _ortho_by_cell_pairs(region)
    return {
        "axis_runs": a,
        "center_lines": b,
        "cell_pairs": c,
        "agree": a == b == c,
        "value": a,
    }


def ortho_hull_n(region: GridRegionN) -> GridRegionN:
    """Smallest per-axis-run superset: iterate axis filling to a fixpoint."""
    cells = set(region.cells)
    if not cells:
        return region
    changed = True
    while changed:
        changed = False
        for axis in range(region.dim):
            groups: dict[CellN, list[int]] = {}
            for c in cells:
                groups.setdefault(c[:axis] + c[axis + 1 :], []).append(c[axis])
            for key, vals in groups.items():
                for v in range(min(vals), max(vals) + 1):
                    cell = key[:axis] + (v,) + key[axis:]
                    if cell not in cells:
                        cells.add(cell)
                        changed = True
    return GridRegionN(region.dim, frozenset(cells))


def interior_region(region: GridRegionN) -> GridRegionN:
    """Cells whose 2*dim axis neighbors are all present (lattice erosion)."""
    kept = set()
    for c in region.cells:
        ok = True
        for k in range(region.dim):
            for d in (-1, 1):
                nb = c[:k] + (c[k] + d,) + c[k + 1 :]
                if nb not in region.cells:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            kept.add(c)
    return GridRegionN(region.dim, frozenset(kept))
