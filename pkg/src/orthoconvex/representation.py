"""Staircase halfplanes: decomposition and exact intersection on a lattice.

A path-connected ortho-convex region is the intersection of four closed
staircase halfplanes, one per compass direction, each bounded by a chain
line that hugs the corresponding boundary profile of the region. Degenerate
profiles collapse chains to single-corner L lines; for an axis-aligned
rectangle all four collapse and the family is semantically the rectangle's
four supporting halfplanes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Pt2, Rat
from .regions import GridRegion
from .separation import (
    Side,
    StaircaseLine,
    _profile_chain,
    _require_ortho_connected,
    region_column_profile,
)

__all__ = [
    "StaircaseHalfplane",
    "HalfplaneFamily",
    "halfplane_contains",
    "four_chain_decomposition",
    "intersect_family",
]


@dataclass(frozen=True)
class StaircaseHalfplane:
    """Closed halfplane: the given strict side of the line, plus the line."""

    line: StaircaseLine
    side: Side

    def __post_init__(self) -> None:
        if self.side == Side.ON:
            raise ValueError("halfplane side must be left or right")


def halfplane_contains(h: StaircaseHalfplane, p: Pt2) -> bool:
    s = h.line.side_of(p)
    return s == h.side or s == Side.ON


@dataclass(frozen=True)
class HalfplaneFamily:
    halfplanes: tuple[StaircaseHalfplane, ...]

    def contains(self, p: Pt2) -> bool:
        return all(halfplane_contains(h, p) for h in self.halfplanes)

    def __len__(self) -> int:
        return len(self.halfplanes)


def four_chain_decomposition(region: GridRegion) -> HalfplaneFamily:
    """The four boundary-chain halfplanes of a path-connected ortho-convex
    region, ordered NE, SE, SW, NW.

    Each chain line touches the region only along boundary edges, so any
    cell center determines the region's strict side of that chain.
    """
    _require_ortho_connected(region, "region")
    cols = region_column_profile(region)
    probe_cell = min(region.cells)
    half = region.cell / 2
    probe = Pt2(
        region.origin.x + probe_cell[0] * region.cell + half,
        region.origin.y + probe_cell[1] * region.cell + half,
    )
    halfplanes = []
    for which in ("ne", "se", "sw", "nw"):
        line = _profile_chain(region.origin, region.cell, cols, which)
        side = line.side_of(probe)
        assert side != Side.ON, "cell center cannot lie on a boundary chain"
        halfplanes.append(StaircaseHalfplane(line, side))
    return HalfplaneFamily(tuple(halfplanes))


def intersect_family(
    family: HalfplaneFamily,
    origin: Pt2,
    cell: Rat,
    i_range: tuple[int, int],
    j_range: tuple[int, int],
) -> GridRegion:
    """Materialize the cells of the given lattice window lying inside every
    halfplane of the family.

    A cell is included iff its four corners are: a staircase line with all
    four corners of a box strictly on one side cannot meet the box (a
    monotone curve entering an axis-aligned box must cross its boundary on
    two sides whose corners would then disagree), so corner membership in
    each closed halfplane decides whole-cell membership exactly.
    """
    i0, i1 = i_range
    j0, j1 = j_range
    corner_ok: dict[tuple[int, int], bool] = {}

    def ok(ci: int, cj: int) -> bool:
        key = (ci, cj)
        if key not in corner_ok:
            p = Pt2(origin.x + ci * cell, origin.y + cj * cell)
            corner_ok[key] = family.contains(p)
        return corner_ok[key]

    cells = set()
    for i in range(i0, i1 + 1):
        for j in range(j0, j1 + 1):
            if ok(i, j) and ok(i + 1, j) and ok(i, j + 1) and ok(i + 1, j + 1):
                cells.add((i, j))
    return GridRegion(frozenset(cells), origin, cell)
