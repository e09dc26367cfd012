"""Halfplane decomposition: four boundary chains, closedness, and the exact
represent/intersect roundtrip."""

from fractions import Fraction

import pytest

from orthoconvex.core import Pt2, rat
from orthoconvex.errors import NotOrthoConvex, NotPathConnected
from orthoconvex.harness import random_ortho_region
from orthoconvex.regions import GridRegion
from orthoconvex.representation import (
    HalfplaneFamily,
    StaircaseHalfplane,
    four_chain_decomposition,
    halfplane_contains,
    intersect_family,
)
from orthoconvex.separation import Side, StaircaseLine


def P(x, y) -> Pt2:
    return Pt2(rat(x), rat(y))


def vline(x) -> StaircaseLine:
    return StaircaseLine((P(x, 0),), (0, -1), (0, 1))


def test_halfplane_contains_is_closed():
    h = StaircaseHalfplane(vline(0), Side.LEFT)
    assert halfplane_contains(h, P(-1, 3))
    assert halfplane_contains(h, P(0, -5))  # boundary included
    assert not halfplane_contains(h, P("1/8", 0))


def test_halfplane_rejects_on_side():
    with pytest.raises(ValueError):
        StaircaseHalfplane(vline(0), Side.ON)


def test_unit_square_four_chains():
    sq = GridRegion.from_cells([(0, 0)])
    fam = four_chain_decomposition(sq)
    assert len(fam) == 4
    assert fam.contains(P("1/2", "1/2"))
    # all four edges and corners are inside the closed intersection
    for p in (P(0, 0), P(1, 0), P(0, 1), P(1, 1), P("1/2", 0), P(1, "1/2")):
        assert fam.contains(p)
    for p in (P("3/2", "1/2"), P("1/2", "3/2"), P(-1, 0), P(2, 2), P("1/2", -1)):
        assert not fam.contains(p)


def test_chain_lines_hug_staircase_boundary():
    stair = GridRegion.from_cells([(0, 0), (1, 0), (1, 1), (2, 1)])
    fam = four_chain_decomposition(stair)
    # interior cell centers are inside
    for c in stair.cells:
        assert fam.contains(P(Fraction(2 * c[0] + 1, 2), Fraction(2 * c[1] + 1, 2)))
    # the two missing corner cells of the bounding box are outside at center
    assert not fam.contains(P("1/2", "3/2"))
    assert not fam.contains(P("5/2", "1/2"))
    # notch corner point (1,1) is on the boundary, hence contained
    assert fam.contains(P(1, 1))


def test_decomposition_validates_input():
    with pytest.raises(NotPathConnected):
        four_chain_decomposition(GridRegion.from_cells([(0, 0), (2, 2)]))
    with pytest.raises(NotOrthoConvex):
        four_chain_decomposition(
            GridRegion.from_cells([(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)])
        )


def test_roundtrip_exact_fixture():
    stair = GridRegion.from_cells([(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)])
    fam = four_chain_decomposition(stair)
    back = intersect_family(fam, stair.origin, stair.cell, (-3, 6), (-3, 6))
    assert back.cells == stair.cells


def test_roundtrip_exact_random(rng):
    for _ in range(120):
        r = random_ortho_region(rng, (10, 10), rng.randrange(1, 9))
        fam = four_chain_decomposition(r)
        back = intersect_family(fam, r.origin, r.cell, (-2, 12), (-2, 12))
        assert back.cells == r.cells


def test_roundtrip_respects_lattice_scale():
    r = GridRegion.from_cells(
        [(0, 0), (0, 1), (1, 1)], origin=("1/4", "-1/2"), cell="1/2"
    )
    fam = four_chain_decomposition(r)
    back = intersect_family(fam, r.origin, r.cell, (-4, 8), (-4, 8))
    assert back.cells == r.cells


def test_intersection_can_be_empty():
    left = StaircaseHalfplane(vline(0), Side.LEFT)
    right = StaircaseHalfplane(vline(1), Side.RIGHT)
    fam = HalfplaneFamily((left, right))
    out = intersect_family(fam, P(0, 0), rat(1), (-5, 5), (-5, 5))
    assert out.cells == frozenset()


def test_intersection_of_halfplanes_is_closed_fixture():
    # strip 0 <= x <= 2: both boundary lines belong to the intersection
    fam = HalfplaneFamily(
        (
            StaircaseHalfplane(vline(0), Side.RIGHT),
            StaircaseHalfplane(vline(2), Side.LEFT),
        )
    )
    for p in (P(0, 7), P(2, -3), P(1, 0), P(0, 0)):
        assert fam.contains(p)
    assert not fam.contains(P("-1/8", 0))
    assert not fam.contains(P("17/8", 0))
    out = intersect_family(fam, P(0, 0), rat(1), (-4, 4), (-4, 4))
    assert out.cells == {(0, j) for j in range(-4, 5)} | {(1, j) for j in range(-4, 5)}


def test_window_clips_unbounded_intersection():
    fam = HalfplaneFamily((StaircaseHalfplane(vline(0), Side.RIGHT),))
    out = intersect_family(fam, P(0, 0), rat(1), (-2, 2), (0, 1))
    assert out.cells == {(i, j) for i in range(0, 3) for j in (0, 1)}
