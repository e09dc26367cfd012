"""Exact computational toolkit for orthogonal convexity in the plane.

A set is orthogonally convex when every axis-parallel line meets it in a
connected piece. The package provides predicates for grid regions, polygonal
paths and n-dimensional lattice sets, orthogonal convex hulls, constructive
separation of disjoint sets by monotone staircase lines, halfplane
representations, certified Hausdorff-distance intervals, shortest paths
inside regions, and a compactness-style subsequence selector. All geometry
is exact over the rationals; square roots are reported as certified
intervals of requested width.
"""

from .core import AxisRect, AxisSegment, Pt2, Rat, norm1, norm2_sq, rat, rat_str, sqrt_interval
from .errors import (
    ConstructionFailed,
    EmptyInput,
    GeometryError,
    InsufficientItems,
    NonAlignedCell,
    NotAxisAligned,
    NotDisjoint,
    NotMonotone,
    NotOrthoConvex,
    NotPathConnected,
    ParseError,
    PointInside,
    PointOutside,
    PreconditionViolated,
    UnknownObject,
)
from .hull import HullResult, ortho_hull, ortho_hull_points
from .limits import (
    BlaschkeResult,
    ClosureReport,
    HausdorffDist,
    OpenSegment,
    SegmentSet,
    blaschke_select,
    closure_preserves,
    hausdorff,
    is_ortho_convex_segments,
    path_convergence_report,
    region_signature,
    segment_closure,
    shortest_ortho_path,
)
from .ndim import (
    GridRegionN,
    check_equivalences,
    interior_region,
    is_ortho_convex_n,
    ortho_hull_n,
    slice_region,
)
from .predicates import (
    MonotoneClass,
    Polyline,
    SandwichResult,
    check_sandwich,
    classify_monotone,
    is_ortho_convex_path,
    path_length,
)
from .regions import (
    GridRegion,
    PointSet2,
    RectilinearPolygon,
    boundary_cells,
    is_ortho_convex_region,
    is_path_connected,
    point_region_distance_sq,
    polygon_to_region,
    region_distance_sq,
)
from .representation import (
    HalfplaneFamily,
    StaircaseHalfplane,
    four_chain_decomposition,
    halfplane_contains,
    intersect_family,
)
from .separation import (
    SeparationCert,
    Side,
    StaircaseLine,
    separate_point,
    separate_sets,
    side_of,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "AxisRect",
    "AxisSegment",
    "BlaschkeResult",
    "ClosureReport",
    "ConstructionFailed",
    "EmptyInput",
    "GeometryError",
    "GridRegion",
    "GridRegionN",
    "HalfplaneFamily",
    "HausdorffDist",
    "HullResult",
    "InsufficientItems",
    "MonotoneClass",
    "NonAlignedCell",
    "NotAxisAligned",
    "NotDisjoint",
    "NotMonotone",
    "NotOrthoConvex",
    "NotPathConnected",
    "OpenSegment",
    "ParseError",
    "PointInside",
    "PointOutside",
    "PointSet2",
    "Polyline",
    "PreconditionViolated",
    "Pt2",
    "Rat",
    "RectilinearPolygon",
    "SandwichResult",
    "SegmentSet",
    "SeparationCert",
    "Side",
    "StaircaseHalfplane",
    "StaircaseLine",
    "UnknownObject",
    "blaschke_select",
    "boundary_cells",
    "check_equivalences",
    "check_sandwich",
    "classify_monotone",
    "closure_preserves",
    "four_chain_decomposition",
    "halfplane_contains",
    "hausdorff",
    "interior_region",
    "intersect_family",
    "is_ortho_convex_n",
    "is_ortho_convex_path",
    "is_ortho_convex_region",
    "is_ortho_convex_segments",
    "is_path_connected",
    "norm1",
    "norm2_sq",
    "ortho_hull",
    "ortho_hull_n",
    "ortho_hull_points",
    "path_convergence_report",
    "path_length",
    "point_region_distance_sq",
    "polygon_to_region",
    "rat",
    "rat_str",
    "region_distance_sq",
    "region_signature",
    "segment_closure",
    "separate_point",
    "separate_sets",
    "shortest_ortho_path",
    "side_of",
    "slice_region",
    "sqrt_interval",
    "verify_certificate",
]
