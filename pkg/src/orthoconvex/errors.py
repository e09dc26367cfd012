"""Error taxonomy shared by the library and the CLI.

Every failure the toolkit can signal deliberately carries a stable ``code``
string so CLI reports and tests can match on it without parsing messages.
Input/usage problems map to CLI exit status 1, violated mathematical
preconditions to exit status 2.
"""

from __future__ import annotations

__all__ = [
    "GeometryError",
    "ParseError",
    "UnknownObject",
    "NonAlignedCell",
    "EmptyInput",
    "NotMonotone",
    "NotAxisAligned",
    "NotPathConnected",
    "NotOrthoConvex",
    "PointInside",
    "PointOutside",
    "NotDisjoint",
    "ConstructionFailed",
    "PreconditionViolated",
    "InsufficientItems",
    "EXIT_USAGE",
    "EXIT_PRECONDITION",
]

EXIT_USAGE = 1
EXIT_PRECONDITION = 2


class GeometryError(Exception):
    """Base class for all deliberate failures raised by this package."""

    code: str = "geometry_error"
    exit_status: int = EXIT_PRECONDITION

    def payload(self) -> dict:
        return {
            "error": type(self).__name__,
            "code": self.code,
            "message": str(self),
        }


class ParseError(GeometryError):
    """Malformed scene file, rational literal, or CLI argument."""

    code = "parse_error"
    exit_status = EXIT_USAGE


class UnknownObject(GeometryError):
    """A scene object name that the scene file does not define."""

    code = "unknown_object"
    exit_status = EXIT_USAGE


class NonAlignedCell(GeometryError):
    """Polygon cannot be tiled by the requested cell pitch."""

    code = "non_aligned_cell"
    exit_status = EXIT_USAGE


class EmptyInput(GeometryError):
    """An operation that needs a nonempty set received an empty one."""

    code = "empty_input"


class PreconditionViolated(GeometryError):
    """Generic mathematical precondition failure."""

    code = "precondition_violated"


class NotMonotone(PreconditionViolated):
    code = "not_monotone"


class NotAxisAligned(PreconditionViolated):
    code = "not_axis_aligned"


class NotPathConnected(PreconditionViolated):
    code = "not_path_connected"


class NotOrthoConvex(PreconditionViolated):
    code = "not_ortho_convex"


class PointInside(PreconditionViolated):
    """Point claimed exterior actually lies in the closed set."""

    code = "point_inside"


class PointOutside(PreconditionViolated):
    code = "point_outside"


class NotDisjoint(PreconditionViolated):
    """Two sets required to be disjoint (positive distance) touch."""

    code = "not_disjoint"


class ConstructionFailed(GeometryError):
    """No candidate certificate verified.

    Raised as an honest guard after exhausting a candidate family whose
    completeness we argue but still verify per-instance.
    """

    code = "construction_failed"


class InsufficientItems(GeometryError):
    """Selection needs at least two surviving items and has fewer."""

    code = "insufficient_items"
