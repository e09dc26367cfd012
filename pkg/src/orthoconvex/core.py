"""Exact rational arithmetic primitives and plane geometry carriers.

Everything downstream computes over ``fractions.Fraction`` (aliased ``Rat``).
No floats enter any predicate; square roots are handled via certified
rational bounds built on ``math.isqrt``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

from .errors import ParseError

__all__ = [
    "Rat",
    "RatLike",
    "rat",
    "rat_str",
    "Pt2",
    "AxisSegment",
    "AxisRect",
    "norm1",
    "norm2_sq",
    "rat_sqrt_lower",
    "rat_sqrt_upper",
    "sqrt_interval",
]

Rat = Fraction
RatLike = Union[int, str, Fraction]


def rat(value: RatLike) -> Rat:
    """Parse an exact rational from an int, a Fraction, or a "p/q" string.

    Floats are rejected on purpose: they smuggle binary rounding into a
    toolkit whose contracts are exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {value!r}") from exc
    raise ParseError(f"not a rational: {value!r} (floats are not accepted)")


def rat_str(x: Rat) -> str:
    """Render a rational as "p" or "p/q" (the inverse of :func:`rat`)."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True, order=True)
class Pt2:
    """A point of the plane with exact rational coordinates."""

    x: Rat
    y: Rat

    def __sub__(self, other: "Pt2") -> "Pt2":
        return Pt2(self.x - other.x, self.y - other.y)

    def __add__(self, other: "Pt2") -> "Pt2":
        return Pt2(self.x + other.x, self.y + other.y)


@dataclass(frozen=True)
class AxisSegment:
    """A closed axis-parallel segment given by its two endpoints.

    ``axis`` is ``"h"`` for horizontal (varying x) or ``"v"`` for vertical.
    Degenerate (single point) segments are rejected.
    """

    p: Pt2
    q: Pt2

    def __post_init__(self) -> None:
        if self.p == self.q:
            raise ValueError("degenerate axis segment")
        if self.p.x != self.q.x and self.p.y != self.q.y:
            raise ValueError("segment is not axis-parallel")

    @property
    def axis(self) -> str:
        return "h" if self.p.y == self.q.y else "v"


@dataclass(frozen=True)
class AxisRect:
    """A closed axis-aligned rectangle [xmin, xmax] x [ymin, ymax]."""

    xmin: Rat
    xmax: Rat
    ymin: Rat
    ymax: Rat

    def __post_init__(self) -> None:
        if self.xmin > self.xmax or self.ymin > self.ymax:
            raise ValueError("empty rectangle")

    def contains(self, p: Pt2) -> bool:
        return self.xmin <= p.x <= self.xmax and self.ymin <= p.y <= self.ymax

    def corners(self) -> tuple[Pt2, Pt2, Pt2, Pt2]:
        return (
            Pt2(self.xmin, self.ymin),
            Pt2(self.xmax, self.ymin),
            Pt2(self.xmax, self.ymax),
            Pt2(self.xmin, self.ymax),
        )


def norm1(p: Pt2, q: Pt2) -> Rat:
    """Taxicab distance between two points, exact."""
    return abs(p.x - q.x) + abs(p.y - q.y)


def norm2_sq(p: Pt2, q: Pt2) -> Rat:
    """Squared Euclidean distance between two points, exact."""
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def _check_sqrt_args(x: Rat, tol: Rat) -> None:
    if x < 0:
        raise ValueError(f"sqrt of negative rational {x}")
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")


def sqrt_interval(x: Rat, width: Rat) -> tuple[Rat, Rat]:
    """Certified enclosure of sqrt(x): returns (lo, hi) with
    lo^2 <= x <= hi^2 and hi - lo <= width.

    lo and hi share the denominator q*n where n is the smallest power-free
    integer making 1/(q*n) <= width; one isqrt call does all the work.
    """
    _check_sqrt_args(x, width)
    if x == 0:
        return Rat(0), Rat(0)
    p, q = x.numerator, x.denominator
    # need 1/(q*n) <= width
    n = -((-width.denominator) // (q * width.numerator))  # ceil division
    n = max(n, 1)
    t = isqrt(p * q * n * n)
    lo = Rat(t, q * n)
    if t * t == p * q * n * n:
        return lo, lo
    return lo, Rat(t + 1, q * n)


def rat_sqrt_lower(x: Rat, slack: Rat) -> Rat:
    """Rational r >= 0 with r^2 <= x and x - r^2 <= slack."""
    _check_sqrt_args(x, slack)
    if x == 0:
        return Rat(0)
    p, q = x.numerator, x.denominator
    # error x - r^2 <= 2*sqrt(p*q)/(q^2*n); solve for n, then verify
    root_pq = isqrt(p * q) + 1
    n = (2 * slack.denominator * root_pq) // (q * q * slack.numerator) + 1
    while True:
        t = isqrt(p * q * n * n)
        r = Rat(t, q * n)
        if x - r * r <= slack:
            return r
        n *= 2


def rat_sqrt_upper(x: Rat, slack: Rat) -> Rat:
    """Rational r >= 0 with r^2 >= x and r^2 - x <= slack."""
    _check_sqrt_args(x, slack)
    if x == 0:
        return Rat(0)
    p, q = x.numerator, x.denominator
    root_pq = isqrt(p * q) + 1
    # (t+1)^2 - p*q*n^2 <= 2t + 1 + (t^2 - p*q*n^2) <= 2*sqrt(pq)*n + 1
    n = (3 * slack.denominator * root_pq) // (q * q * slack.numerator) + 1
    while True:
        m = p * q * n * n
        t = isqrt(m)
        if t * t == m:
            return Rat(t, q * n)
        r = Rat(t + 1, q * n)
        if r * r - x <= slack:
            return r
        n *= 2
