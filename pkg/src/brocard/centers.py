"""Triangle centers built around the Brocard configuration.

Kimberling indices name the classical centers: X3 circumcenter, X6
symmedian point, X15/X16 isodynamic points, X39 Brocard midpoint, X182
center of the Brocard circle, X187 the circumcircle inverse of X6, X574
the Brocard-circle inverse of X187.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .geom import (
    Circle,
    GeometryError,
    Line,
    Point,
    Triangle,
    circumcircle,
    invert_in_circle,
    line_line_intersection,
    midpoint,
    project_onto_line,
)

SQRT3 = math.sqrt(3.0)

# Evaluator of a trilinear coordinate: f(s1, s2, s3) for the first vertex,
# cycled for the other two.
CenterFunction = Callable[[float, float, float], float]


class EquilateralDegeneracyError(GeometryError):
    pass


@dataclass(frozen=True)
class TriangleMetrics:
    s1: float
    s2: float
    s3: float
    area: float
    lambda_: float
    circumradius: float


def metrics(t: Triangle) -> TriangleMetrics:
    s1, s2, s3 = t.sidelengths()
    area = t.area()
    lam = (s1 * s2) ** 2 + (s2 * s3) ** 2 + (s3 * s1) ** 2
    return TriangleMetrics(s1, s2, s3, area, lam, s1 * s2 * s3 / (4.0 * area))


def brocard_angle(t: Triangle) -> float:
    """The common angle of Brocard's side-rotation construction.

    Returns omega = arcsin(2*area / sqrt(lambda)); always in (0, pi/6].
    """
    m = metrics(t)
    return math.asin(min(1.0, 2.0 * m.area / math.sqrt(m.lambda_)))


def brocard_cotangent(t: Triangle) -> float:
    """cot(omega) = (s1^2 + s2^2 + s3^2) / (4*area), always >= sqrt(3)."""
    s1, s2, s3 = t.sidelengths()
    return (s1 * s1 + s2 * s2 + s3 * s3) / (4.0 * t.area())


def _first_point_lines(t: Triangle, omega: float) -> tuple[Line, Line, Line]:
    # Sides AB, BC, CA turned by +omega about A, B, C.  For a counterclockwise
    # triangle the positive turn sweeps each side into the interior.
    A, B, C = t.vertices
    return (
        Line(A, (B - A).rotated(omega)),
        Line(B, (C - B).rotated(omega)),
        Line(C, (A - C).rotated(omega)),
    )


def _second_point_lines(t: Triangle, omega: float) -> tuple[Line, Line, Line]:
    # Sides CB, BA, AC turned by -omega about C, B, A.
    A, B, C = t.vertices
    return (
        Line(C, (B - C).rotated(-omega)),
        Line(B, (A - B).rotated(-omega)),
        Line(A, (C - A).rotated(-omega)),
    )


def _concurrence(lines: tuple[Line, Line, Line]) -> tuple[Point, float]:
    p01 = line_line_intersection(lines[0], lines[1])
    p12 = line_line_intersection(lines[1], lines[2])
    p20 = line_line_intersection(lines[2], lines[0])
    spread = max(p01.dist(p12), p12.dist(p20), p20.dist(p01))
    centroid = Point(
        (p01.x + p12.x + p20.x) / 3.0,
        (p01.y + p12.y + p20.y) / 3.0,
    )
    return centroid, spread


def brocard_points_by_construction(t: Triangle) -> tuple[Point, Point]:
    """Both Brocard points from the rotated-side construction.

    The first point comes from the +omega rotations, the second from the
    -omega rotations; on a counterclockwise triangle this matches the
    closed-form labels used by the porism scenes.
    """
    omega = brocard_angle(t)
    first, _ = _concurrence(_first_point_lines(t, omega))
    second, _ = _concurrence(_second_point_lines(t, omega))
    return first, second


def brocard_concurrency_defect(t: Triangle) -> float:
    """Largest pairwise spread among the three rotated lines, both points."""
    omega = brocard_angle(t)
    _, d1 = _concurrence(_first_point_lines(t, omega))
    _, d2 = _concurrence(_second_point_lines(t, omega))
    return max(d1, d2)


def center_from_trilinear(t: Triangle, f: CenterFunction) -> Point:
    """Point with trilinear coordinates f(s1,s2,s3) : f(s2,s3,s1) : f(s3,s1,s2)."""
    s1, s2, s3 = t.sidelengths()
    w1 = s1 * f(s1, s2, s3)
    w2 = s2 * f(s2, s3, s1)
    w3 = s3 * f(s3, s1, s2)
    total = w1 + w2 + w3
    if abs(total) < 1e-30:
        raise GeometryError("center at infinity")
    A, B, C = t.vertices
    return Point(
        (w1 * A.x + w2 * B.x + w3 * C.x) / total,
        (w1 * A.y + w2 * B.y + w3 * C.y) / total,
    )


def symmedian_point(t: Triangle) -> Point:
    return center_from_trilinear(t, lambda a, b, c: a)


@dataclass(frozen=True)
class StandardCenters:
    X3: Point
    X6: Point
    X15: Point
    X16: Point
    X39: Point
    X182: Point
    X187: Point
    X574: Point


def brocard_circle(t: Triangle) -> Circle:
    """Circle on the segment X3 X6 as diameter; carries both Brocard points."""
    X3 = circumcircle(t).center
    X6 = symmedian_point(t)
    gap = X3.dist(X6)
    if gap == 0.0:
        raise EquilateralDegeneracyError("equilateral degeneracy")
    return Circle(midpoint(X3, X6), 0.5 * gap)


def second_brocard_circle(t: Triangle) -> Circle:
    """Circle about X3 through both Brocard points."""
    m = metrics(t)
    sin_w = 2.0 * m.area / math.sqrt(m.lambda_)
    radicand = 1.0 - 4.0 * sin_w * sin_w
    if radicand <= 0.0:
        raise EquilateralDegeneracyError("equilateral degeneracy")
    return Circle(circumcircle(t).center, m.circumradius * math.sqrt(radicand))


def standard_centers(t: Triangle) -> StandardCenters:
    """The eight centers used by the porism scenes.

    Pre: the triangle is not equilateral (X15, X16, X187, X574 degenerate
    there).
    """
    cc = circumcircle(t)
    X3 = cc.center
    X6 = symmedian_point(t)
    omega1, omega2 = brocard_points_by_construction(t)
    u = brocard_cotangent(t)
    if u - SQRT3 <= 0.0:
        raise EquilateralDegeneracyError("equilateral degeneracy")
    X15 = (1.0 / (SQRT3 + u)) * (SQRT3 * X3 + u * X6)
    X16 = (1.0 / (SQRT3 - u)) * (SQRT3 * X3 - u * X6)
    kc = brocard_circle(t)
    X187 = invert_in_circle(cc, X6)
    X574 = invert_in_circle(kc, X187)
    return StandardCenters(
        X3=X3,
        X6=X6,
        X15=X15,
        X16=X16,
        X39=midpoint(omega1, omega2),
        X182=kc.center,
        X187=X187,
        X574=X574,
    )


def second_brocard_triangle(t: Triangle) -> Triangle:
    """Triangle cut from the Brocard circle by the cevians through X6.

    Each cevian through X6 meets the circle on diameter X3 X6 at X6 and at
    one further point, which by Thales is the foot of the perpendicular
    from X3 onto the cevian.  When a cevian passes through X3 the foot is
    X3 itself, the limit of the neighboring members.  Vertices are
    reordered counterclockwise.
    """
    X3 = circumcircle(t).center
    X6 = symmedian_point(t)
    feet = []
    for v in t.vertices:
        if v.dist(X6) < 1e-14 * v.dist(X3):
            raise GeometryError("cevian undefined")
        feet.append(project_onto_line(Line.through(v, X6), X3))
    return Triangle.oriented(*feet)
