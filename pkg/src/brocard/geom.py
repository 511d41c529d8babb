"""Planar primitives: points, lines, circles, axis-aligned ellipses,
triangles, and rigid-or-similar poses.

Everything here is immutable and every operation is a pure function, so
values can be shared freely between checks.  Residual helpers return a
nonnegative defect instead of a bare boolean; callers compare against the
tolerances in :class:`Tolerances`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass


class GeometryError(ValueError):
    """A geometric precondition failed."""


class DegenerateTriangleError(GeometryError):
    pass


class InversionPoleError(GeometryError):
    pass


@dataclass(frozen=True)
class Tolerances:
    """Central tolerance configuration.

    ``scene`` bounds residuals of assembled scenes (stationarity, closure,
    concyclicity); ``primitive`` bounds residuals of single primitive
    identities (inversion round trips, projections).
    """

    scene: float = 1e-9
    primitive: float = 1e-12


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, k: float) -> "Point":
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def dot(self, other: "Point") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point") -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def dist(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def rotated(self, angle: float) -> "Point":
        c, s = math.cos(angle), math.sin(angle)
        return Point(c * self.x - s * self.y, s * self.x + c * self.y)


ORIGIN = Point(0.0, 0.0)


def midpoint(p: Point, q: Point) -> Point:
    return Point(0.5 * (p.x + q.x), 0.5 * (p.y + q.y))


@dataclass(frozen=True)
class Line:
    """Line through ``base`` with unit ``direction``.

    The constructor normalizes the direction and rejects zero vectors.
    """

    base: Point
    direction: Point

    def __post_init__(self) -> None:
        n = self.direction.norm()
        if not n > 0.0 or not math.isfinite(n):
            raise GeometryError("line requires a nonzero direction")
        if abs(n - 1.0) > 1e-14:
            object.__setattr__(self, "direction", self.direction * (1.0 / n))

    @classmethod
    def through(cls, p: Point, q: Point) -> "Line":
        return cls(p, q - p)

    def normal(self) -> Point:
        """Unit normal, the direction rotated a quarter turn left."""
        return Point(-self.direction.y, self.direction.x)

    def point_at(self, t: float) -> Point:
        return self.base + self.direction * t


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self) -> None:
        if not self.radius >= 0.0 or not math.isfinite(self.radius):
            raise GeometryError("circle requires a finite radius >= 0")

    def point_at(self, theta: float) -> Point:
        return self.center + Point(math.cos(theta), math.sin(theta)) * self.radius

    def membership_residual(self, p: Point) -> float:
        return abs(p.dist(self.center) - self.radius)


class MajorAxis(enum.Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


@dataclass(frozen=True)
class AxisAlignedEllipse:
    """Ellipse with axes parallel to the coordinate axes.

    ``semi_major >= semi_minor >= 0``; equal axes give a circle and a zero
    pair gives a point, both of which occur as limits of the families built
    on top of this type.
    """

    center: Point
    semi_major: float
    semi_minor: float
    major_axis: MajorAxis = MajorAxis.HORIZONTAL

    def __post_init__(self) -> None:
        if not (math.isfinite(self.semi_major) and math.isfinite(self.semi_minor)):
            raise GeometryError("ellipse semi-axes must be finite")
        if self.semi_minor < 0.0 or self.semi_major + 1e-15 * abs(self.semi_major) < self.semi_minor:
            raise GeometryError("ellipse requires semi_major >= semi_minor >= 0")

    def axes_xy(self) -> tuple[float, float]:
        """Semi-axis lengths along x and along y."""
        if self.major_axis is MajorAxis.HORIZONTAL:
            return self.semi_major, self.semi_minor
        return self.semi_minor, self.semi_major

    def point_at(self, theta: float) -> Point:
        ax, ay = self.axes_xy()
        return self.center + Point(ax * math.cos(theta), ay * math.sin(theta))

    def tangent_direction_at(self, theta: float) -> Point:
        ax, ay = self.axes_xy()
        return Point(-ax * math.sin(theta), ay * math.cos(theta))

    def implicit_residual(self, p: Point) -> float:
        """|x'^2/ax^2 + y'^2/ay^2 - 1| in centered coordinates."""
        ax, ay = self.axes_xy()
        d = p - self.center
        return abs((d.x / ax) ** 2 + (d.y / ay) ** 2 - 1.0)


@dataclass(frozen=True)
class Triangle:
    """Counterclockwise, non-degenerate triangle."""

    A: Point
    B: Point
    C: Point

    def __post_init__(self) -> None:
        ab, ac = self.B - self.A, self.C - self.A
        doubled = ab.cross(ac)
        longest = max(ab.norm(), ac.norm(), (self.C - self.B).norm())
        if not doubled > 1e-12 * longest * longest:
            if doubled < 0.0:
                raise DegenerateTriangleError("triangle must be counterclockwise")
            raise DegenerateTriangleError("degenerate triangle")

    @classmethod
    def oriented(cls, A: Point, B: Point, C: Point) -> "Triangle":
        """Build a triangle, swapping two vertices if the input is clockwise."""
        if (B - A).cross(C - A) < 0.0:
            B, C = C, B
        return cls(A, B, C)

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.A, self.B, self.C)

    def sidelengths(self) -> tuple[float, float, float]:
        """(s1, s2, s3) with s1 opposite A, s2 opposite B, s3 opposite C."""
        return (
            self.B.dist(self.C),
            self.C.dist(self.A),
            self.A.dist(self.B),
        )

    def area(self) -> float:
        return 0.5 * (self.B - self.A).cross(self.C - self.A)


@dataclass(frozen=True)
class Pose:
    """Similarity map from a local frame into the world frame.

    Application order: optional x-axis mirror (x -> -x), then rotation,
    then uniform scale, then translation.
    """

    translation: Point = ORIGIN
    rotation: float = 0.0
    reflect_x: bool = False
    scale: float = 1.0

    def __post_init__(self) -> None:
        if not self.scale > 0.0 or not math.isfinite(self.scale):
            raise GeometryError("pose scale must be positive and finite")

    @classmethod
    def identity(cls) -> "Pose":
        return cls()

    def _linear(self, p: Point) -> Point:
        if self.reflect_x:
            p = Point(-p.x, p.y)
        return p.rotated(self.rotation) * self.scale

    def apply(self, p: Point) -> Point:
        return self.translation + self._linear(p)

    def apply_circle(self, c: Circle) -> Circle:
        return Circle(self.apply(c.center), self.scale * c.radius)

    def apply_ellipse(self, e: AxisAlignedEllipse) -> AxisAlignedEllipse:
        """Map an axis-aligned ellipse; rotation must be a multiple of pi/2."""
        quarter = self.rotation / (0.5 * math.pi)
        k = round(quarter)
        if abs(quarter - k) > 1e-12:
            raise GeometryError("pose rotation does not preserve axis alignment")
        axis = e.major_axis
        if k % 2 != 0:
            axis = (
                MajorAxis.VERTICAL
                if axis is MajorAxis.HORIZONTAL
                else MajorAxis.HORIZONTAL
            )
        return AxisAlignedEllipse(
            self.apply(e.center),
            self.scale * e.semi_major,
            self.scale * e.semi_minor,
            axis,
        )

    def compose(self, other: "Pose") -> "Pose":
        """Pose acting as ``self`` after ``other``."""
        sign = -1.0 if self.reflect_x else 1.0
        return Pose(
            translation=self.apply(other.translation),
            rotation=self.rotation + sign * other.rotation,
            reflect_x=self.reflect_x != other.reflect_x,
            scale=self.scale * other.scale,
        )

    def inverse(self) -> "Pose":
        inv_scale = 1.0 / self.scale
        rotation = self.rotation if self.reflect_x else -self.rotation
        inv = Pose(ORIGIN, rotation, self.reflect_x, inv_scale)
        return Pose(inv._linear(-self.translation), rotation, self.reflect_x, inv_scale)


def line_line_intersection(l1: Line, l2: Line) -> Point:
    denom = l1.direction.cross(l2.direction)
    if abs(denom) < 1e-14:
        raise GeometryError("lines are parallel")
    t = (l2.base - l1.base).cross(l2.direction) / denom
    return l1.point_at(t)


def three_point_circle(p: Point, q: Point, r: Point) -> Circle:
    """Circle through three points, any orientation."""
    # Shift to the centroid first; the determinant form is then well scaled.
    g = Point((p.x + q.x + r.x) / 3.0, (p.y + q.y + r.y) / 3.0)
    a, b, c = p - g, q - g, r - g
    d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y))
    scale = max(a.norm(), b.norm(), c.norm())
    if abs(d) < 1e-14 * scale * scale:
        raise DegenerateTriangleError("degenerate triangle")
    a2, b2, c2 = a.dot(a), b.dot(b), c.dot(c)
    ux = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d
    uy = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d
    center = g + Point(ux, uy)
    return Circle(center, center.dist(p))


def circumcircle(t: Triangle) -> Circle:
    return three_point_circle(t.A, t.B, t.C)


def invert_in_circle(c: Circle, p: Point) -> Point:
    """Image of ``p`` under inversion in ``c``; the center has no image."""
    v = p - c.center
    d2 = v.dot(v)
    if d2 < 1e-30 * c.radius * c.radius:
        raise InversionPoleError("inversion pole")
    return c.center + v * (c.radius * c.radius / d2)


def project_onto_line(l: Line, p: Point) -> Point:
    return l.base + l.direction * l.direction.dot(p - l.base)


def line_circle_intersections(l: Line, c: Circle) -> tuple[Point, ...]:
    """Intersections ordered by the line parameter; tangency gives one point."""
    w = l.base - c.center
    b = l.direction.dot(w)
    disc = b * b - (w.dot(w) - c.radius * c.radius)
    if abs(disc) <= 1e-12 * max(1.0, c.radius * c.radius):
        return (l.point_at(-b),)
    if disc < 0.0:
        return ()
    root = math.sqrt(disc)
    return (l.point_at(-b - root), l.point_at(-b + root))


def circles_orthogonality_residual(c1: Circle, c2: Circle) -> float:
    """|d^2 - r1^2 - r2^2|, zero exactly when the circles meet at right angles."""
    d = c1.center.dist(c2.center)
    return abs(d * d - c1.radius * c1.radius - c2.radius * c2.radius)


def ellipse_line_tangency_residual(e: AxisAlignedEllipse, l: Line) -> float:
    """Defect between the support value of the ellipse in the line's normal
    direction and the line's offset, in the ellipse's principal frame.

    Zero iff the line is tangent; the value carries length units, so it is
    comparable across uniformly scaled scenes.
    """
    ax, ay = e.axes_xy()
    n = l.normal()
    offset = n.dot(l.base - e.center)
    support = math.hypot(ax * n.x, ay * n.y)
    return abs(support - abs(offset))


def ellipse_line_tangency_point(e: AxisAlignedEllipse, l: Line) -> Point:
    """Contact point of a line tangent to the ellipse (pre: nearly tangent)."""
    ax, ay = e.axes_xy()
    n = l.normal()
    offset = n.dot(l.base - e.center)
    if abs(offset) < 1e-15 * max(ax, ay):
        raise GeometryError("line through the center cannot be tangent")
    return e.center + Point(ax * ax * n.x / offset, ay * ay * n.y / offset)


def ellipse_foci(e: AxisAlignedEllipse) -> tuple[Point, Point]:
    c = math.sqrt(max(0.0, (e.semi_major - e.semi_minor) * (e.semi_major + e.semi_minor)))
    if e.major_axis is MajorAxis.HORIZONTAL:
        off = Point(c, 0.0)
    else:
        off = Point(0.0, c)
    return (e.center - off, e.center + off)
