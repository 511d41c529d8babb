"""Brocard porisms as first-class values.

A porism is the one-parameter family of triangles inscribed in a fixed
circumcircle and tangent to the Brocard inellipse.  A scene freezes the
stationary objects of one porism: both conics, the Brocard points (the
inellipse foci), the isodynamic points, the Brocard circle, and the
Beltrami points.  The canonical frame puts the circumcenter at the origin
with the symmedian point straight below it; ``pose`` maps that frame into
world coordinates, and all stored geometry is world-frame.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geom import (
    AxisAlignedEllipse,
    Circle,
    GeometryError,
    Line,
    MajorAxis,
    Point,
    Pose,
    Triangle,
    ellipse_line_tangency_residual,
)

SQRT3 = math.sqrt(3.0)


class DegeneratePorismError(GeometryError):
    pass


class ParametrizationSingularityError(GeometryError):
    pass


@dataclass(frozen=True)
class PorismParams:
    """Circumradius R and Brocard cotangent u of a porism.

    ``u_excess`` stores u - sqrt(3) explicitly.  Deep iterates of the
    porism recurrence push u within one float spacing of sqrt(3), where
    u*u - 3 evaluated from ``u`` alone loses every significant digit; all
    derived quantities therefore go through the excess.
    """

    R: float
    u: float
    u_excess: float | None = None

    def __post_init__(self) -> None:
        if self.u_excess is None:
            object.__setattr__(self, "u_excess", self.u - SQRT3)
        if not (math.isfinite(self.R) and self.R >= 0.0):
            raise DegeneratePorismError("degenerate porism")
        if not (math.isfinite(self.u) and self.u_excess >= 0.0):
            raise DegeneratePorismError("degenerate porism")

    @classmethod
    def from_excess(cls, R: float, excess: float) -> "PorismParams":
        return cls(R, SQRT3 + excess, excess)

    @property
    def gap(self) -> float:
        """sqrt(u^2 - 3), formed from the excess so it survives u -> sqrt(3)."""
        e = self.u_excess
        return math.sqrt(e * (e + 2.0 * SQRT3))

    @property
    def sin_omega(self) -> float:
        return 1.0 / math.sqrt(1.0 + self.u * self.u)

    @property
    def omega(self) -> float:
        return math.atan2(1.0, self.u)


@dataclass(frozen=True)
class IsoscelesParams:
    """Half-base d and height h of the isosceles member, apex up."""

    d: float
    h: float

    def __post_init__(self) -> None:
        if not (self.d > 0.0 and self.h > 0.0):
            raise DegeneratePorismError("degenerate porism")

    @property
    def zeta(self) -> float:
        return self.d * self.d + self.h * self.h


@dataclass(frozen=True)
class PorismScene:
    params: PorismParams
    circumcircle: Circle
    inellipse: AxisAlignedEllipse
    omega1: Point
    omega2: Point
    X6: Point
    X15: Point
    X16: Point
    X39: Point
    X182: Point
    brocard_circle: Circle
    beltrami_P2: Point
    beltrami_U2: Point
    pose: Pose

    @property
    def X3(self) -> Point:
        return self.circumcircle.center

    @property
    def beltrami_radius(self) -> float:
        return 2.0 * self.params.R * self.pose.scale / self.params.gap

    def beltrami_circles(self) -> tuple[Circle, Circle]:
        """Circles about the Beltrami points through X15 and X16.

        The first, about P2, carries the first Brocard point; the second,
        about U2, carries the second.
        """
        rho = self.beltrami_radius
        return Circle(self.beltrami_P2, rho), Circle(self.beltrami_U2, rho)


def scene_from_Ru(params: PorismParams, pose: Pose = Pose.identity()) -> PorismScene:
    """Assemble the stationary scene of the porism with parameters (R, u).

    Pre: R > 0 and u > sqrt(3) strictly; the equilateral limit has no
    Brocard inellipse with distinct foci.
    """
    R, u, e = params.R, params.u, params.u_excess
    if R <= 0.0 or e <= 0.0:
        raise DegeneratePorismError("degenerate porism")
    g = params.gap
    one_u2 = 1.0 + u * u
    a = R / math.sqrt(one_u2)
    b = 2.0 * R / one_u2
    focal = R * g / one_u2
    X39 = Point(0.0, -R * u * g / one_u2)
    # X15 = (sqrt3*X3 + u*X6)/(sqrt3 + u) collapses to -R*(u - sqrt3)/g on
    # the axis; the excess form keeps it exact near the equilateral limit.
    X15 = Point(0.0, -R * e / g)
    X16 = Point(0.0, -R * (SQRT3 + u) / g)
    X6 = Point(0.0, -R * g / u)
    X182 = Point(0.0, -0.5 * R * g / u)
    return PorismScene(
        params=params,
        circumcircle=pose.apply_circle(Circle(Point(0.0, 0.0), R)),
        inellipse=pose.apply_ellipse(
            AxisAlignedEllipse(X39, a, b, MajorAxis.HORIZONTAL)
        ),
        omega1=pose.apply(Point(focal, X39.y)),
        omega2=pose.apply(Point(-focal, X39.y)),
        X6=pose.apply(X6),
        X15=pose.apply(X15),
        X16=pose.apply(X16),
        X39=pose.apply(X39),
        X182=pose.apply(X182),
        brocard_circle=pose.apply_circle(Circle(X182, 0.5 * R * g / u)),
        beltrami_P2=pose.apply(Point(-R / g, -R * u / g)),
        beltrami_U2=pose.apply(Point(R / g, -R * u / g)),
        pose=pose,
    )


def Ru_from_axes(a: float, b: float) -> PorismParams:
    """Porism parameters from the inellipse semi-axes: R = 2a^2/b."""
    if not (a > 0.0 and b > 0.0) or b > a:
        raise GeometryError("not a Brocard inellipse shape")
    u = math.sqrt(4.0 * a * a - b * b) / b
    # u - sqrt3 = (u^2 - 3)/(u + sqrt3) with u^2 - 3 = 4(a - b)(a + b)/b^2.
    excess = 4.0 * (a - b) * (a + b) / (b * b * (u + SQRT3))
    return PorismParams(2.0 * a * a / b, u, excess)


def dh_from_Ru(params: PorismParams) -> IsoscelesParams:
    """Isosceles chart of the porism: half-base and height of the apex-up member.

    The shape ratio h/d determines u two-to-one; of the pair this returns
    the tall representative (h > sqrt3 d), the one whose symmedian point
    sits below the circumcenter as in the canonical frame.  Flat shapes
    fed to :func:`Ru_from_dh` describe the mirror-image porism.
    """
    R, u = params.R, params.u
    if R <= 0.0 or params.u_excess <= 0.0:
        raise DegeneratePorismError("degenerate porism")
    g = params.gap
    one_u2 = 1.0 + u * u
    return IsoscelesParams(
        d=(2.0 * u - g) * R / one_u2,
        h=(u * u + u * g + 3.0) * R / one_u2,
    )


def Ru_from_dh(iso: IsoscelesParams) -> PorismParams:
    d, h = iso.d, iso.h
    u = (3.0 * d * d + h * h) / (2.0 * d * h)
    # 3d^2 + h^2 - 2 sqrt3 d h = (sqrt3 d - h)^2, so the excess is exact.
    t = SQRT3 * d - h
    return PorismParams(iso.zeta / (2.0 * h), u, t * t / (2.0 * d * h))


def isosceles_scene(
    iso: IsoscelesParams,
) -> tuple[Triangle, Circle, tuple[float, float, float, float, float, float]]:
    """Isosceles member, its circumcircle, and the implicit conic of the
    inellipse as (A, B, C, D, E, F) for Ax^2 + Bxy + Cy^2 + Dx + Ey + F = 0.

    The conic coefficients exist for verification; scenes represent the
    inellipse through :class:`AxisAlignedEllipse`.
    """
    d, h, zeta = iso.d, iso.h, iso.zeta
    base_y = (d * d - h * h) / (2.0 * h)
    tri = Triangle(
        Point(-d, base_y),
        Point(d, base_y),
        Point(0.0, zeta / (2.0 * h)),
    )
    circ = Circle(Point(0.0, 0.0), zeta / (2.0 * h))
    d2, h2 = d * d, h * h
    coeffs = (
        -64.0 * d2 * h2 * h2,
        0.0,
        -4.0 * h2 * (9.0 * d2 + h2) * zeta,
        0.0,
        4.0 * h * (3.0 * d2 + h2) * (3.0 * d2 - h2) * zeta,
        -(d2 - h2) * (9.0 * d2 - h2) * zeta * zeta,
    )
    return tri, circ, coeffs


def conic_to_ellipse(
    coeffs: tuple[float, float, float, float, float, float]
) -> AxisAlignedEllipse:
    """Axis-aligned ellipse of an implicit conic with no cross term."""
    A, B, C, D, E, F = coeffs
    if B != 0.0:
        raise GeometryError("conic has a cross term")
    if A * C <= 0.0:
        raise GeometryError("conic is not an ellipse")
    cx = -D / (2.0 * A)
    cy = -E / (2.0 * C)
    k = A * cx * cx + C * cy * cy - F
    if k / A <= 0.0:
        raise GeometryError("conic is empty")
    ax = math.sqrt(k / A)
    ay = math.sqrt(k / C)
    if ax >= ay:
        return AxisAlignedEllipse(Point(cx, cy), ax, ay, MajorAxis.HORIZONTAL)
    return AxisAlignedEllipse(Point(cx, cy), ay, ax, MajorAxis.VERTICAL)


def vertices_at(iso: IsoscelesParams, t: float) -> Triangle:
    """Member triangle of the porism at parameter t.

    The first vertex is R*(cos t, sin t); the other two come from rational
    trigonometric expressions in the isosceles chart.  Isolated t values
    make a denominator vanish (the member degenerates); those raise, and
    samplers should perturb t.  Vertices are reordered counterclockwise.
    """
    d, h, zeta = iso.d, iso.h, iso.zeta
    d2, h2 = d * d, h * h
    d4, h4 = d2 * d2, h2 * h2
    ct, st = math.cos(t), math.sin(t)
    R = zeta / (2.0 * h)
    apex = Point(R * ct, R * st)

    scale = 9.0 * d4 + 2.0 * d2 * h2 + h4
    den_b = 2.0 * d * h * (3.0 * d2 - h2) * ct - (9.0 * d4 - h4) * st + scale
    den_c = 2.0 * d * h * (3.0 * d2 - h2) * ct + (9.0 * d4 - h4) * st - scale
    if abs(den_b) < 1e-13 * scale or abs(den_c) < 1e-13 * scale:
        raise ParametrizationSingularityError("parametrization singularity")

    bx = -zeta * d * (2.0 * d * h * ct + (3.0 * d2 + h2) * st - 3.0 * d2 + h2) / den_b
    by = (
        zeta
        * (2.0 * d * h * (3.0 * d2 + h2) * ct - (9.0 * d4 - 2.0 * d2 * h2 + h4) * st + 9.0 * d4 - h4)
        / (2.0 * h * den_b)
    )
    cx = -zeta * d * (-2.0 * d * h * ct + (3.0 * d2 + h2) * st - 3.0 * d2 + h2) / den_c
    cy = (
        zeta
        * (2.0 * d * h * (3.0 * d2 + h2) * ct + (9.0 * d4 - 2.0 * d2 * h2 + h4) * st - 9.0 * d4 + h4)
        / (2.0 * h * den_c)
    )
    return Triangle.oriented(apex, Point(bx, by), Point(cx, cy))


def scene_member(scene: PorismScene, t: float) -> Triangle:
    """Member triangle of a posed scene, in world coordinates."""
    tri = vertices_at(dh_from_Ru(scene.params), t)
    return Triangle.oriented(*(scene.pose.apply(v) for v in tri.vertices))


def closure_residuals(scene: PorismScene, tri: Triangle) -> tuple[float, float, float]:
    """Tangency defect of each triangle side against the scene inellipse."""
    A, B, C = tri.vertices
    e = scene.inellipse
    return (
        ellipse_line_tangency_residual(e, Line.through(A, B)),
        ellipse_line_tangency_residual(e, Line.through(B, C)),
        ellipse_line_tangency_residual(e, Line.through(C, A)),
    )
