"""A continuous one-parameter field of porisms sharing their isodynamic
points.

For t in (0, pi/3) the inellipse E_t has center (0, -sin t) and semi-axes
(sqrt(2cos t - 1)/2, sqrt((2cos t - 1)(1 - cos t)/2)); the porism around
it has Brocard angle t/2 and keeps X15 = (0, -sqrt(3)/2) and
X16 = (0, +sqrt(3)/2) fixed for every t.  The Beltrami points sit at
(-1/2, 0) and (1/2, 0) with unit-radius circles, the discrete recurrence
embeds as a step t -> t' inside the family, and the ellipses and Brocard
circles weave an orthogonal web whose right-angle locus is the quartic
16x^4 + 8x^2 + 4y^2 - 3 = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq

from .geom import (
    AxisAlignedEllipse,
    Circle,
    GeometryError,
    MajorAxis,
    Point,
    Pose,
    invert_in_circle,
    midpoint,
)
from .porism import PorismParams, PorismScene, SQRT3, scene_from_Ru

T_MAX = math.pi / 3.0
# Parameter of the member whose Brocard circle goes tangent to its own
# inellipse; beyond it the two no longer meet.
T_CRITICAL = math.acos(0.6)


@dataclass(frozen=True)
class ContinuousPorism:
    t: float
    ellipse: AxisAlignedEllipse
    gamma: Circle
    brocard_circle: Circle
    X3: Point
    X15: Point
    X16: Point
    omega: float
    u: float
    eccentricity: float


@dataclass(frozen=True)
class WebResiduals:
    point_inner_products: tuple[float, float, float, float]
    point_membership_max: float
    quartic_angle_max_dev: float
    axis_parallel_max_dev: float


@dataclass(frozen=True)
class FamilyExtrema:
    t_semi_minor_max: float
    semi_minor_max: float
    t_lower_vertex_min: float
    lower_vertex_min: Point


def _check_range(t: float, closed_top: bool = True) -> None:
    top_ok = t <= T_MAX + 1e-15 if closed_top else t < T_MAX
    if not (0.0 < t and top_ok):
        raise GeometryError("t outside range")


def ellipse_Et(t: float) -> AxisAlignedEllipse:
    """Inellipse of the family member at t; a point at X15 when t = pi/3."""
    _check_range(t)
    c = math.cos(t)
    major2 = max(0.0, 2.0 * c - 1.0)
    return AxisAlignedEllipse(
        Point(0.0, -math.sin(t)),
        0.5 * math.sqrt(major2),
        math.sqrt(0.5 * major2 * (1.0 - c)),
        MajorAxis.HORIZONTAL,
    )


def u_from_t(t: float) -> float:
    _check_range(t)
    return math.cos(0.5 * t) / math.sin(0.5 * t)


def t_from_u(u: float) -> float:
    if u < SQRT3:
        raise GeometryError("t outside range")
    return 2.0 * math.atan(1.0 / u)


def _params_at(t: float) -> PorismParams:
    c = math.cos(t)
    u = u_from_t(t)
    # u^2 - 3 = 2(2cos t - 1)/(1 - cos t) keeps the excess well formed as
    # t approaches pi/3.
    excess = 2.0 * (2.0 * c - 1.0) / ((1.0 - c) * (u + SQRT3))
    if excess <= 0.0:
        raise GeometryError("degenerate member")
    R = math.sqrt((2.0 * c - 1.0) / (2.0 * (1.0 - c)))
    return PorismParams.from_excess(R, excess)


def center_X3(t: float) -> Point:
    _check_range(t)
    return Point(0.0, -math.sin(t) / (2.0 * (1.0 - math.cos(t))))


def bt_scene(t: float) -> PorismScene:
    """World-frame scene of the member at t.

    The canonical frame has the symmedian point below the circumcenter;
    here it sits above, so the pose mirrors the y axis (rotation pi plus
    the x mirror) before translating the circumcenter to X3(t).
    """
    _check_range(t, closed_top=False)
    pose = Pose(translation=center_X3(t), rotation=math.pi, reflect_x=True)
    return scene_from_Ru(_params_at(t), pose)


def brocard_circle_Kt(t: float) -> Circle:
    _check_range(t)
    c, s = math.cos(t), math.sin(t)
    return Circle(Point(0.0, (c - 2.0) / (2.0 * s)), (2.0 * c - 1.0) / (2.0 * s))


def porism_Bt(t: float) -> ContinuousPorism:
    scene = bt_scene(t)
    return ContinuousPorism(
        t=t,
        ellipse=scene.inellipse,
        gamma=scene.circumcircle,
        brocard_circle=scene.brocard_circle,
        X3=scene.X3,
        X15=scene.X15,
        X16=scene.X16,
        omega=0.5 * t,
        u=scene.params.u,
        eccentricity=math.sqrt(max(0.0, 2.0 * math.cos(t) - 1.0)),
    )


def embed_step(t: float) -> float:
    """Image of t under the porism recurrence, inside the family."""
    _check_range(t, closed_top=False)
    u = u_from_t(t)
    return t_from_u((u * u + 3.0) / (2.0 * u))


def envelope_points(t: float) -> tuple[Point, Point]:
    """Contact points of E_t with the envelope 4x^2 + y^2 = 1.

    Real only while 5cos t >= 3; later members pull inside the envelope
    without touching it.
    """
    _check_range(t)
    c, s = math.cos(t), math.sin(t)
    radicand = 5.0 * c - 3.0
    if radicand < 0.0:
        raise GeometryError("no real envelope")
    x = math.sqrt(radicand) / (2.0 * math.sqrt(c + 1.0))
    y = -2.0 * s / (c + 1.0)
    return Point(-x, y), Point(x, y)


def nesting_residual(t_small_circle: float, t_big_circle: float) -> float:
    """Slack of the Brocard circle at the later parameter inside the earlier.

    Pre: 0 < t_big_circle < t_small_circle <= pi/3.  Nonnegative up to
    rounding exactly when K at the later parameter nests inside K at the
    earlier one.
    """
    if not 0.0 < t_big_circle < t_small_circle <= T_MAX + 1e-15:
        raise GeometryError("t outside range")
    inner = brocard_circle_Kt(t_small_circle) if t_small_circle < T_MAX else None
    if inner is None:
        # K at pi/3 is the point X15.
        inner = Circle(Point(0.0, -SQRT3 / 2.0), 0.0)
    outer = brocard_circle_Kt(t_big_circle)
    return outer.radius - (inner.center.dist(outer.center) + inner.radius)


def gamma_nesting_residual(t_small_circle: float, t_big_circle: float) -> float:
    """Same slack for the circumcircles, which also nest toward X15."""
    if not 0.0 < t_big_circle < t_small_circle < T_MAX:
        raise GeometryError("t outside range")
    s_in = bt_scene(t_small_circle).circumcircle
    s_out = bt_scene(t_big_circle).circumcircle
    return s_out.radius - (s_in.center.dist(s_out.center) + s_in.radius)


_ARC_CENTERS = (Point(-0.5, 0.0), Point(0.5, 0.0))


def foci_on_arcs_check(t: float) -> tuple[float, float]:
    """Distance defects of the two inellipse foci from their unit arcs.

    The focus (cos t - 1/2, -sin t) stays on the unit circle about
    (-1/2, 0) and its mirror on the unit circle about (1/2, 0).
    """
    _check_range(t)
    c, s = math.cos(t), math.sin(t)
    f1 = Point(c - 0.5, -s)
    f2 = Point(-(c - 0.5), -s)
    return (
        abs(f1.dist(_ARC_CENTERS[0]) - 1.0),
        abs(f2.dist(_ARC_CENTERS[1]) - 1.0),
    )


def beltrami_midpoint_check(t: float) -> float:
    """Distance from the circumcircle inverse of X6 to the Beltrami midpoint.

    Both should be the origin for every member of the family.
    """
    scene = bt_scene(t)
    image = invert_in_circle(scene.circumcircle, scene.X6)
    return image.dist(midpoint(scene.beltrami_P2, scene.beltrami_U2))


def kt_inellipse_intersection_check(t: float) -> float:
    """Largest residual of the two K/E meeting points on both curves.

    Valid while t <= acos(3/5); at the boundary the two curves go tangent
    at (0, -1) and beyond it they separate.
    """
    if not 0.0 < t <= T_CRITICAL + 1e-15:
        raise GeometryError("t outside range")
    c, s = math.cos(t), math.sin(t)
    radicand = max(0.0, 5.0 * c - 3.0)
    x = math.sqrt(radicand) / (2.0 * math.sqrt(c + 1.0))
    y = -2.0 * s / (c + 1.0)
    k = brocard_circle_Kt(t)
    e = ellipse_Et(t)
    worst = 0.0
    for p in (Point(-x, y), Point(x, y)):
        worst = max(worst, k.membership_residual(p), e.implicit_residual(p))
    return worst


# The two Beltrami circles of the family, (x +- 1/2)^2 + y^2 = 1, and the
# Brocard-circle family in implicit form, drive the web computations.


def _circle_field_slope(x: float, y: float) -> float:
    den = 4.0 * x * x - 4.0 * y * y + 3.0
    if den == 0.0:
        raise GeometryError("circle field is vertical here")
    return 8.0 * x * y / den


def _ellipse_field_slopes(x: float, y: float) -> tuple[float, ...]:
    """Real slopes of the inellipse family's implicit direction equation.

    The equation is quadratic in dy/dx; inside the envelope two members
    pass through each point, giving two slopes.  On the right-angle
    quartic the leading coefficient vanishes and the finite root is the
    meaningful one.
    """
    a = 16.0 * x ** 4 + 8.0 * x * x + 4.0 * y * y - 3.0
    b = -8.0 * x * y * (4.0 * x * x - 1.0)
    c = 16.0 * x * x * y * y
    if b == 0.0 and c == 0.0:
        return (0.0,) if a != 0.0 else ()
    if abs(a) < 1e-13 * max(abs(b), abs(c), 1.0):
        return (-c / b,) if b != 0.0 else ()
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        return ()
    root = math.sqrt(disc)
    q = -0.5 * (b + math.copysign(root, b))
    if q == 0.0:
        return (0.0,)
    return tuple(sorted((q / a, c / q), key=abs))


def _angle_between_slopes(m1: float, m2: float) -> float:
    """Unsigned angle between direction fields with the given slopes."""
    return abs(math.atan2(m2 - m1, 1.0 + m1 * m2))


def quartic_y(x: float) -> float:
    """Positive ordinate of the right-angle quartic at |x| < 1/2."""
    radicand = 3.0 - 8.0 * x * x - 16.0 * x ** 4
    if radicand < 0.0:
        raise GeometryError("outside the right-angle locus")
    return 0.5 * math.sqrt(radicand)


def web_orthogonality_residuals(t: float, samples: int = 64) -> WebResiduals:
    """Right-angle and tangency diagnostics of the conic web.

    At parameter t the Brocard circle meets each Beltrami circle at one
    deep point and at one inellipse focus; the gradients there are
    orthogonal.  Independently of t, the inellipse and Brocard-circle
    direction fields cross at right angles along the quartic
    16x^4 + 8x^2 + 4y^2 = 3 and run parallel on both coordinate axes.
    """
    _check_range(t, closed_top=False)
    c, s = math.cos(t), math.sin(t)
    five = 5.0 - 4.0 * c
    deep = 3.0 * (2.0 * c - 1.0) / (2.0 * five)
    pts = (
        (Point(-deep, -3.0 * s / five), _ARC_CENTERS[0]),
        (Point(deep, -3.0 * s / five), _ARC_CENTERS[1]),
        (Point(c - 0.5, -s), _ARC_CENTERS[0]),
        (Point(-(c - 0.5), -s), _ARC_CENTERS[1]),
    )
    k = brocard_circle_Kt(t)
    inner_products = []
    membership = 0.0
    for p, arc_center in pts:
        membership = max(
            membership,
            k.membership_residual(p),
            abs(p.dist(arc_center) - 1.0),
        )
        grad_circle = p - arc_center
        grad_k = p - k.center
        inner_products.append(abs(grad_circle.dot(grad_k)) * 4.0)

    quartic_dev = 0.0
    for i in range(1, samples):
        x = -0.48 + 0.96 * i / samples
        if abs(x) < 0.02:
            continue
        for sign in (-1.0, 1.0):
            y = sign * quartic_y(x)
            slopes = _ellipse_field_slopes(x, y)
            if not slopes:
                continue
            angle = _angle_between_slopes(slopes[0], _circle_field_slope(x, y))
            quartic_dev = max(quartic_dev, abs(angle - 0.5 * math.pi))

    axis_dev = 0.0
    for i in range(1, samples):
        y = -0.82 + 1.64 * i / samples
        if abs(abs(y) - SQRT3 / 2.0) < 1e-3:
            continue
        slopes = _ellipse_field_slopes(0.0, y)
        if slopes:
            axis_dev = max(
                axis_dev, _angle_between_slopes(slopes[0], _circle_field_slope(0.0, y))
            )
        x = 0.04 + 0.44 * i / samples
        slopes = _ellipse_field_slopes(x, 0.0)
        if slopes:
            axis_dev = max(
                axis_dev, _angle_between_slopes(slopes[0], _circle_field_slope(x, 0.0))
            )
    return WebResiduals(
        point_inner_products=tuple(inner_products),
        point_membership_max=membership,
        quartic_angle_max_dev=quartic_dev,
        axis_parallel_max_dev=axis_dev,
    )


def semi_minor(t: float) -> float:
    return ellipse_Et(t).semi_minor


def lower_vertex_y(t: float) -> float:
    """Ordinate of the bottom of E_t."""
    e = ellipse_Et(t)
    return e.center.y - e.semi_minor


def _central_difference(f, t: float, h: float = 1e-6) -> float:
    return (f(t + h) - f(t - h)) / (2.0 * h)


def family_extrema() -> FamilyExtrema:
    """Extremal members located numerically.

    Both extrema are found by bracketing a sign change of the central
    difference derivative and root-finding it, rather than by evaluating
    any closed-form location.
    """
    t_b = brentq(lambda t: _central_difference(semi_minor, t), 0.5, 0.9, xtol=1e-10)
    t_v = brentq(lambda t: _central_difference(lower_vertex_y, t), 0.8, 1.04, xtol=1e-10)
    return FamilyExtrema(
        t_semi_minor_max=t_b,
        semi_minor_max=semi_minor(t_b),
        t_lower_vertex_min=t_v,
        lower_vertex_min=Point(0.0, lower_vertex_y(t_v)),
    )
