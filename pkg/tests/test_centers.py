import math
import random

import pytest

from brocard.centers import (
    EquilateralDegeneracyError,
    brocard_angle,
    brocard_circle,
    brocard_concurrency_defect,
    brocard_cotangent,
    brocard_points_by_construction,
    center_from_trilinear,
    metrics,
    second_brocard_circle,
    second_brocard_triangle,
    standard_centers,
    symmedian_point,
)
from brocard.geom import GeometryError, Point, Triangle, circumcircle

# isosceles reference triangle: apex (0,2), base corners (-1,0) and (1,0)
FIX = Triangle.oriented(Point(0.0, 2.0), Point(-1.0, 0.0), Point(1.0, 0.0))
SQRT3 = math.sqrt(3.0)


def _random_triangle(rng):
    while True:
        pts = [Point(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(3)]
        try:
            t = Triangle.oriented(*pts)
        except GeometryError:
            continue
        if brocard_cotangent(t) > SQRT3 + 1e-3:
            return t


def test_metrics_fixture():
    m = metrics(FIX)
    assert abs(m.area - 2.0) < 1e-15
    assert abs(m.circumradius - 1.25) < 1e-14
    squares = sorted(s * s for s in (m.s1, m.s2, m.s3))
    for got, want in zip(squares, (4.0, 5.0, 5.0)):
        assert abs(got - want) < 1e-14


def test_brocard_cotangent_fixture():
    # (s1^2+s2^2+s3^2)/(4*area) = (5+5+4)/8 = 7/4
    assert abs(brocard_cotangent(FIX) - 1.75) < 1e-14
    assert abs(1.0 / math.tan(brocard_angle(FIX)) - 1.75) < 1e-13


def test_brocard_angle_bounded_by_pi_over_6():
    rng = random.Random(7)
    for _ in range(150):
        t = _random_triangle(rng)
        w = brocard_angle(t)
        assert 0.0 < w <= math.pi / 6.0 + 1e-15
        assert brocard_cotangent(t) >= SQRT3 - 1e-12


def test_construction_concurrency():
    rng = random.Random(8)
    for _ in range(150):
        t = _random_triangle(rng)
        assert brocard_concurrency_defect(t) < 1e-9


def test_fixture_brocard_points():
    o1, o2 = brocard_points_by_construction(FIX)
    assert o1.dist(Point(1.0 / 13.0, 8.0 / 13.0)) < 1e-12
    assert o2.dist(Point(-1.0 / 13.0, 8.0 / 13.0)) < 1e-12


def test_mirror_image_swaps_brocard_points():
    """Reflecting the triangle reverses the two rotation senses."""
    rng = random.Random(9)
    for _ in range(60):
        t = _random_triangle(rng)
        a, b, c = t.vertices
        mirror = Triangle.oriented(
            Point(-a.x, a.y), Point(-b.x, b.y), Point(-c.x, c.y)
        )
        o1, o2 = brocard_points_by_construction(t)
        m1, m2 = brocard_points_by_construction(mirror)
        assert m1.dist(Point(-o2.x, o2.y)) < 1e-9
        assert m2.dist(Point(-o1.x, o1.y)) < 1e-9


def test_symmedian_point_fixture():
    assert symmedian_point(FIX).dist(Point(0.0, 4.0 / 7.0)) < 1e-13


def test_center_from_trilinear_infinity():
    with pytest.raises(GeometryError):
        center_from_trilinear(
            Triangle.oriented(Point(0.0, 0.0), Point(3.0, 0.0), Point(1.0, 2.0)),
            lambda a, b, c: b - c,
        )


def test_standard_centers_fixture():
    sc = standard_centers(FIX)
    assert sc.X3.dist(Point(0.0, 0.75)) < 1e-13
    assert sc.X6.dist(Point(0.0, 4.0 / 7.0)) < 1e-13
    assert sc.X39.dist(Point(0.0, 8.0 / 13.0)) < 1e-12
    assert sc.X182.dist(Point(0.0, 37.0 / 56.0)) < 1e-13
    # inversive images land on rational points for this triangle
    assert sc.X187.dist(Point(0.0, -8.0)) < 1e-11
    assert sc.X574.dist(Point(0.0, 64.0 / 97.0)) < 1e-12
    assert sc.X15.dist(Point(0.0, 0.75 - 5.0 / (16.0 * SQRT3 + 28.0))) < 1e-12
    assert sc.X16.dist(Point(0.0, -8.0 - 5.0 * SQRT3)) < 1e-10


def test_isodynamic_points_divide_X3_X6():
    """X15 and X16 split the segment X3 X6 internally and externally in the
    ratio sqrt(3) : u."""
    rng = random.Random(10)
    for _ in range(60):
        t = _random_triangle(rng)
        sc = standard_centers(t)
        u = brocard_cotangent(t)
        want15 = (sc.X3 * SQRT3 + sc.X6 * u) * (1.0 / (SQRT3 + u))
        want16 = (sc.X3 * SQRT3 - sc.X6 * u) * (1.0 / (SQRT3 - u))
        assert sc.X15.dist(want15) < 1e-10
        assert sc.X16.dist(want16) < 1e-7 * max(1.0, want16.norm())


def test_standard_centers_equilateral_raises():
    eq = Triangle.oriented(
        Point(1.0, 0.0),
        Point(math.cos(2.0 * math.pi / 3.0), math.sin(2.0 * math.pi / 3.0)),
        Point(math.cos(4.0 * math.pi / 3.0), math.sin(4.0 * math.pi / 3.0)),
    )
    with pytest.raises(EquilateralDegeneracyError):
        standard_centers(eq)
    # the diameter circle only raises on exact coincidence of X3 and X6;
    # roundoff leaves a speck of a circle here, which is fine
    try:
        k = brocard_circle(eq)
    except EquilateralDegeneracyError:
        pass
    else:
        assert k.radius < 1e-14
    try:
        c = second_brocard_circle(eq)
    except EquilateralDegeneracyError:
        pass
    else:
        assert c.radius < 1e-7


def test_brocard_circle_carries_both_points():
    rng = random.Random(11)
    for _ in range(80):
        t = _random_triangle(rng)
        k = brocard_circle(t)
        o1, o2 = brocard_points_by_construction(t)
        assert k.membership_residual(o1) < 1e-9
        assert k.membership_residual(o2) < 1e-9
        # diameter endpoints
        sc = standard_centers(t)
        assert k.membership_residual(sc.X3) < 1e-12
        assert k.membership_residual(sc.X6) < 1e-12


def test_second_brocard_circle_carries_both_points():
    rng = random.Random(12)
    for _ in range(80):
        t = _random_triangle(rng)
        c = second_brocard_circle(t)
        assert c.center.dist(circumcircle(t).center) < 1e-12
        o1, o2 = brocard_points_by_construction(t)
        assert c.membership_residual(o1) < 1e-9
        assert c.membership_residual(o2) < 1e-9


def test_second_brocard_triangle_fixture():
    """The apex cevian passes through the circumcenter, so one vertex of the
    derived triangle is X3 itself; all three lie on the Brocard circle."""
    d = second_brocard_triangle(FIX)
    k = brocard_circle(FIX)
    assert min(v.dist(Point(0.0, 0.75)) for v in d.vertices) < 1e-12
    for v in d.vertices:
        assert k.membership_residual(v) < 1e-12


def test_second_brocard_triangle_random():
    rng = random.Random(13)
    for _ in range(60):
        t = _random_triangle(rng)
        k = brocard_circle(t)
        d = second_brocard_triangle(t)
        for v in d.vertices:
            assert k.membership_residual(v) < 1e-10
        assert d.area() > 0.0
