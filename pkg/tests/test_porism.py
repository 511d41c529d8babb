import math
import random

import pytest

from brocard.centers import brocard_cotangent, brocard_points_by_construction
from brocard.geom import GeometryError, MajorAxis, Point, Pose, circumcircle
from brocard.porism import (
    DegeneratePorismError,
    IsoscelesParams,
    ParametrizationSingularityError,
    PorismParams,
    Ru_from_axes,
    Ru_from_dh,
    closure_residuals,
    conic_to_ellipse,
    dh_from_Ru,
    isosceles_scene,
    scene_from_Ru,
    scene_member,
    vertices_at,
)

SQRT3 = math.sqrt(3.0)
FIX_PARAMS = PorismParams(1.25, 1.75)
FIX_ISO = IsoscelesParams(1.0, 2.0)


def test_params_validation():
    with pytest.raises(DegeneratePorismError):
        PorismParams(-1.0, 2.0)
    with pytest.raises(DegeneratePorismError):
        PorismParams(1.0, 1.7)  # below sqrt(3)
    with pytest.raises(DegeneratePorismError):
        PorismParams(math.nan, 2.0)
    # the boundary itself is allowed; it is the fixed point of the recurrence
    eq = PorismParams.from_excess(1.0, 0.0)
    assert eq.gap == 0.0
    assert eq.u_excess == 0.0


def test_params_derived_quantities():
    p = FIX_PARAMS
    assert abs(p.gap - 0.25) < 1e-15
    assert abs(p.sin_omega - 4.0 / math.sqrt(65.0)) < 1e-15
    assert abs(p.omega - math.atan2(4.0, 7.0)) < 1e-14
    assert abs(PorismParams.from_excess(2.0, 0.25).u - (SQRT3 + 0.25)) < 1e-15


def test_gap_survives_tiny_excess():
    """u*u - 3 computed from u alone dies around excess 1e-17; the stored
    excess keeps the gap accurate far below that."""
    e = 1e-40
    p = PorismParams.from_excess(1.0, e)
    want = math.sqrt(e * (e + 2.0 * SQRT3))
    assert abs(p.gap - want) <= 1e-16 * want


def test_iso_params_validation():
    with pytest.raises(DegeneratePorismError):
        IsoscelesParams(0.0, 1.0)
    with pytest.raises(DegeneratePorismError):
        IsoscelesParams(1.0, -2.0)
    assert abs(IsoscelesParams(1.0, 2.0).zeta - 5.0) < 1e-16


def test_fixture_scene_frozen_values():
    s = scene_from_Ru(FIX_PARAMS)
    assert s.circumcircle.center.dist(Point(0.0, 0.0)) == 0.0
    assert s.circumcircle.radius == 1.25
    e = s.inellipse
    assert e.center.dist(Point(0.0, -7.0 / 52.0)) < 1e-15
    assert abs(e.semi_major - math.sqrt(5.0 / 13.0)) < 1e-15
    assert abs(e.semi_minor - 8.0 / 13.0) < 1e-15
    assert e.major_axis is MajorAxis.HORIZONTAL
    assert s.omega1.dist(Point(1.0 / 13.0, -7.0 / 52.0)) < 1e-15
    assert s.omega2.dist(Point(-1.0 / 13.0, -7.0 / 52.0)) < 1e-15
    assert s.X6.dist(Point(0.0, -5.0 / 28.0)) < 1e-15
    assert s.X182.dist(Point(0.0, -5.0 / 56.0)) < 1e-15
    assert abs(s.brocard_circle.radius - 5.0 / 56.0) < 1e-15
    assert s.X15.dist(Point(0.0, 5.0 * SQRT3 - 8.75)) < 1e-13
    assert s.X16.dist(Point(0.0, -5.0 * SQRT3 - 8.75)) < 1e-13
    assert s.beltrami_P2.dist(Point(-5.0, -8.75)) < 1e-13
    assert s.beltrami_U2.dist(Point(5.0, -8.75)) < 1e-13
    assert abs(s.beltrami_radius - 10.0) < 1e-13


def test_scene_rejects_boundary_params():
    with pytest.raises(DegeneratePorismError):
        scene_from_Ru(PorismParams.from_excess(1.0, 0.0))
    with pytest.raises(DegeneratePorismError):
        scene_from_Ru(PorismParams(0.0, 2.0))


def test_scene_respects_pose():
    rng = random.Random(21)
    base = scene_from_Ru(FIX_PARAMS)
    for _ in range(30):
        pose = Pose(
            translation=Point(rng.uniform(-3, 3), rng.uniform(-3, 3)),
            rotation=rng.choice([0.0, 0.5, 1.0, 1.5]) * math.pi,
            reflect_x=rng.random() < 0.5,
            scale=rng.uniform(0.3, 2.5),
        )
        s = scene_from_Ru(FIX_PARAMS, pose)
        for name in ("omega1", "omega2", "X6", "X15", "X16", "X39", "X182"):
            assert getattr(s, name).dist(pose.apply(getattr(base, name))) < 1e-12
        assert s.X3.dist(pose.apply(base.X3)) < 1e-12
        assert abs(s.circumcircle.radius - pose.scale * 1.25) < 1e-12
        assert abs(s.beltrami_radius - pose.scale * 10.0) < 1e-11


def test_Ru_from_axes_roundtrip():
    rng = random.Random(22)
    for _ in range(100):
        p = PorismParams(rng.uniform(0.2, 3.0), SQRT3 + rng.uniform(1e-3, 4.0))
        s = scene_from_Ru(p)
        q = Ru_from_axes(s.inellipse.semi_major, s.inellipse.semi_minor)
        assert abs(q.R - p.R) < 1e-12 * p.R
        assert abs(q.u - p.u) < 1e-12 * p.u
    with pytest.raises(GeometryError):
        Ru_from_axes(1.0, 1.5)


def test_chart_roundtrip_tall_branch():
    fix = dh_from_Ru(FIX_PARAMS)
    assert abs(fix.d - 1.0) < 1e-15
    assert abs(fix.h - 2.0) < 1e-15
    rng = random.Random(23)
    for _ in range(100):
        d = rng.uniform(0.3, 2.0)
        h = d * rng.uniform(1.85, 4.0)  # h > sqrt(3) d
        iso = IsoscelesParams(d, h)
        back = dh_from_Ru(Ru_from_dh(iso))
        assert abs(back.d - d) < 1e-12 * d
        assert abs(back.h - h) < 1e-12 * h


def test_chart_is_two_to_one():
    """(1, 2) and (15/13, 45/26) are the tall and flat shapes of the same
    porism; the inverse chart picks the tall one."""
    flat = IsoscelesParams(15.0 / 13.0, 45.0 / 26.0)
    p = Ru_from_dh(flat)
    assert abs(p.R - 1.25) < 1e-15
    assert abs(p.u - 1.75) < 1e-15
    tall = dh_from_Ru(p)
    assert abs(tall.d - 1.0) < 1e-14
    assert abs(tall.h - 2.0) < 1e-14
    assert flat.h < SQRT3 * flat.d
    assert tall.h > SQRT3 * tall.d


def test_flat_shape_is_the_mirror_porism():
    """A flat isosceles member belongs to the reflection of the canonical
    scene: same conic axes, conic center on the opposite side of X3."""
    rng = random.Random(24)
    for _ in range(50):
        d = rng.uniform(0.3, 2.0)
        h = d * rng.uniform(0.45, 1.65)  # h < sqrt(3) d
        if abs(h - SQRT3 * d) < 1e-2 * d:
            continue
        iso = IsoscelesParams(d, h)
        _, _, coeffs = isosceles_scene(iso)
        conic = conic_to_ellipse(coeffs)
        canon = scene_from_Ru(Ru_from_dh(iso)).inellipse
        assert conic.center.y > 0.0
        assert conic.center.dist(Point(canon.center.x, -canon.center.y)) < 1e-10
        assert abs(conic.semi_major - canon.semi_major) < 1e-10
        assert abs(conic.semi_minor - canon.semi_minor) < 1e-10


def test_isosceles_scene_matches_canonical_frame():
    tri, circ, coeffs = isosceles_scene(FIX_ISO)
    assert circ.center == Point(0.0, 0.0)
    assert abs(circ.radius - 1.25) < 1e-16
    apex = max(tri.vertices, key=lambda v: v.y)
    assert apex.dist(Point(0.0, 1.25)) < 1e-15
    conic = conic_to_ellipse(coeffs)
    canon = scene_from_Ru(FIX_PARAMS).inellipse
    assert conic.center.dist(canon.center) < 1e-14
    assert abs(conic.semi_major - canon.semi_major) < 1e-14
    assert abs(conic.semi_minor - canon.semi_minor) < 1e-14


def test_conic_to_ellipse_rejections():
    with pytest.raises(GeometryError):
        conic_to_ellipse((1.0, 0.5, 1.0, 0.0, 0.0, -1.0))
    with pytest.raises(GeometryError):
        conic_to_ellipse((1.0, 0.0, -1.0, 0.0, 0.0, -1.0))
    with pytest.raises(GeometryError):
        conic_to_ellipse((1.0, 0.0, 1.0, 0.0, 0.0, 1.0))


def test_vertices_at_covers_the_porism():
    """Every member is inscribed in the chart circumcircle and tangent to
    the inellipse, and keeps the Brocard cotangent of the porism."""
    rng = random.Random(25)
    scene = scene_from_Ru(FIX_PARAMS)
    for _ in range(60):
        t = rng.uniform(0.0, 2.0 * math.pi)
        tri = vertices_at(FIX_ISO, t)
        cc = circumcircle(tri)
        assert cc.center.dist(Point(0.0, 0.0)) < 1e-11
        assert abs(cc.radius - 1.25) < 1e-11
        assert abs(brocard_cotangent(tri) - 1.75) < 1e-10
        for r in closure_residuals(scene, tri):
            assert r < 1e-10


def test_vertices_at_apex_up():
    tri = vertices_at(FIX_ISO, 0.5 * math.pi)
    apex = max(tri.vertices, key=lambda v: v.y)
    assert apex.dist(Point(0.0, 1.25)) < 1e-14
    lows = sorted((v for v in tri.vertices if v is not apex), key=lambda v: v.x)
    assert lows[0].dist(Point(-1.0, -0.75)) < 1e-12
    assert lows[1].dist(Point(1.0, -0.75)) < 1e-12


def test_vertices_at_singularity():
    # only pathologically flat members get near a vanishing denominator
    d, h = 1.0, 1e5
    t_bad = math.atan2(9.0 * d ** 4 - h ** 4, 2.0 * d * h * (3.0 * d * d - h * h))
    with pytest.raises(ParametrizationSingularityError):
        vertices_at(IsoscelesParams(d, h), t_bad)


def test_scene_member_in_posed_scene():
    """Members live on the posed circles; a reflecting pose reverses the
    orientation of every member and therefore swaps the Brocard labels."""
    rng = random.Random(26)
    for reflect in (False, True):
        pose = Pose(
            translation=Point(0.7, -1.3),
            rotation=0.5 * math.pi,
            reflect_x=reflect,
            scale=1.8,
        )
        scene = scene_from_Ru(PorismParams(0.9, 2.4), pose)
        for _ in range(25):
            t = rng.uniform(0.0, 2.0 * math.pi)
            tri = scene_member(scene, t)
            for v in tri.vertices:
                assert scene.circumcircle.membership_residual(v) < 1e-10
            for r in closure_residuals(scene, tri):
                assert r < 1e-9
            o1, o2 = brocard_points_by_construction(tri)
            if reflect:
                o1, o2 = o2, o1
            assert o1.dist(scene.omega1) < 1e-8
            assert o2.dist(scene.omega2) < 1e-8
