"""The porism-to-porism recurrence.

The second Brocard triangles of a porism's members sweep a new porism
inscribed in the parent's Brocard circle.  In parameters the map is

    R' = R*sqrt(u^2 - 3)/(2u),   u' = (u^2 + 3)/(2u),

with sqrt(3) the unique attracting fixed point of the u map; iterates
converge quadratically, so the error tracking below works on the excess
u - sqrt(3) (see :class:`~brocard.porism.PorismParams`).  The child frame
sits at the parent's X182 and is mirrored left-right, which swaps the two
Brocard point labels each generation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .geom import Circle, GeometryError, Line, Point, Pose, three_point_circle
from .porism import (
    DegeneratePorismError,
    IsoscelesParams,
    PorismParams,
    PorismScene,
    Ru_from_dh,
    SQRT3,
    isosceles_scene,
    scene_from_Ru,
)


class Direction(enum.Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


@dataclass(frozen=True)
class OrbitState:
    generation: int
    params: PorismParams
    pose: Pose


@dataclass(frozen=True)
class Convergence:
    limit_u: float
    errors_u: tuple[float, ...]
    ratio_diagnostic: tuple[float, ...]


@dataclass(frozen=True)
class OrbitTrace:
    states: tuple[OrbitState, ...]
    direction: Direction
    convergence: Convergence


def step_forward(params: PorismParams) -> PorismParams:
    """One application of the porism map; fixes u = sqrt(3) with R' = 0."""
    u, e = params.u, params.u_excess
    # u' - sqrt3 = (u - sqrt3)^2 / (2u), an exact rearrangement that never
    # cancels, unlike evaluating (u^2+3)/(2u) - sqrt3 in floats.
    return PorismParams.from_excess(
        params.R * params.gap / (2.0 * u),
        e * e / (2.0 * u),
    )


def step_backward(params: PorismParams) -> PorismParams:
    """The inverse map, on the branch with larger u.

    Of the two preimages u +- sqrt(u^2 - 3) of the u map, the product of
    the pair is 3, so exactly one is >= sqrt(3); that one is u + sqrt(u^2-3),
    and the radius follows from inverting R' = R*sqrt(u^2-3)/(2u).
    """
    if params.u_excess <= 0.0 or params.R <= 0.0:
        raise GeometryError("fixed point has no preimage with larger u")
    g = params.gap
    pre = PorismParams.from_excess(1.0, params.u_excess + g)
    return PorismParams.from_excess(2.0 * pre.u * params.R / pre.gap, pre.u_excess)


def _child_offset(child: PorismParams) -> Pose:
    # Child canonical frame -> parent canonical frame: drop to the parent's
    # X182 and mirror x, which realizes the Brocard-label swap.
    return Pose(translation=Point(0.0, -child.R), reflect_x=True)


def child_scene(parent: PorismScene) -> PorismScene:
    child = step_forward(parent.params)
    if child.R <= 0.0 or child.u_excess <= 0.0:
        raise DegeneratePorismError("degenerate porism")
    return scene_from_Ru(child, parent.pose.compose(_child_offset(child)))


def anti_scene(scene: PorismScene) -> PorismScene:
    """The porism whose child is ``scene``, posed so the step is exact."""
    parent = step_backward(scene.params)
    pose = scene.pose.compose(_child_offset(scene.params).inverse())
    return scene_from_Ru(parent, pose)


def orbit(start: PorismParams, n: int, direction: Direction) -> OrbitTrace:
    """Iterate the map ``n`` times from ``start`` with pose bookkeeping.

    Forward orbits stop early once R or the u excess underflows to zero;
    the trace then ends at the last representable generation.
    """
    if n < 0:
        raise ValueError("orbit length must be >= 0")
    states = [OrbitState(0, start, Pose.identity())]
    for k in range(n):
        current = states[-1]
        if direction is Direction.FORWARD:
            nxt = step_forward(current.params)
            if nxt.R <= 0.0 or nxt.u_excess <= 0.0:
                break
            pose = current.pose.compose(_child_offset(nxt))
        else:
            nxt = step_backward(current.params)
            pose = current.pose.compose(_child_offset(current.params).inverse())
        states.append(OrbitState(k + 1, nxt, pose))
    errors = tuple(s.params.u_excess for s in states)
    ratios: tuple[float, ...] = ()
    if direction is Direction.FORWARD:
        ratios = tuple(
            errors[k + 1] / (errors[k] * errors[k])
            for k in range(len(errors) - 1)
            if errors[k] > 0.0
        )
    return OrbitTrace(tuple(states), direction, Convergence(SQRT3, errors, ratios))


def orbit_scenes(root: PorismScene, n: int) -> list[PorismScene]:
    """Scenes of ``n`` forward generations starting at ``root``."""
    scenes = [root]
    for _ in range(n):
        scenes.append(child_scene(scenes[-1]))
    return scenes


def alternating_brocard_sequence(
    root: PorismScene, n: int
) -> tuple[tuple[Point, ...], tuple[Point, ...]]:
    """World Brocard points of generations 0..n, labels alternating.

    The first list starts at the root's first Brocard point and takes the
    second point of the next generation, and so on; both lists live on the
    root's two Beltrami circles and converge to the world X15.  Once deep
    generations exhaust float range the points are reported at that limit.
    """
    if n < 1:
        raise ValueError("need at least one generation")
    first: list[Point] = []
    second: list[Point] = []
    scene: PorismScene | None = root
    for k in range(n + 1):
        if scene is None:
            first.append(root.X15)
            second.append(root.X15)
            continue
        if k % 2 == 0:
            first.append(scene.omega1)
            second.append(scene.omega2)
        else:
            first.append(scene.omega2)
            second.append(scene.omega1)
        if k < n:
            try:
                scene = child_scene(scene)
            except DegeneratePorismError:
                scene = None
    return tuple(first), tuple(second)


def apollonius_circles(iso: IsoscelesParams) -> tuple[Circle, Circle, Line]:
    """Apollonius circles of the isosceles member's base segment.

    The two proper circles through X15, X16 and one base vertex each are
    the scene's Beltrami circles, returned in the order matching
    (first, second); the degenerate third circle is the Brocard axis.
    """
    scene = scene_from_Ru(Ru_from_dh(iso))
    tri, _, _ = isosceles_scene(iso)
    through_a = three_point_circle(tri.A, scene.X15, scene.X16)
    through_b = three_point_circle(tri.B, scene.X15, scene.X16)
    c1, c2 = scene.beltrami_circles()
    if through_a.center.dist(c1.center) <= through_b.center.dist(c1.center):
        matched = (through_a, through_b)
    else:
        matched = (through_b, through_a)
    axis = Line(scene.X3, Point(0.0, 1.0))
    return matched[0], matched[1], axis
