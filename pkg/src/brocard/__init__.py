"""Numerical geometry of the Brocard porism.

Scenes of triangles inscribed in a circle and circumscribing the Brocard
inellipse, the second-Brocard-triangle recurrence between them, the
continuous one-parameter family sharing its isodynamic points, and a
residual-check suite over all of it.
"""

from .centers import (
    EquilateralDegeneracyError,
    StandardCenters,
    brocard_angle,
    brocard_cotangent,
    brocard_points_by_construction,
    second_brocard_triangle,
    standard_centers,
)
from .checks import CheckReport, UnknownCheckFilterError, run_checks
from .continuous import (
    ContinuousPorism,
    T_CRITICAL,
    T_MAX,
    bt_scene,
    ellipse_Et,
    embed_step,
    envelope_points,
    family_extrema,
    porism_Bt,
    t_from_u,
    u_from_t,
)
from .geom import (
    AxisAlignedEllipse,
    Circle,
    GeometryError,
    Line,
    Point,
    Pose,
    Triangle,
    circumcircle,
    invert_in_circle,
)
from .porism import (
    DegeneratePorismError,
    IsoscelesParams,
    ParametrizationSingularityError,
    PorismParams,
    PorismScene,
    Ru_from_axes,
    Ru_from_dh,
    closure_residuals,
    dh_from_Ru,
    scene_from_Ru,
    scene_member,
)
from .recurrence import (
    Direction,
    alternating_brocard_sequence,
    anti_scene,
    child_scene,
    orbit,
    orbit_scenes,
    step_backward,
    step_forward,
)

__version__ = "0.1.0"

__all__ = [
    "AxisAlignedEllipse",
    "CheckReport",
    "Circle",
    "ContinuousPorism",
    "DegeneratePorismError",
    "Direction",
    "EquilateralDegeneracyError",
    "GeometryError",
    "IsoscelesParams",
    "Line",
    "ParametrizationSingularityError",
    "Point",
    "PorismParams",
    "PorismScene",
    "Pose",
    "Ru_from_axes",
    "Ru_from_dh",
    "StandardCenters",
    "T_CRITICAL",
    "T_MAX",
    "Triangle",
    "UnknownCheckFilterError",
    "alternating_brocard_sequence",
    "anti_scene",
    "brocard_angle",
    "brocard_cotangent",
    "brocard_points_by_construction",
    "bt_scene",
    "child_scene",
    "circumcircle",
    "closure_residuals",
    "dh_from_Ru",
    "ellipse_Et",
    "embed_step",
    "envelope_points",
    "family_extrema",
    "invert_in_circle",
    "orbit",
    "orbit_scenes",
    "porism_Bt",
    "run_checks",
    "scene_from_Ru",
    "scene_member",
    "second_brocard_triangle",
    "standard_centers",
    "step_backward",
    "step_forward",
    "t_from_u",
    "u_from_t",
]
