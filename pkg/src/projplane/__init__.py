"""Exact constructions in the real projective plane over the rationals."""

from .conic import (
    Conic,
    DualConic,
    change_base,
    conic_through_five,
    contact_point,
    contains,
    dual_conic,
    dual_contains,
    pascal_line,
    polar,
    pole,
    second_intersection,
    secants_through,
    sixth_point,
    tangent_at,
    trace,
)
from .core import (
    Branch,
    Line,
    Point,
    apart,
    cotransitive_pick,
    dualize,
    incident,
    join,
    line_apart,
    meet,
    noncollinear,
    outside,
    point_apart,
)
from .errors import (
    CenterOnLine,
    ChainMismatch,
    Degenerate,
    DegenerateFive,
    GeometryError,
    NoMovedPoint,
    NotApart,
    NotFixed,
    NotOnConic,
    OffDomain,
    Perspective,
    SameLine,
    TangentLine,
    TangentsConcurrent,
)
from .harmonic import Quadrangle, diagonal_points, fano_check, harmonic_conjugate, is_harmonic_set
from .projectivity import (
    PencilProjectivity,
    RangeProjectivity,
    apply,
    axis_of_homology,
    compose,
    equal,
    from_three_points,
    harmonic_involution,
    inverse,
    involution_from_swap,
    is_involution,
    is_nonperspective,
    projection,
    second_fixed_point,
)

__version__ = "0.1.0"
