"""Exception hierarchy for the geometric kernel.

Every construction raises a :class:`GeometryError` subclass when an input
fails an apartness or incidence precondition; the kernel never returns a
sentinel in place of a point or line.
"""


class GeometryError(Exception):
    """Base class for all kernel precondition failures."""


class NotApart(GeometryError):
    """Two elements required to be distinct coincide."""


class Degenerate(GeometryError):
    """A configuration violates a noncollinearity or incidence requirement."""


class OffDomain(GeometryError):
    """A point does not lie on the domain line of a projectivity."""


class ChainMismatch(GeometryError):
    """Composition of projectivities whose ranges do not chain."""


class CenterOnLine(GeometryError):
    """A projection center fails to lie outside one of its lines."""


class SameLine(GeometryError):
    """A projectivity between distinct ranges was required."""


class Perspective(GeometryError):
    """A nonperspective projectivity was required."""


class NoMovedPoint(GeometryError):
    """No sampled point witnesses that a projectivity differs from the identity."""


class NotFixed(GeometryError):
    """A point expected to be fixed by a projectivity is moved."""


class NotOnConic(GeometryError):
    """A point required to be a member of a conic is not."""


class TangentLine(GeometryError):
    """A secant was required but the line is the tangent."""


class DegenerateFive(GeometryError):
    """Five points fail to determine a nonsingular conic."""


class TangentsConcurrent(GeometryError):
    """Three tangents of a conic pass through one point."""
