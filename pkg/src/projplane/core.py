"""Points, lines and the incidence/apartness algebra of P2(Q).

A point is a one-dimensional subspace of Q^3 and a line a two-dimensional
one; both are carried by a nonzero integer triple kept in a canonical form
(coprime entries, first nonzero entry positive), so projective equality is
plain tuple equality.  Over the rationals every relation here is decidable:
``point_apart`` is exactly "cross product nonzero" and ``outside`` is
exactly "dot product nonzero".
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator, Sequence, Tuple, Union

from .errors import Degenerate, NotApart

Scalar = Fraction
Number = Union[int, Fraction, str]
Vec = Tuple[int, int, int]


def scalar(value: Number) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to an exact rational.

    Floats are rejected: there is no inexact backend.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"not an exact rational: {value!r}")


def canonical(values: Iterable[Number]) -> tuple[int, ...]:
    """Scale a nonzero rational vector to coprime integers, first nonzero positive."""
    fracs = [scalar(v) for v in values]
    if all(f == 0 for f in fracs):
        raise Degenerate("the zero vector has no projective class")
    den = lcm(*(f.denominator for f in fracs))
    ints = [f.numerator * (den // f.denominator) for f in fracs]
    g = gcd(*ints)
    ints = [i // g for i in ints]
    for i in ints:
        if i:
            if i < 0:
                ints = [-j for j in ints]
            break
    return tuple(ints)


def cross(u: Sequence[int], v: Sequence[int]) -> Vec:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def is_zero(u: Sequence) -> bool:
    return not (u[0] or u[1] or u[2])


class HVec:
    """A homogeneous triple, stored canonically."""

    __slots__ = ("_c",)

    def __init__(self, x: Number, y: Number, z: Number):
        self._c = canonical((x, y, z))

    @classmethod
    def _trusted(cls, c: Vec) -> "HVec":
        obj = cls.__new__(cls)
        obj._c = c
        return obj

    @property
    def x(self) -> int:
        return self._c[0]

    @property
    def y(self) -> int:
        return self._c[1]

    @property
    def z(self) -> int:
        return self._c[2]

    @property
    def vec(self) -> Vec:
        return self._c

    def __iter__(self) -> Iterator[int]:
        return iter(self._c)

    def __getitem__(self, i: int) -> int:
        return self._c[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HVec):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"HVec{self._c}"


def _as_hvec(args: tuple) -> HVec:
    if len(args) == 1:
        (arg,) = args
        if isinstance(arg, HVec):
            return arg
        if isinstance(arg, (_Element)):
            return arg.coords
        return HVec(*arg)
    if len(args) == 3:
        return HVec(*args)
    raise TypeError(f"expected three coordinates, got {len(args)}")


class _Element:
    __slots__ = ("coords",)
    _open = _close = ""

    def __init__(self, *args):
        self.coords = _as_hvec(args)

    @classmethod
    def of(cls, v: Sequence[int]):
        """Build from a raw integer vector (canonicalized here)."""
        return cls(HVec._trusted(canonical(v)) if not is_zero(v) else HVec(*v))

    @property
    def v(self) -> Vec:
        return self.coords.vec

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.coords))

    def __repr__(self) -> str:
        return f"{type(self).__name__}{self.v}"

    def __str__(self) -> str:
        a, b, c = self.v
        return f"{self._open}{a}, {b}, {c}{self._close}"


class Point(_Element):
    """A point of P2(Q), written ``(a, b, c)``."""

    __slots__ = ()
    _open, _close = "(", ")"


class Line(_Element):
    """A line of P2(Q), written ``[a, b, c]``."""

    __slots__ = ()
    _open, _close = "[", "]"


Element = Union[Point, Line]


# --- relations -------------------------------------------------------------

def point_apart(p: Point, q: Point) -> bool:
    return not is_zero(cross(p.v, q.v))


def line_apart(l: Line, m: Line) -> bool:
    return not is_zero(cross(l.v, m.v))


def apart(a: Element, b: Element) -> bool:
    """Apartness for two points or two lines."""
    if type(a) is not type(b):
        raise TypeError("apartness compares two points or two lines")
    return not is_zero(cross(a.v, b.v))


def incident(p: Point, l: Line) -> bool:
    return dot(p.v, l.v) == 0


def outside(p: Point, l: Line) -> bool:
    """``p`` lies outside ``l``: the dot product is apart from zero."""
    return dot(p.v, l.v) != 0


def noncollinear(p: Point, q: Point, r: Point) -> bool:
    """Three points are distinct and the third avoids the join of the others."""
    return point_apart(p, q) and outside(r, join(p, q))


# --- constructions ---------------------------------------------------------

def join(p: Point, q: Point) -> Line:
    c = cross(p.v, q.v)
    if is_zero(c):
        raise NotApart(f"join needs distinct points, got {p} twice")
    return Line.of(c)


def meet(l: Line, m: Line) -> Point:
    c = cross(l.v, m.v)
    if is_zero(c):
        raise NotApart(f"meet needs distinct lines, got {l} twice")
    return Point.of(c)


def dualize(x: Element) -> Element:
    """Reinterpret point coordinates as line coordinates and vice versa."""
    if isinstance(x, Point):
        return Line(x.coords)
    if isinstance(x, Line):
        return Point(x.coords)
    raise TypeError(f"cannot dualize {x!r}")


class Branch(enum.Enum):
    FIRST_APART = "FirstApart"
    SECOND_APART = "SecondApart"


def cotransitive_pick(p: Point, q: Point, r: Point) -> Branch:
    """Given ``p`` apart from ``q``, report a point of the pair that ``r`` is apart from.

    ``r != p`` is tested first and wins whenever it holds.
    """
    if not point_apart(p, q):
        raise NotApart("cotransitivity needs a pair of distinct points")
    if point_apart(r, p):
        return Branch.FIRST_APART
    return Branch.SECOND_APART


def line_basis(l: Line) -> tuple[Point, Point]:
    """Two fixed distinct points spanning ``l``.

    Candidates are ``l x e3``, ``l x e2``, ``l x e1`` in that order; the first
    nonzero one is the base point and the next one apart from it is the
    direction.
    """
    cands = []
    for e in ((0, 0, 1), (0, 1, 0), (1, 0, 0)):
        c = cross(l.v, e)
        if not is_zero(c):
            cands.append(Point.of(c))
    q = cands[0]
    r = next(c for c in cands[1:] if point_apart(c, q))
    return q, r


def scan_line(l: Line) -> Iterator[Point]:
    """The points ``<q + t r>`` for ``t = 0, 1, 2, ...`` on ``l``."""
    q, r = line_basis(l)
    t = 0
    while True:
        yield Point.of(tuple(a + t * b for a, b in zip(q.v, r.v)))
        t += 1


def fresh_point_on(l: Line, avoid: Iterable[Point] = ()) -> Point:
    """First scanned point of ``l`` apart from every avoided point lying on ``l``."""
    avoid = [a for a in avoid if incident(a, l)]
    for p in scan_line(l):
        if all(point_apart(p, a) for a in avoid):
            return p
    raise AssertionError("unreachable: the scan is infinite")


def fresh_points_on(l: Line, n: int, avoid: Iterable[Point] = ()) -> list[Point]:
    """``n`` pairwise-apart scanned points of ``l`` avoiding ``avoid``."""
    out: list[Point] = []
    avoid = list(avoid)
    for _ in range(n):
        p = fresh_point_on(l, avoid + out)
        out.append(p)
    return out


# A line holds at most two of these points (they lie on the conic y^2 = xz),
# so any two lines leave at least two survivors.
PRIMARY_POOL: tuple[Point, ...] = tuple(Point(1, t, t * t) for t in range(0, 6))
SHIFTED_POOL: tuple[Point, ...] = tuple(Point(1, t, t * t) for t in range(7, 13))


def pool_point_outside(*lines: Line, pool: Sequence[Point] = PRIMARY_POOL) -> Point:
    """First pool point outside every given line (at most two lines)."""
    for p in pool:
        if all(outside(p, l) for l in lines):
            return p
    raise Degenerate("auxiliary pool exhausted")
