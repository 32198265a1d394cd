"""Steiner conics: the locus ``{l . pi(l) : l through U}`` of a pencil map.

A :class:`Conic` holds two base points ``U``, ``V`` and a nonperspective
projectivity ``pi`` from the pencil at ``U`` to the pencil at ``V``.  All
constructions stay rational: lines are only ever intersected with the conic
at a known member, and the other point comes from one pencil map.

Anything that needs a member ``P`` as a base point rebases the conic to
``(Q, P)`` by refitting through five members; the five-point conic is
unique, so the rebased conic has the same points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, islice
from typing import Callable, Iterator, Sequence

from .core import (
    Branch,
    Line,
    Point,
    cotransitive_pick,
    dualize,
    incident,
    join,
    meet,
    outside,
    point_apart,
    scan_line,
)
from .errors import (
    Degenerate,
    DegenerateFive,
    GeometryError,
    NotApart,
    NotOnConic,
    TangentLine,
    TangentsConcurrent,
)
from .harmonic import harmonic_conjugate
from .projectivity import (
    PencilProjectivity,
    RangeProjectivity,
    axis_of_homology,
    from_three_points,
    pencil_from_three_lines,
)

_LABELS = ("U", "V", "A", "B", "C")


@dataclass(frozen=True)
class Conic:
    """``k(pi; U, V)``.  ``points`` records the five defining points, if any."""

    U: Point
    V: Point
    pi: PencilProjectivity
    points: tuple[Point, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not point_apart(self.U, self.V):
            raise NotApart("base points coincide")
        if self.pi.source != self.U or self.pi.target != self.V:
            raise Degenerate("pencil map is not between the pencils at U and V")
        uv = join(self.U, self.V)
        if self.pi.apply(uv) == uv:
            raise Degenerate("a perspective pencil map gives a line pair")

    @property
    def base_line(self) -> Line:
        return join(self.U, self.V)

    def __contains__(self, x: Point) -> bool:
        return contains(self, x)

    def to_dict(self) -> dict:
        pts = self.points or (self.U, self.V, *trace(self, 3))
        return {"points": [list(p.v) for p in pts]}


def conic_through_five(u: Point, v: Point, a: Point, b: Point, c: Point) -> Conic:
    """The conic with base points ``u, v`` through ``a, b, c``."""
    pts = (u, v, a, b, c)
    for i, j in combinations(range(5), 2):
        if not point_apart(pts[i], pts[j]):
            raise DegenerateFive(f"{_LABELS[i]} and {_LABELS[j]} coincide")
    for i, j, k in combinations(range(5), 3):
        if not outside(pts[k], join(pts[i], pts[j])):
            raise DegenerateFive(f"{_LABELS[i]}, {_LABELS[j]}, {_LABELS[k]} are collinear")
    pi = pencil_from_three_lines(
        [join(u, a), join(u, b), join(u, c)],
        [join(v, a), join(v, b), join(v, c)],
    )
    return Conic(u, v, pi, pts)


def contains(k: Conic, x: Point) -> bool:
    if x == k.U:
        return True
    return incident(x, k.pi.apply(join(k.U, x)))


def _pencil_lines(p: Point) -> Iterator[Line]:
    """Lines through ``p`` in scan order."""
    for q in scan_line(dualize(p)):
        yield dualize(q)


def members(k: Conic) -> Iterator[Point]:
    """Members other than ``U`` and ``V``, one per pencil line through ``U``."""
    uv = k.base_line
    for l in _pencil_lines(k.U):
        if l == uv:
            continue
        x = meet(l, k.pi.apply(l))
        if x != k.U:  # l is the tangent at U
            yield x


def trace(k: Conic, n: int) -> list[Point]:
    if n < 1:
        raise ValueError("trace needs n >= 1")
    return list(islice(members(k), n))


def _require_member(k: Conic, *pts: Point) -> None:
    for p in pts:
        if not contains(k, p):
            raise NotOnConic(f"{p} is not on the conic")


def change_base(k: Conic, u1: Point, v1: Point) -> Conic:
    """The same point set with base points ``u1``, ``v1``."""
    _require_member(k, u1, v1)
    if not point_apart(u1, v1):
        raise NotApart("new base points coincide")
    if (u1, v1) == (k.U, k.V):
        return k
    base = (k.U, k.V, u1, v1)
    extra = [x for x in islice(members(k), 7) if all(point_apart(x, b) for b in base)][:3]
    return conic_through_five(u1, v1, *extra)


@lru_cache(maxsize=4096)
def _rebase(k: Conic, p: Point) -> Conic:
    """``k`` with ``p`` as second base point."""
    if p == k.V:
        return k
    q = next(x for x in members(k) if point_apart(x, p))
    return change_base(k, q, p)


def membership_equal(k1: Conic, k2: Conic, n: int = 20) -> bool:
    """Each conic contains the other's base points and first ``n`` traced points."""
    return all(contains(k2, x) for x in (k1.U, k1.V, *trace(k1, n))) and all(
        contains(k1, x) for x in (k2.U, k2.V, *trace(k2, n))
    )


def tangent_at(k: Conic, p: Point, via: Point | None = None) -> Line:
    """The tangent at the member ``p``, as ``pi1(QP)`` for the ``(Q, P)`` base.

    ``via`` picks ``Q``; by default the first traced member apart from ``p``.
    """
    _require_member(k, p)
    if via is None:
        if p == k.V:
            return k.pi.apply(k.base_line)
        if p == k.U:
            return k.pi.inverse().apply(k.base_line)
        k1 = _rebase(k, p)
    else:
        _require_member(k, via)
        if not point_apart(via, p):
            raise NotApart("auxiliary member coincides with the contact point")
        k1 = change_base(k, via, p)
    return k1.pi.apply(join(k1.U, p))


def second_intersection(k: Conic, p: Point, l: Line) -> Point:
    """The other member on a line ``l`` through the member ``p``."""
    _require_member(k, p)
    if not incident(p, l):
        raise Degenerate(f"{p} is not on {l}")
    if p == k.U:
        r = meet(l, k.pi.apply(l))
    else:
        k1 = _rebase(k, p)
        r = meet(l, k1.pi.inverse().apply(l))
    if r == p:
        raise TangentLine(f"{l} is the tangent at {p}")
    return r


# --- Pascal ----------------------------------------------------------------

def pascal_points(k: Conic, hexagon: Sequence[Point]) -> tuple[Point, Point, Point]:
    """``(AB.DE, BC.EF, CD.FA)`` for an inscribed hexagon in cyclic order."""
    if len(hexagon) != 6:
        raise ValueError("a hexagon has six vertices")
    _require_member(k, *hexagon)
    for i, j in combinations(range(6), 2):
        if not point_apart(hexagon[i], hexagon[j]):
            raise NotApart(f"hexagon vertices {i} and {j} coincide")
    a, b, c, d, e, f = hexagon
    return (
        meet(join(a, b), join(d, e)),
        meet(join(b, c), join(e, f)),
        meet(join(c, d), join(f, a)),
    )


def pascal_line(k: Conic, hexagon: Sequence[Point]) -> Line:
    x, y, z = pascal_points(k, hexagon)
    if not (point_apart(x, y) and point_apart(y, z) and point_apart(x, z)):
        raise Degenerate("opposite-side meets coincide")
    line = join(x, y)
    if not incident(z, line):
        raise Degenerate("opposite-side meets are not collinear")
    return line


def _step(name: str, fn: Callable, *args):
    try:
        return fn(*args)
    except NotApart as exc:
        raise Degenerate(f"subterm {name} is undefined: {exc}") from exc


def sixth_point(a: Point, b: Point, c: Point, d: Point, e: Point, l: Line) -> Point:
    """The other point of the conic through ``a..e`` on a line ``l`` through ``e``.

    ``F = l . A(CD . (AB.DE)(BC.l))``; no conic object is needed.  When ``l``
    is the tangent at ``e`` this returns ``e``.
    """
    pts = (a, b, c, d, e)
    for i, j in combinations(range(5), 2):
        if not point_apart(pts[i], pts[j]):
            raise NotApart(f"points {i} and {j} coincide")
    if not incident(e, l):
        raise Degenerate(f"{e} is not on {l}")
    for name, p in zip("ABCD", (a, b, c, d)):
        if not outside(p, l):
            raise Degenerate(f"{name} lies on {l}")
    x = _step("AB.DE", meet, join(a, b), join(d, e))
    y = _step("BC.l", meet, join(b, c), l)
    xy = _step("(AB.DE)(BC.l)", join, x, y)
    z = _step("CD.(AB.DE)(BC.l)", meet, join(c, d), xy)
    az = _step("A(CD.(AB.DE)(BC.l))", join, a, z)
    return _step("l.A(CD.(AB.DE)(BC.l))", meet, l, az)


# --- secants ---------------------------------------------------------------

def _secant_from_triple(k: Conic, p: Point, triple: Sequence[Point]) -> tuple[Line, Point]:
    """A secant ``PX`` with ``X`` one of the three members, ``p`` outside its tangent."""
    a, b, c = triple
    ta, tb, tc = (tangent_at(k, x) for x in triple)
    e, f = meet(ta, tb), meet(tb, tc)
    if not point_apart(e, f):
        raise TangentsConcurrent("tangents at three members are concurrent")
    if cotransitive_pick(e, f, p) is Branch.FIRST_APART:
        choices = ((a, ta), (b, tb))
    else:
        choices = ((b, tb), (c, tc))
    for x, tx in choices:
        if outside(p, tx):
            return join(p, x), x
    raise Degenerate("point lies on two tangents through their common point")


def _default_triple(k: Conic) -> list[Point]:
    return [k.U, k.V, *trace(k, 1)]


def secant_members(k: Conic, p: Point) -> tuple[tuple[Point, Point], tuple[Point, Point]]:
    """Member pairs of two distinct secants through ``p``."""
    _, x = _secant_from_triple(k, p, _default_triple(k))
    r = second_intersection(k, x, join(p, x))
    others = [m for m in (k.U, k.V, *trace(k, 5)) if point_apart(m, x) and point_apart(m, r)][:3]
    _, x2 = _secant_from_triple(k, p, others)
    r2 = second_intersection(k, x2, join(p, x2))
    return (x, r), (x2, r2)


def secants_through(k: Conic, p: Point) -> tuple[Line, Line]:
    (x, r), (x2, r2) = secant_members(k, p)
    return join(x, r), join(x2, r2)


# --- tangents as a line-conic ------------------------------------------------

@dataclass(frozen=True)
class DualConic:
    """The line-conic ``{Q phi(Q) : Q on a}`` for ``phi`` from range ``a`` to range ``b``."""

    a: Line
    b: Line
    phi: RangeProjectivity

    def as_conic(self) -> Conic:
        """The same object read in the dual plane."""
        return Conic(dualize(self.a), dualize(self.b), PencilProjectivity(self.phi))


def dual_contains(lam: DualConic, l: Line) -> bool:
    if l == lam.a:
        return True
    return incident(lam.phi(meet(l, lam.a)), l)


def contact_point(lam: DualConic, l: Line) -> Point:
    """The point of ``l`` through which no other line of ``lam`` passes."""
    return dualize(tangent_at(lam.as_conic(), dualize(l)))


def dual_conic(k: Conic) -> DualConic:
    """The tangents of ``k`` as a line-conic, built from members ``U, V`` and one more.

    With tangents ``a, b, c`` and ``E = a.b``, ``F = b.c``, ``G = a.c`` the
    map ``phi`` sends ``A, E, G`` on ``a`` to ``E, B, F`` on ``b``.
    """
    pa, pb, pc = _default_triple(k)
    a, b, c = (tangent_at(k, x) for x in (pa, pb, pc))
    e, f, g = meet(a, b), meet(b, c), meet(a, c)
    if not (point_apart(e, f) and point_apart(e, g) and point_apart(f, g)):
        raise TangentsConcurrent("tangents at three members are concurrent")
    return DualConic(a, b, from_three_points((pa, e, g), (e, pb, f)))


# --- poles and polars ------------------------------------------------------

def polar_via_secant(p: Point, k: Conic, q1: Point, q2: Point) -> Line:
    """``QQ'`` from a secant through ``p`` with members ``q1``, ``q2``.

    ``Q`` is the meet of the tangents at the members and ``Q'`` the harmonic
    conjugate of ``p`` with respect to them.
    """
    _require_member(k, q1, q2)
    if not point_apart(q1, q2):
        raise NotApart("secant members coincide")
    if not incident(p, join(q1, q2)):
        raise Degenerate(f"{p} is not on the secant")
    t1, t2 = tangent_at(k, q1), tangent_at(k, q2)
    q = _step("q1.q2", meet, t1, t2)
    q_conj = harmonic_conjugate(q1, q2, p)
    return _step("QQ'", join, q, q_conj)


def polar(p: Point, k: Conic) -> Line:
    (q1, q2), _ = secant_members(k, p)
    return polar_via_secant(p, k, q1, q2)


def pole(l: Line, k: Conic) -> Point:
    """The dual construction: a polar taken in the dual plane of the tangent line-conic."""
    return dualize(polar(dualize(l), dual_conic(k).as_conic()))


def center_of_homology(k: Conic) -> Point:
    """Meet of the tangents at the base points."""
    return meet(tangent_at(k, k.U), tangent_at(k, k.V))


def dual_axis(k: Conic) -> Point:
    """The axis of homology of the dual range map of ``pi``, read as a point."""
    return dualize(axis_of_homology(k.pi.range))


__all__ = [
    "Conic",
    "DualConic",
    "center_of_homology",
    "change_base",
    "conic_through_five",
    "contact_point",
    "contains",
    "dual_axis",
    "dual_conic",
    "dual_contains",
    "members",
    "membership_equal",
    "pascal_line",
    "pascal_points",
    "polar",
    "polar_via_secant",
    "pole",
    "second_intersection",
    "secant_members",
    "secants_through",
    "sixth_point",
    "tangent_at",
    "trace",
]
