"""Quadrangles and the harmonic conjugate construction.

The conjugate ``h(A, B; C)`` is built for every point ``C`` of the line
``AB``, base points included: pick a line ``l`` through ``C`` other than
``AB`` and a point ``R`` off both lines, then

    P = BR.l,  Q = AR.l,  S = AP.BQ,  D = AB.RS.

The auxiliaries are drawn from a fixed point pool so the result is
deterministic; a different pool must give the same ``D``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    PRIMARY_POOL,
    Line,
    Point,
    incident,
    join,
    meet,
    outside,
    point_apart,
    pool_point_outside,
)
from .errors import Degenerate, NotApart


@dataclass(frozen=True)
class Quadrangle:
    """Four points, each three noncollinear."""

    P: Point
    Q: Point
    R: Point
    S: Point

    def __post_init__(self):
        pts = self.vertices
        for i in range(4):
            for j in range(i + 1, 4):
                if not point_apart(pts[i], pts[j]):
                    raise Degenerate(f"quadrangle vertices {i} and {j} coincide")
        for i, j, k in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
            if not outside(pts[k], join(pts[i], pts[j])):
                raise Degenerate(f"quadrangle vertices {i}, {j}, {k} are collinear")

    @property
    def vertices(self) -> tuple[Point, Point, Point, Point]:
        return (self.P, self.Q, self.R, self.S)


def diagonal_points(q: Quadrangle) -> tuple[Point, Point, Point]:
    """``(PQ.RS, PR.QS, PS.QR)``."""
    P, Q, R, S = q.vertices
    return (
        meet(join(P, Q), join(R, S)),
        meet(join(P, R), join(Q, S)),
        meet(join(P, S), join(Q, R)),
    )


def fano_check(q: Quadrangle) -> bool:
    """True iff the third diagonal point lies outside the join of the first two."""
    d1, d2, d3 = diagonal_points(q)
    return outside(d3, join(d1, d2))


@dataclass(frozen=True)
class HarmonicWitness:
    A: Point
    B: Point
    C: Point
    l: Line
    R: Point
    P: Point
    Q: Point
    S: Point
    D: Point


def _base_line(a: Point, b: Point, c: Point) -> Line:
    if not point_apart(a, b):
        raise NotApart("harmonic conjugate needs distinct base points")
    ab = join(a, b)
    if not incident(c, ab):
        raise Degenerate(f"{c} is not on the base line {ab}")
    return ab


def select_auxiliary(
    a: Point, b: Point, c: Point, pool: Sequence[Point] = PRIMARY_POOL
) -> tuple[Line, Point]:
    """The line ``l`` through ``c`` and the point ``R`` off ``AB`` and ``l``.

    ``l`` joins ``c`` to the first pool point off ``AB``; ``R`` is the first
    pool point off both lines.  Only the line ``AB`` and ``c`` matter, so
    swapping ``a`` and ``b`` selects the same pair.
    """
    ab = _base_line(a, b, c)
    l = join(c, pool_point_outside(ab, pool=pool))
    r = pool_point_outside(ab, l, pool=pool)
    return l, r


def harmonic_witness(
    a: Point, b: Point, c: Point, pool: Sequence[Point] = PRIMARY_POOL
) -> HarmonicWitness:
    ab = _base_line(a, b, c)
    l, r = select_auxiliary(a, b, c, pool)
    p = meet(join(b, r), l)
    q = meet(join(a, r), l)
    s = meet(join(a, p), join(b, q))
    d = meet(ab, join(r, s))
    return HarmonicWitness(a, b, c, l, r, p, q, s, d)


def harmonic_conjugate(
    a: Point, b: Point, c: Point, pool: Sequence[Point] = PRIMARY_POOL
) -> Point:
    return harmonic_witness(a, b, c, pool).D


def is_harmonic_set(a: Point, b: Point, c: Point, d: Point) -> bool:
    ab = _base_line(a, b, c)
    if not incident(d, ab):
        raise Degenerate(f"{d} is not on the base line {ab}")
    return harmonic_conjugate(a, b, c) == d
