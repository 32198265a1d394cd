"""Projectivities between ranges of points, carried as 3x3 integer matrices.

Every projectivity is assembled from projections (center ``T``, lines
``l -> m``, ``X -> TX.m``) and multiplied out immediately.  The projection
matrix comes from the triple-product expansion of ``(t x x) x m``:

    M = (t.m) I - t m^T + m l^T

The last term vanishes on the domain ``l`` and only serves to make ``M``
invertible (it sends the center ``t`` to ``(l.t) m``).

Two projectivities with the same domain and codomain are the same map
exactly when they agree on three distinct points of the domain; :func:`equal`
checks this on three fixed samples.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import (
    Line,
    Point,
    canonical,
    dot,
    dualize,
    fresh_points_on,
    incident,
    is_zero,
    join,
    line_apart,
    line_basis,
    meet,
    outside,
    point_apart,
    pool_point_outside,
    fresh_point_on,
)
from .errors import (
    CenterOnLine,
    ChainMismatch,
    Degenerate,
    GeometryError,
    NoMovedPoint,
    NotApart,
    NotFixed,
    OffDomain,
    Perspective,
    SameLine,
)
from .harmonic import harmonic_conjugate
from .linalg import (
    IDENTITY,
    Matrix,
    adjugate,
    det3,
    mat_add,
    mat_mul,
    mat_vec,
    normalize,
    outer,
    scale,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class RangeProjectivity:
    """A projectivity from the range of ``domain`` onto the range of ``codomain``.

    The stored matrix is a canonical representative of the map, so ``==``
    agrees with :func:`equal`.
    """

    domain: Line
    codomain: Line
    matrix: Matrix

    def __post_init__(self):
        m = normalize(self.matrix)
        if det3(m) == 0:
            raise Degenerate("projectivity matrix is singular")
        # Only the action on the domain matters.  Rebuild the matrix from the
        # images of two basis points plus ``l -> m`` so that each map has one
        # stored representative and entries do not grow along chains.
        q, r = line_basis(self.domain)
        fq, fr = mat_vec(m, q.v), mat_vec(m, r.v)
        for v in (fq, fr):
            if dot(v, self.codomain.v) != 0:
                raise Degenerate("matrix does not carry the domain onto the codomain")
        images = canonical(fq + fr)
        target = tuple(zip(images[:3], images[3:], self.codomain.v))
        source = tuple(zip(q.v, r.v, self.domain.v))
        object.__setattr__(self, "matrix", normalize(mat_mul(target, adjugate(source))))

    def __call__(self, x: Point) -> Point:
        return apply(self, x)

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.matrix]


def apply(f: RangeProjectivity, x: Point) -> Point:
    if not incident(x, f.domain):
        raise OffDomain(f"{x} is not on the domain {f.domain}")
    return Point.of(mat_vec(f.matrix, x.v))


def identity(l: Line) -> RangeProjectivity:
    return RangeProjectivity(l, l, IDENTITY)


def compose(g: RangeProjectivity, f: RangeProjectivity) -> RangeProjectivity:
    """``g`` after ``f``."""
    if f.codomain != g.domain:
        raise ChainMismatch(f"{f.codomain} does not feed {g.domain}")
    return RangeProjectivity(f.domain, g.codomain, mat_mul(g.matrix, f.matrix))


def compose_chain(chain: Sequence[RangeProjectivity]) -> RangeProjectivity:
    """Compose ``chain[0]`` first, then ``chain[1]``, and so on."""
    out = chain[0]
    for step in chain[1:]:
        out = compose(step, out)
    return out


def inverse(f: RangeProjectivity) -> RangeProjectivity:
    return RangeProjectivity(f.codomain, f.domain, adjugate(f.matrix))


def samples(l: Line, n: int = 3) -> list[Point]:
    """Deterministic pairwise-apart points of ``l`` used for comparisons."""
    return fresh_points_on(l, n)


def equal(f: RangeProjectivity, g: RangeProjectivity, extra: int = 0) -> bool:
    """Same ranges and the same image at ``3 + extra`` sampled points."""
    if f.domain != g.domain or f.codomain != g.codomain:
        return False
    return all(apply(f, x) == apply(g, x) for x in samples(f.domain, 3 + extra))


def projection(t: Point, l: Line, m: Line) -> RangeProjectivity:
    """Projection of the range ``l`` onto ``m`` from the center ``t``."""
    if not outside(t, l) or not outside(t, m):
        raise CenterOnLine(f"center {t} must lie outside {l} and {m}")
    tv, lv, mv = t.v, l.v, m.v
    tm = dot(tv, mv)
    mat = mat_add(scale(tm, IDENTITY), scale(-1, outer(tv, mv)), outer(mv, lv))
    return RangeProjectivity(l, m, mat)


# --- existence: chains of projections --------------------------------------

def _triple_line(pts: Sequence[Point]) -> Line:
    a, b, c = pts
    for x, y in ((a, b), (a, c), (b, c)):
        if not point_apart(x, y):
            raise NotApart(f"triple points {x} and {y} coincide")
    l = join(a, b)
    if not incident(c, l):
        raise OffDomain(f"{c} is not on {l}")
    return l


def projection_fixing_common(q: Point, r: Point, q2: Point, r2: Point) -> RangeProjectivity:
    """The projection ``QR -> Q'R'`` sending ``Q, R`` to ``Q', R'``.

    The common point of the two lines must be apart from all four points;
    it is then fixed, and the center is ``QQ'.RR'``.
    """
    l, m = join(q, r), join(q2, r2)
    if not line_apart(l, m):
        raise SameLine("the two ranges coincide")
    a = meet(l, m)
    for x in (q, r, q2, r2):
        if not point_apart(x, a):
            raise NotApart(f"{x} is the common point of the ranges")
    center = meet(join(q, q2), join(r, r2))
    return projection(center, l, m)


@dataclass(frozen=True)
class TwoProjectionChain:
    """``l -> n -> m`` through the centers ``R = AA'.BB'`` and ``S = BB'.CC'``."""

    first: RangeProjectivity
    second: RangeProjectivity
    R: Point
    S: Point

    @property
    def projectivity(self) -> RangeProjectivity:
        return compose(self.second, self.first)


def two_projection_chain(src: Sequence[Point], dst: Sequence[Point]) -> TwoProjectionChain:
    """Send ``A, B, C`` to ``A', B', C'`` on distinct lines with two projections.

    The intermediate line is ``n = A'C``.  All six points must be apart
    from the common point ``O`` of the two lines.
    """
    a, b, c = src
    a2, b2, c2 = dst
    l, m = _triple_line(src), _triple_line(dst)
    if not line_apart(l, m):
        raise SameLine("the two ranges coincide")
    o = meet(l, m)
    for x in (*src, *dst):
        if not point_apart(x, o):
            raise NotApart(f"{x} is the common point of the ranges")
    bb = join(b, b2)
    r = meet(join(a, a2), bb)
    s = meet(bb, join(c, c2))
    n = join(a2, c)
    return TwoProjectionChain(projection(r, l, n), projection(s, n, m), r, s)


def three_point_chain(src: Sequence[Point], dst: Sequence[Point]) -> list[RangeProjectivity]:
    """Six projections carrying ``P, Q, R`` onto ``P', Q', R'`` for any two ranges.

    Two auxiliary lines ``l'`` (through a fresh point of ``l``) and ``m'``
    (through a fresh point of ``m``) are chosen so that each of the three
    hops ``l -> l' -> m' -> m`` is between distinct lines whose common point
    avoids the points being carried.
    """
    l, m = _triple_line(src), _triple_line(dst)
    o1 = fresh_point_on(l, src)
    l1 = join(o1, pool_point_outside(l))
    o2 = fresh_point_on(m, dst)
    m1 = join(o2, pool_point_outside(m, l1))
    o3 = meet(l1, m1)
    mid1 = fresh_points_on(l1, 3, [o1, o3])
    mid2 = fresh_points_on(m1, 3, [o2, o3])
    chain: list[RangeProjectivity] = []
    for a, b in ((src, mid1), (mid1, mid2), (mid2, dst)):
        hop = two_projection_chain(a, b)
        chain += [hop.first, hop.second]
    return chain


def _solve_direct(src: Sequence[Point], dst: Sequence[Point]) -> RangeProjectivity:
    # Basis (p, q, l) -> (lam p', mu q', m), with r = s p + t q and r' = u p' + v q'.
    l, m = _triple_line(src), _triple_line(dst)
    p, q, r = (x.v for x in src)
    p2, q2, r2 = (x.v for x in dst)

    def coeffs(x, y, z):
        for i, j in ((0, 1), (0, 2), (1, 2)):
            d = x[i] * y[j] - x[j] * y[i]
            if d:
                return (Fraction(z[i] * y[j] - z[j] * y[i], d),
                        Fraction(x[i] * z[j] - x[j] * z[i], d))
        raise Degenerate("basis vectors are dependent")

    s, t = coeffs(p, q, r)
    u, v = coeffs(p2, q2, r2)
    lam, mu = u / s, v / t
    src_basis = tuple(zip(p, q, l.v))
    dst_basis = [[lam * a, mu * b, c] for a, b, c in zip(p2, q2, m.v)]
    dst_int = normalize(dst_basis)
    return RangeProjectivity(l, m, mat_mul(dst_int, adjugate(src_basis)))


def from_three_points(src: Sequence[Point], dst: Sequence[Point]) -> RangeProjectivity:
    """The unique projectivity with ``src[i] -> dst[i]``."""
    _triple_line(src)
    _triple_line(dst)
    try:
        f = compose_chain(three_point_chain(src, dst))
    except GeometryError as exc:  # never observed; keeps the operation total
        log.warning("synthetic chain failed (%s); solving directly", exc)
        f = _solve_direct(src, dst)
    if [apply(f, x) for x in src] != list(dst):
        raise Degenerate("constructed projectivity misses the prescribed triple")
    return f


# --- nonperspective maps and the axis of homology ---------------------------

def common_point(f: RangeProjectivity) -> Point:
    if not line_apart(f.domain, f.codomain):
        raise SameLine("domain and codomain coincide")
    return meet(f.domain, f.codomain)


def is_nonperspective(f: RangeProjectivity) -> bool:
    """The common point of the two ranges is moved."""
    o = common_point(f)
    return point_apart(apply(f, o), o)


def axis_of_homology(f: RangeProjectivity) -> Line:
    """``UV`` with ``U = f^-1(O)`` and ``V = f(O)`` for the common point ``O``."""
    if not is_nonperspective(f):
        raise Perspective("a perspectivity has no axis of homology")
    o = common_point(f)
    return join(apply(inverse(f), o), apply(f, o))


def cross_join_point(f: RangeProjectivity, a: Point, b: Point) -> Point:
    """``A f(B) . B f(A)`` for distinct domain points apart from the common point."""
    o = common_point(f)
    for x in (a, b):
        if not point_apart(x, o):
            raise Degenerate(f"{x} is the common point of the ranges")
    if not point_apart(a, b):
        raise NotApart("cross-join needs two distinct points")
    return meet(join(a, apply(f, b)), join(b, apply(f, a)))


def image_via_axis(f: RangeProjectivity, a: Point, b: Point) -> Point:
    """Image of ``b`` rebuilt from the image of ``a`` and the axis: ``A(B f(A) . h) . m``."""
    h = axis_of_homology(f)
    o = common_point(f)
    fa = apply(f, a)
    if not point_apart(a, o) or not point_apart(fa, o):
        raise Degenerate("reference point or its image is the common point")
    if not point_apart(b, o) or not point_apart(b, a):
        raise Degenerate("point must be apart from the common point and the reference")
    e = meet(join(b, fa), h)
    return meet(join(a, e), f.codomain)


# --- involutions ------------------------------------------------------------

def harmonic_involution(a: Point, b: Point) -> RangeProjectivity:
    """Harmonic conjugacy on ``AB`` as three projections ``AB -> AR -> AP -> AB``.

    ``R`` is off ``AB`` and ``P`` is on ``BR`` apart from ``B`` and ``R``;
    the centers are ``P``, ``B`` and ``R`` in turn.
    """
    if not point_apart(a, b):
        raise NotApart("harmonic involution needs distinct points")
    ab = join(a, b)
    r = pool_point_outside(ab)
    br, ar = join(b, r), join(a, r)
    p = fresh_point_on(br, [b, r])
    ap = join(a, p)
    return compose_chain([projection(p, ab, ar), projection(b, ar, ap), projection(r, ap, ab)])


def is_identity(f: RangeProjectivity) -> bool:
    return f.domain == f.codomain and all(apply(f, x) == x for x in samples(f.domain))


def is_involution(f: RangeProjectivity) -> bool:
    """A map of a range to itself, not the identity, whose square is the identity."""
    if f.domain != f.codomain:
        return False
    return is_identity(compose(f, f)) and not is_identity(f)


def swap_chain(a: Point, b: Point, c: Point, d: Point) -> list[RangeProjectivity]:
    """Three projections of a range to itself with ``ABCD -> BADC``.

    ``m`` passes through ``D`` off the range, ``Q`` avoids both lines; the
    projections are from ``Q`` (onto ``m``), ``A`` (onto ``CQ``) and
    ``S = BQ.m`` (back onto the range).
    """
    pts = (a, b, c, d)
    for i in range(4):
        for j in range(i + 1, 4):
            if not point_apart(pts[i], pts[j]):
                raise NotApart(f"{pts[i]} and {pts[j]} coincide")
    l = _triple_line((a, b, c))
    if not incident(d, l):
        raise OffDomain(f"{d} is not on {l}")
    m = join(d, pool_point_outside(l))
    q = pool_point_outside(l, m)
    cq = join(c, q)
    s = meet(join(b, q), m)
    return [projection(q, l, m), projection(a, m, cq), projection(s, cq, l)]


def involution_from_swap(a: Point, b: Point, x: Point, y: Point) -> RangeProjectivity:
    """The projectivity of ``AB`` exchanging ``A`` and ``B`` and sending ``X`` to ``Y``."""
    if point_apart(x, y):
        return compose_chain(swap_chain(a, b, x, y))
    return from_three_points((a, b, x), (b, a, y))


def second_fixed_point(f: RangeProjectivity, m: Point) -> Point:
    """The other fixed point ``N = h(A, f(A); M)`` of an involution fixing ``M``."""
    if f.domain != f.codomain:
        raise SameLine("an involution maps a range to itself")
    if apply(f, m) != m:
        raise NotFixed(f"{m} is not fixed")
    if not is_identity(compose(f, f)):
        raise Degenerate("not an involution: the square is not the identity")
    for a in fresh_points_on(f.domain, 3, [m]):
        fa = apply(f, a)
        if fa != a:
            return harmonic_conjugate(a, fa, m)
    raise NoMovedPoint("no sampled point is moved")


# --- pencils, through duality ------------------------------------------------

@dataclass(frozen=True)
class PencilProjectivity:
    """A projectivity between pencils, stored as the dual range projectivity."""

    range: RangeProjectivity

    @property
    def source(self) -> Point:
        return dualize(self.range.domain)

    @property
    def target(self) -> Point:
        return dualize(self.range.codomain)

    def __call__(self, l: Line) -> Line:
        return self.apply(l)

    def apply(self, l: Line) -> Line:
        if not incident(self.source, l):
            raise OffDomain(f"{l} does not pass through {self.source}")
        return dualize(apply(self.range, dualize(l)))

    def inverse(self) -> "PencilProjectivity":
        return PencilProjectivity(inverse(self.range))


def pencil_from_three_lines(src: Sequence[Line], dst: Sequence[Line]) -> PencilProjectivity:
    return PencilProjectivity(
        from_three_points([dualize(x) for x in src], [dualize(x) for x in dst])
    )


def pencil_equal(f: PencilProjectivity, g: PencilProjectivity) -> bool:
    return equal(f.range, g.range)


__all__ = [
    "RangeProjectivity",
    "PencilProjectivity",
    "TwoProjectionChain",
    "apply",
    "axis_of_homology",
    "common_point",
    "compose",
    "compose_chain",
    "cross_join_point",
    "equal",
    "from_three_points",
    "harmonic_involution",
    "identity",
    "image_via_axis",
    "inverse",
    "involution_from_swap",
    "is_identity",
    "is_involution",
    "is_nonperspective",
    "pencil_equal",
    "pencil_from_three_lines",
    "projection",
    "projection_fixing_common",
    "samples",
    "second_fixed_point",
    "swap_chain",
    "three_point_chain",
    "two_projection_chain",
]
