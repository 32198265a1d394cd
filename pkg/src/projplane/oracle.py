"""Independent coordinate checks: quadratic forms, determinants, cross-ratios.

Nothing here touches the synthetic constructions; the only shared code is
the point/line representation and integer matrix helpers.  Tests compare
the constructive kernel against these closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import Line, Point, canonical, cross, dot, incident, is_zero, point_apart
from .errors import Degenerate, DegenerateFive, NotApart
from .linalg import Matrix, adjugate, det3, mat_mul, mat_vec, normalize

# monomial order: x^2, y^2, z^2, xy, yz, zx
_MONOMIALS = ((0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (2, 0))


@dataclass(frozen=True)
class QuadraticForm:
    """``X^T A X`` for a symmetric integer matrix ``A``, up to scale."""

    matrix: Matrix

    def __post_init__(self):
        m = normalize(self.matrix)
        if any(m[i][j] != m[j][i] for i in range(3) for j in range(3)):
            raise ValueError("quadratic form matrix must be symmetric")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_coefficients(cls, coeffs: Sequence) -> "QuadraticForm":
        """From ``(a, b, c, d, e, f)`` in ``ax^2+by^2+cz^2+dxy+eyz+fzx``."""
        a, b, c, d, e, f = (Fraction(x) for x in coeffs)
        return cls(normalize([[2 * a, d, f], [d, 2 * b, e], [f, e, 2 * c]]))

    @property
    def coefficients(self) -> tuple[int, ...]:
        m = self.matrix
        raw = (m[0][0], m[1][1], m[2][2], 2 * m[0][1], 2 * m[1][2], 2 * m[2][0])
        return canonical(raw)

    def value(self, p: Point) -> int:
        """``p^T A p``; only its vanishing is scale-independent."""
        return dot(p.v, mat_vec(self.matrix, p.v))

    def polynomial(self, p: Point) -> int:
        """The form written with :attr:`coefficients`, evaluated at ``p``."""
        x = p.v
        return sum(k * x[i] * x[j] for k, (i, j) in zip(self.coefficients, _MONOMIALS))

    def bilinear(self, p: Point, q: Point) -> int:
        return dot(p.v, mat_vec(self.matrix, q.v))

    @property
    def nonsingular(self) -> bool:
        return det3(self.matrix) != 0


def _null_space(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    rows = [r[:] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                k = rows[i][c]
                rows[i] = [x - k * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][free]
        basis.append(v)
    return basis


def quadratic_form_fit(points: Sequence[Point]) -> QuadraticForm:
    """The unique nonsingular conic through five points, by solving a 5x6 system."""
    if len(points) != 5:
        raise ValueError("a conic fit needs exactly five points")
    rows = [[Fraction(p.v[i] * p.v[j]) for i, j in _MONOMIALS] for p in points]
    null = _null_space(rows, 6)
    if len(null) != 1:
        raise DegenerateFive(f"the five points lie on a {len(null)}-dimensional family of conics")
    form = QuadraticForm.from_coefficients(null[0])
    if not form.nonsingular:
        raise DegenerateFive("the fitted conic is a line pair")
    return form


def qf_contains(form: QuadraticForm, p: Point) -> bool:
    return form.value(p) == 0


def collinear_det(p: Point, q: Point, r: Point) -> bool:
    return det3((p.v, q.v, r.v)) == 0


def concurrent_det(l: Line, m: Line, n: Line) -> bool:
    return det3((l.v, m.v, n.v)) == 0


def polar_line(form: QuadraticForm, p: Point) -> Line:
    """``A p``; the tangent when ``p`` lies on the conic."""
    return Line.of(mat_vec(form.matrix, p.v))


def pole_point(form: QuadraticForm, l: Line) -> Point:
    """``A^-1 l``, computed with the adjugate."""
    return Point.of(mat_vec(adjugate(form.matrix), l.v))


def qf_second_intersection(form: QuadraticForm, p: Point, l: Line) -> Point:
    """The other common point of the conic and a line through the member ``p``.

    Returns ``p`` itself when ``l`` is the tangent there.
    """
    if not incident(p, l) or form.value(p) != 0:
        raise Degenerate("p must be a conic point on l")
    q = next(
        Point.of(c) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        if not is_zero(c := cross(l.v, e)) and point_apart(Point.of(c), p)
    )
    fq, bpq = form.value(q), form.bilinear(p, q)
    if fq == 0:
        return q
    # F(P + tQ) = 2t B(P,Q) + t^2 F(Q)
    t = Fraction(-2 * bpq, fq)
    return Point.of(canonical([a + t * b for a, b in zip(p.v, q.v)]))


def _coeffs(x: Sequence[int], y: Sequence[int], z: Sequence[int]) -> tuple[Fraction, Fraction]:
    """``(s, t)`` with ``z = s x + t y`` for independent ``x, y``."""
    for i, j in ((0, 1), (0, 2), (1, 2)):
        d = x[i] * y[j] - x[j] * y[i]
        if d:
            s = Fraction(z[i] * y[j] - z[j] * y[i], d)
            t = Fraction(x[i] * z[j] - x[j] * z[i], d)
            if any(s * a + t * b != c for a, b, c in zip(x, y, z)):
                raise Degenerate("the point is not on the line of the basis")
            return s, t
    raise NotApart("basis points coincide")


def cross_ratio(a: Point, b: Point, c: Point, d: Point) -> Fraction:
    """``(A, B; C, D)`` for collinear points, ``C`` and ``D`` apart from ``A`` and ``B``.

    With ``C = c1 a + c2 b`` and ``D = d1 a + d2 b`` the value is
    ``(c2/c1) / (d2/d1)``; harmonic sets give ``-1``.
    """
    c1, c2 = _coeffs(a.v, b.v, c.v)
    d1, d2 = _coeffs(a.v, b.v, d.v)
    if 0 in (c1, c2, d1, d2):
        raise Degenerate("cross-ratio needs C and D apart from A and B")
    return (c2 / c1) / (d2 / d1)


def homography_solve(src: Sequence[Point], dst: Sequence[Point], l: Line, m: Line) -> Matrix:
    """A matrix ``[lam p', mu q', m][p, q, l]^-1`` realising ``src -> dst``."""
    p, q, r = (x.v for x in src)
    p2, q2, r2 = (x.v for x in dst)
    s, t = _coeffs(p, q, r)
    u, v = _coeffs(p2, q2, r2)
    lam, mu = u / s, v / t
    target = normalize([[lam * a, mu * b, c] for a, b, c in zip(p2, q2, m.v)])
    source = tuple(zip(p, q, l.v))
    return normalize(mat_mul(target, adjugate(source)))


def matrix_apply(mat: Matrix, p: Point) -> Point:
    return Point.of(mat_vec(mat, p.v))


__all__ = [
    "QuadraticForm",
    "collinear_det",
    "concurrent_det",
    "cross_ratio",
    "homography_solve",
    "matrix_apply",
    "polar_line",
    "pole_point",
    "qf_contains",
    "qf_second_intersection",
    "quadratic_form_fit",
]
