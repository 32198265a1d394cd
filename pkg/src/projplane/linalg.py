"""Integer 3x3 matrices up to nonzero scale.

Matrices are row-major tuples of tuples.  Inversion uses the adjugate, so
every product and inverse stays integral; :func:`normalize` divides out the
content and fixes the sign, giving one representative per scale class.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence, Tuple

from .core import Vec, canonical

Matrix = Tuple[Vec, Vec, Vec]

IDENTITY: Matrix = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def normalize(m: Sequence[Sequence]) -> Matrix:
    flat = canonical([x for row in m for x in row])
    return (flat[0:3], flat[3:6], flat[6:9])


def mat_vec(m: Matrix, v: Sequence[int]) -> Vec:
    return tuple(r[0] * v[0] + r[1] * v[1] + r[2] * v[2] for r in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def det3(m: Sequence[Sequence]) -> int:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def adjugate(m: Matrix) -> Matrix:
    (a, b, c), (d, e, f), (g, h, i) = m
    return (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )


def outer(u: Sequence[int], v: Sequence[int]) -> Matrix:
    return tuple(tuple(a * b for b in v) for a in u)


def mat_add(*ms: Matrix) -> Matrix:
    return tuple(tuple(sum(m[i][j] for m in ms) for j in range(3)) for i in range(3))


def scale(k: int, m: Matrix) -> Matrix:
    return tuple(tuple(k * x for x in row) for row in m)


def content(m: Matrix) -> int:
    return gcd(*(x for row in m for x in row))
