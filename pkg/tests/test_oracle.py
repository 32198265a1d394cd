from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import gen
from projplane.core import Line, Point, join
from projplane.errors import Degenerate, DegenerateFive
from projplane.harmonic import harmonic_conjugate
from projplane.linalg import det3, mat_mul, mat_vec, normalize, transpose
from projplane.oracle import (
    QuadraticForm,
    collinear_det,
    concurrent_det,
    cross_ratio,
    polar_line,
    pole_point,
    qf_contains,
    qf_second_intersection,
    quadratic_form_fit,
)

FIVE = [Point(1, 0, 0), Point(0, 1, 0), Point(0, 0, 1), Point(1, 1, 1), Point(1, 2, 4)]


def test_fit_of_the_reference_five_points():
    form = quadratic_form_fit(FIVE)
    # 2xy + yz - 3zx
    assert form.coefficients == (0, 0, 0, 2, 1, -3)
    assert all(qf_contains(form, p) for p in FIVE)
    assert form.polynomial(Point(1, 1, 0)) == 2
    assert qf_contains(form, Point(21, 9, 7))
    assert not qf_contains(form, Point(1, 1, 0))


def test_fit_rejects_degenerate_input():
    with pytest.raises(DegenerateFive):
        quadratic_form_fit(FIVE[:4] + [FIVE[0]])
    with pytest.raises(DegenerateFive):
        # three collinear points force a line pair
        quadratic_form_fit([Point(1, 0, 0), Point(0, 1, 0), Point(1, 1, 0), Point(0, 0, 1), Point(1, 2, 3)])


def test_form_must_be_symmetric():
    with pytest.raises(ValueError):
        QuadraticForm(((1, 2, 0), (0, 1, 0), (0, 0, 1)))


def test_polar_and_pole_of_the_reference_conic():
    form = quadratic_form_fit(FIVE)
    assert polar_line(form, Point(0, 0, 1)) == Line(3, -1, 0)
    assert polar_line(form, Point(1, 0, 0)) == Line(0, 2, -3)
    assert pole_point(form, Line(3, -1, 0)) == Point(0, 0, 1)
    assert qf_second_intersection(form, Point(1, 0, 0), Line(0, 1, 0)) == Point(0, 0, 1)


@given(st.integers(0, 10**6))
def test_fit_transports_under_a_collineation(seed):
    r = gen.rng(seed)
    while True:
        m = tuple(tuple(gen.small(r, 4) for _ in range(3)) for _ in range(3))
        if det3(m) != 0:
            break
    form = quadratic_form_fit(FIVE)
    moved = [Point.of(mat_vec(m, p.v)) for p in FIVE]
    # X = M x lies on the image conic iff x^T A x = 0, so the image form is M^-T A M^-1
    fitted = quadratic_form_fit(moved)
    assert normalize(mat_mul(mat_mul(transpose(m), fitted.matrix), m)) == form.matrix


def test_desargues_points_are_collinear_at_two_three_five():
    a, b, c = (Fraction(x) for x in (2, 3, 5))
    A = Point(a - 1, 1 - b, 0)
    B = Point(0, b - 1, 1 - c)
    C = Point(a - 1, 0, 1 - c)
    assert collinear_det(A, B, C)


def test_collinearity_determinant():
    e1, e2, e3 = Point(1, 0, 0), Point(0, 1, 0), Point(0, 0, 1)
    assert not collinear_det(e1, e2, e3)
    assert collinear_det(e1, e2, Point(3, -7, 0))
    assert concurrent_det(Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, 0))


def test_cross_ratio_values():
    a, b = Point(1, 0, 0), Point(0, 1, 0)
    c = Point(1, 1, 0)
    assert cross_ratio(a, b, c, c) == 1
    assert cross_ratio(a, b, c, Point(1, -1, 0)) == -1
    with pytest.raises(Degenerate):
        cross_ratio(a, b, a, c)
    with pytest.raises(Degenerate):
        cross_ratio(a, b, c, Point(0, 0, 1))


@given(st.integers(0, 10**6))
def test_cross_ratio_of_harmonic_sets(seed):
    a, b, c = gen.collinear_triple(gen.rng(seed))
    assert cross_ratio(a, b, c, harmonic_conjugate(a, b, c)) == -1
