import pytest
from hypothesis import given
from hypothesis import strategies as st

import gen
from projplane.conic import (
    center_of_homology,
    change_base,
    conic_through_five,
    contact_point,
    contains,
    dual_axis,
    dual_conic,
    dual_contains,
    membership_equal,
    pascal_line,
    pascal_points,
    polar,
    polar_via_secant,
    pole,
    second_intersection,
    secant_members,
    secants_through,
    sixth_point,
    tangent_at,
    trace,
)
from projplane.core import Line, Point, incident, join, meet, noncollinear, outside, point_apart
from projplane.errors import DegenerateFive, NotApart, NotOnConic, TangentLine
from projplane.oracle import collinear_det, polar_line, qf_contains, qf_second_intersection, quadratic_form_fit

U, V, A, B, C = Point(1, 0, 0), Point(0, 1, 0), Point(0, 0, 1), Point(1, 1, 1), Point(1, 2, 4)
K = conic_through_five(U, V, A, B, C)
seeds = st.integers(0, 10**6)


def test_reference_conic_membership():
    assert all(contains(K, p) for p in (U, V, A, B, C))
    assert contains(K, Point(21, 9, 7))
    assert not contains(K, Point(1, 1, 0))
    assert Point(21, 9, 7) in K


def test_reference_conic_matches_its_fitted_form():
    form = quadratic_form_fit([U, V, A, B, C])
    assert form.coefficients == (0, 0, 0, 2, 1, -3)
    assert all(qf_contains(form, x) for x in trace(K, 30))


def test_reference_tangent_and_secant():
    assert tangent_at(K, U) == Line(0, 2, -3)
    assert second_intersection(K, U, Line(0, 1, 0)) == A
    assert second_intersection(K, U, Line(0, 1, 0)) == qf_second_intersection(
        quadratic_form_fit([U, V, A, B, C]), U, Line(0, 1, 0)
    )


def test_reference_polar():
    assert polar(A, K) == Line(3, -1, 0)
    assert pole(Line(3, -1, 0), K) == A


def test_collinear_triad_is_reported():
    with pytest.raises(DegenerateFive, match="A, B, C"):
        conic_through_five(U, V, Point(0, 0, 1), Point(1, 1, 1), Point(2, 2, 1))
    with pytest.raises(DegenerateFive, match="coincide"):
        conic_through_five(U, V, A, A, C)


def test_permuting_the_three_points_keeps_the_point_set():
    k2 = conic_through_five(U, V, C, A, B)
    assert membership_equal(K, k2)


def test_trace_output():
    pts = trace(K, 12)
    assert len(set(pts)) == 12
    assert all(point_apart(p, U) and point_apart(p, V) for p in pts)
    assert all(contains(K, p) for p in pts)
    assert noncollinear(*pts[:3])
    assert len(trace(K, 1)) == 1
    with pytest.raises(ValueError):
        trace(K, 0)


def test_change_base():
    assert change_base(K, U, V) is K
    k1 = change_base(K, A, B)
    assert all(contains(k1, p) for p in (U, V, A, B, C))
    back = change_base(k1, U, V)
    assert all(contains(back, p) for p in trace(K, 20))
    with pytest.raises(NotOnConic):
        change_base(K, U, Point(1, 1, 0))


def test_tangent_does_not_depend_on_the_auxiliary_member():
    for p in (A, B, C):
        others = [q for q in trace(K, 6) if point_apart(q, p)]
        assert tangent_at(K, p, via=others[0]) == tangent_at(K, p, via=others[-1]) == tangent_at(K, p)


def test_tangent_errors():
    with pytest.raises(NotOnConic):
        tangent_at(K, Point(1, 1, 0))
    with pytest.raises(TangentLine):
        second_intersection(K, B, tangent_at(K, B))


@given(seeds)
def test_tangent_meets_the_conic_once(seed):
    r = gen.rng(seed)
    k = gen.conic(r)
    pts = trace(k, 8)
    p = pts[r.randrange(8)]
    t = tangent_at(k, p)
    assert incident(p, t)
    assert all(outside(q, t) for q in (*pts, k.U, k.V) if q != p)


@given(seeds)
def test_second_intersection_is_a_different_member(seed):
    r = gen.rng(seed)
    k = gen.conic(r)
    p = r.choice([k.U, k.V, *trace(k, 4)])
    l = join(p, gen.point(r))  # may be the tangent only by coincidence
    if l == tangent_at(k, p):
        return
    x = second_intersection(k, p, l)
    assert contains(k, x) and incident(x, l) and point_apart(x, p)


def test_pascal_hexagon():
    hexagon = [U, A, V, B, Point(21, 9, 7), C]
    line = pascal_line(K, hexagon)
    pts = pascal_points(K, hexagon)
    assert all(incident(p, line) for p in pts)
    shifted = pascal_points(K, hexagon[3:] + hexagon[:3])
    assert set(shifted) == set(pts)


def test_pascal_preconditions():
    with pytest.raises(NotApart):
        pascal_line(K, [U, A, V, B, U, C])
    with pytest.raises(NotOnConic):
        pascal_line(K, [U, A, V, B, Point(1, 1, 0), C])


def test_sixth_point_and_tangent_limit():
    pts = trace(K, 5)
    e, x = pts[3], pts[4]
    assert sixth_point(A, B, C, pts[1], e, join(e, x)) == x
    assert sixth_point(A, B, C, pts[1], e, tangent_at(K, e)) == e


@given(seeds)
def test_secants_through_any_point(seed):
    r = gen.rng(seed)
    k = gen.conic(r)
    p = gen.point(r) if r.random() < 0.7 else r.choice(trace(k, 3))
    s1, s2 = secants_through(k, p)
    assert s1 != s2 and incident(p, s1) and incident(p, s2)
    for x, y in secant_members(k, p):
        assert contains(k, x) and contains(k, y) and point_apart(x, y)
        assert incident(p, join(x, y))


def test_secants_through_a_meet_of_tangents():
    p = meet(tangent_at(K, A), tangent_at(K, B))
    s1, s2 = secants_through(K, p)
    assert s1 != s2


def test_dual_conic_contains_its_defining_tangents():
    lam = dual_conic(K)
    t = [tangent_at(K, p) for p in (U, V, trace(K, 1)[0])]
    assert all(dual_contains(lam, l) for l in t)
    assert all(contact_point(lam, tangent_at(K, p)) == p for p in trace(K, 5))
    assert not dual_contains(lam, Line(1, 1, 1))


@given(seeds)
def test_center_of_homology_is_the_tangent_meet(seed):
    k = gen.conic(gen.rng(seed))
    assert center_of_homology(k) == dual_axis(k)


@given(seeds)
def test_polar_agrees_with_the_matrix_product(seed):
    r = gen.rng(seed)
    k = gen.conic(r)
    form = quadratic_form_fit(k.points)
    p = gen.point(r)
    assert polar(p, k) == polar_line(form, p)


@given(seeds)
def test_polar_is_independent_of_the_secant(seed):
    r = gen.rng(seed)
    k = gen.conic(r)
    p = gen.point(r)
    (a, b), (c, d) = secant_members(k, p)
    assert polar_via_secant(p, k, a, b) == polar_via_secant(p, k, c, d)


def test_polar_of_a_member_is_its_tangent():
    for p in (U, V, A, B, C, *trace(K, 5)):
        assert polar(p, K) == tangent_at(K, p)


def test_to_dict_lists_the_defining_points():
    assert K.to_dict() == {"points": [list(p.v) for p in (U, V, A, B, C)]}


def test_collinear_det_agrees_for_pascal_meets():
    pts = pascal_points(K, [U, A, V, B, Point(21, 9, 7), C])
    assert collinear_det(*pts)
