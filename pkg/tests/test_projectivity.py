import pytest
from hypothesis import given
from hypothesis import strategies as st

import gen
from projplane.core import Line, Point, dualize, incident, join, meet, outside, point_apart
from projplane.errors import (
    CenterOnLine,
    ChainMismatch,
    NoMovedPoint,
    NotFixed,
    OffDomain,
    Perspective,
    SameLine,
)
from projplane.harmonic import harmonic_conjugate
from projplane.linalg import det3
from projplane.oracle import homography_solve, matrix_apply
from projplane.projectivity import (
    PencilProjectivity,
    apply,
    axis_of_homology,
    common_point,
    compose,
    cross_join_point,
    equal,
    from_three_points,
    harmonic_involution,
    identity,
    image_via_axis,
    inverse,
    involution_from_swap,
    is_identity,
    is_involution,
    is_nonperspective,
    pencil_from_three_lines,
    projection,
    projection_fixing_common,
    samples,
    second_fixed_point,
    swap_chain,
    three_point_chain,
    two_projection_chain,
)

seeds = st.integers(0, 10**6)


def test_projection_example():
    f = projection(Point(1, 1, 1), Line(0, 0, 1), Line(1, 0, 0))
    assert apply(f, Point(1, 0, 0)) == Point(0, 1, 1)


def test_projection_preconditions():
    with pytest.raises(CenterOnLine):
        projection(Point(1, 0, 0), Line(0, 0, 1), Line(1, 0, 0))
    f = projection(Point(1, 1, 1), Line(0, 0, 1), Line(1, 0, 0))
    with pytest.raises(OffDomain):
        apply(f, Point(0, 0, 1))


@given(seeds)
def test_projection_matches_join_then_meet(seed):
    r = gen.rng(seed)
    l, m = gen.distinct_lines(r)
    t = gen.point(r)
    if not (outside(t, l) and outside(t, m)):
        return
    f = projection(t, l, m)
    assert det3(f.matrix) != 0
    for x in gen.distinct_on(r, l, 3, avoid=[]):
        assert apply(f, x) == meet(join(t, x), m)


def test_composition_checks_the_chain():
    f = projection(Point(1, 1, 1), Line(0, 0, 1), Line(1, 0, 0))
    with pytest.raises(ChainMismatch):
        compose(f, f)


@given(seeds)
def test_inverse_undoes_a_projectivity(seed):
    f = gen.projectivity(gen.rng(seed))
    assert is_identity(compose(inverse(f), f))
    assert is_identity(compose(f, inverse(f)))
    assert equal(compose(f, identity(f.domain)), f)


@given(seeds)
def test_three_point_chain_is_six_projections(seed):
    r = gen.rng(seed)
    l, m = gen.distinct_lines(r)
    if r.random() < 0.3:
        m = l
    src, dst = gen.distinct_on(r, l, 3), gen.distinct_on(r, m, 3)
    chain = three_point_chain(src, dst)
    assert len(chain) == 6
    for f, g in zip(chain, chain[1:]):
        assert f.codomain == g.domain
    f = from_three_points(src, dst)
    assert [apply(f, x) for x in src] == dst


@given(seeds)
def test_from_three_points_agrees_with_direct_solve(seed):
    r = gen.rng(seed)
    l, m = gen.distinct_lines(r)
    src, dst = gen.distinct_on(r, l, 3), gen.distinct_on(r, m, 3)
    f = from_three_points(src, dst)
    mat = homography_solve(src, dst, l, m)
    assert all(apply(f, x) == matrix_apply(mat, x) for x in samples(l, 8))


def test_from_three_points_preconditions():
    a, b, c = Point(1, 0, 0), Point(0, 1, 0), Point(1, 1, 0)
    with pytest.raises(OffDomain):
        from_three_points((a, b, Point(0, 0, 1)), (a, b, c))
    with pytest.raises(Exception):
        from_three_points((a, a, c), (a, b, c))


@given(seeds)
def test_two_projection_chain_carries_the_triple(seed):
    r = gen.rng(seed)
    l, m = gen.distinct_lines(r)
    o = meet(l, m)
    src, dst = gen.distinct_on(r, l, 3, [o]), gen.distinct_on(r, m, 3, [o])
    hop = two_projection_chain(src, dst)
    assert [apply(hop.projectivity, x) for x in src] == dst


@given(seeds)
def test_projection_fixing_the_common_point(seed):
    r = gen.rng(seed)
    l, m = gen.distinct_lines(r)
    o = meet(l, m)
    q, s = gen.distinct_on(r, l, 2, [o])
    q2, s2 = gen.distinct_on(r, m, 2, [o])
    f = projection_fixing_common(q, s, q2, s2)
    assert apply(f, q) == q2 and apply(f, s) == s2 and apply(f, o) == o


@given(seeds)
def test_three_fixed_points_force_the_identity(seed):
    f = gen.fixing_three(gen.rng(seed))
    assert all(apply(f, x) == x for x in samples(f.domain, 10))


def test_perspectivity_has_no_axis():
    f = projection(Point(1, 1, 1), Line(0, 0, 1), Line(1, 0, 0))
    assert not is_nonperspective(f)
    with pytest.raises(Perspective):
        axis_of_homology(f)
    with pytest.raises(SameLine):
        is_nonperspective(identity(Line(0, 0, 1)))


@given(seeds)
def test_cross_joins_lie_on_the_axis(seed):
    r = gen.rng(seed)
    f = gen.nonperspective(r)
    h = axis_of_homology(f)
    o = common_point(f)
    a, b = gen.distinct_on(r, f.domain, 2, [o, apply(inverse(f), o)])
    assert incident(cross_join_point(f, a, b), h)
    assert image_via_axis(f, a, b) == apply(f, b)


@given(seeds)
def test_harmonic_involution_is_harmonic_conjugacy(seed):
    r = gen.rng(seed)
    a, b, c = gen.collinear_triple(r)
    f = harmonic_involution(a, b)
    assert is_involution(f)
    assert apply(f, c) == harmonic_conjugate(a, b, c)
    assert apply(f, a) == a and apply(f, b) == b


@given(seeds)
def test_swap_projectivity(seed):
    r = gen.rng(seed)
    l = gen.line(r)
    a, b, x, y = gen.distinct_on(r, l, 4)
    assert len(swap_chain(a, b, x, y)) == 3
    f = involution_from_swap(a, b, x, y)
    assert [apply(f, p) for p in (a, b, x, y)] == [b, a, y, x]
    assert is_involution(f)


def test_swap_with_a_fixed_point_falls_back():
    a, b, x = Point(1, 0, 0), Point(0, 1, 0), Point(1, 1, 0)
    f = involution_from_swap(a, b, x, x)
    assert apply(f, x) == x and is_involution(f)
    assert second_fixed_point(f, x) == Point(1, -1, 0)


@given(seeds)
def test_second_fixed_point_of_a_harmonic_involution(seed):
    r = gen.rng(seed)
    a, b, _ = gen.collinear_triple(r)
    f = harmonic_involution(a, b)
    assert second_fixed_point(f, a) == b
    assert second_fixed_point(f, b) == a


def test_second_fixed_point_preconditions():
    a, b, c = Point(1, 0, 0), Point(0, 1, 0), Point(1, 1, 0)
    f = harmonic_involution(a, b)
    with pytest.raises(NotFixed):
        second_fixed_point(f, c)
    with pytest.raises(NoMovedPoint):
        second_fixed_point(identity(join(a, b)), a)


def test_identity_is_not_an_involution():
    assert not is_involution(identity(Line(0, 0, 1)))


@given(seeds)
def test_pencil_maps_are_dual_range_maps(seed):
    r = gen.rng(seed)
    u, v = gen.point(r), gen.point(r)
    if not point_apart(u, v):
        return
    src = [dualize(p) for p in gen.distinct_on(r, dualize(u), 3)]
    dst = [dualize(p) for p in gen.distinct_on(r, dualize(v), 3)]
    f = pencil_from_three_lines(src, dst)
    assert isinstance(f, PencilProjectivity)
    assert f.source == u and f.target == v
    assert [f(l) for l in src] == dst
    assert [f.inverse()(l) for l in dst] == src
    assert all(incident(u, l) for l in src)
