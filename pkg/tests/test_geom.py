from fractions import Fraction as F

import pytest
from hypothesis import assume, given, strategies as st

from planecenters import numeric as num
from planecenters.errors import AmbiguousArcError, DegenerateRayError, NotCyclicError
from planecenters.geom import (
    Angle, Circle, Point, Similarity, angle_of, arc_midpoint, ccw_arc_length, centroid,
    circle_adjacency, circumcircle, compare_directions, dist2,
)

from conftest import P, points, pts


def test_apply_similarity_examples():
    assert Similarity.identity()(P(3, 4)) == P(3, 4)
    assert Similarity.rotation_turns(F(1, 2))(P(1, 0)) == P(-1, 0)
    t = Similarity.make(scale=2, translation=(1, 0))
    assert t(P(1, 1)) == P(3, 2)


@given(points, st.integers(1, 9), st.integers(0, 8), st.booleans(), points)
def test_similarity_composition_and_inverse(p, m, n, reflect, shift):
    assume(n < m)
    h = m * m + n * n
    t = Similarity.make(F(3, 2), F(m * m - n * n, h), F(2 * m * n, h), reflect, (shift.x, shift.y))
    u = Similarity.make(F(1, 3), 0, 1, False, (1, 2))
    assert t.compose(u)(p) == t(u(p))
    assert t.inverse()(t(p)) == p


def test_angle_of_examples():
    assert angle_of(P(0, 0), P(0, 5)).exact == F(1, 4)
    assert angle_of(P(1, 1), P(2, 1)).exact == 0
    assert angle_of(P(0, 0), P(-1, -1)).exact == F(5, 8)
    with pytest.raises(DegenerateRayError):
        angle_of(P(1, 1), P(1, 1))


def test_angle_of_cyclotomic_points_is_exact():
    q = F(5, 12)
    v = Point(num.cos_turn(q), num.sin_turn(q))
    assert angle_of(P(0, 0), v).exact == q


@given(points, points)
def test_direction_order_matches_angles(u, v):
    assume(u.norm2() != 0 and v.norm2() != 0)
    a, b = angle_of(P(0, 0), u).value, angle_of(P(0, 0), v).value
    c = compare_directions(u, v)
    if u.cross(v) == 0 and u.dot(v) > 0:
        assert c == 0
    else:
        assert c == (1 if a > b else -1)


def test_ccw_arc_length_examples():
    assert ccw_arc_length(Angle(0), Angle(F(1, 4))).exact == F(1, 4)
    assert ccw_arc_length(Angle(F(3, 4)), Angle(F(1, 4))).exact == F(1, 2)
    assert ccw_arc_length(Angle(F(1, 3)), Angle(F(1, 3))).exact == 0


@given(st.fractions(0, 1), st.fractions(0, 1))
def test_arcs_sum_to_a_turn(a, b):
    x, y = ccw_arc_length(Angle(a), Angle(b)).turns, ccw_arc_length(Angle(b), Angle(a)).turns
    assert x + y == (0 if Angle(a) == Angle(b) else 1)


def test_arc_midpoint_examples():
    assert arc_midpoint(Angle(0), Angle(F(1, 4))).exact == F(1, 8)
    assert arc_midpoint(Angle(F(5, 8)), Angle(F(1, 24))).exact == F(5, 6)
    m = arc_midpoint(Angle(0), Angle(num.ctx.mpf("0.1")), mode="ccw_from_a")
    assert abs(m.value - num.ctx.mpf("0.05")) < 1e-30
    with pytest.raises(AmbiguousArcError):
        arc_midpoint(Angle(0), Angle(F(1, 2)))


@given(st.fractions(0, 1), st.fractions(0, 1))
def test_smallest_midpoint_is_equidistant(a, b):
    assume(ccw_arc_length(Angle(a), Angle(b)).turns != F(1, 2))
    m = arc_midpoint(Angle(a), Angle(b))
    da = min(ccw_arc_length(m, Angle(a)).turns, ccw_arc_length(Angle(a), m).turns)
    db = min(ccw_arc_length(m, Angle(b)).turns, ccw_arc_length(Angle(b), m).turns)
    assert da == db


def test_centroid_examples():
    assert centroid(pts((0, 0), (1, 0), (0, 1))) == P(F(1, 3), F(1, 3))
    assert centroid([P(2, 3)] * 4) == P(2, 3)
    assert centroid(pts((1, 0), (-1, 0), (0, 2))) == P(0, F(2, 3))


@given(st.lists(points, min_size=1, max_size=6), st.integers(1, 5), points)
def test_centroid_commutes_with_similarities(ps, k, shift):
    t = Similarity.make(F(k, 2), F(3, 5), F(-4, 5), k % 2 == 0, (shift.x, shift.y))
    assert centroid([t(p) for p in ps]) == t(centroid(ps))


def test_circumcircle_examples():
    c = circumcircle(pts((1, 0), (0, 1), (-1, 0)))
    assert c.center == P(0, 0) and c.radius2 == 1
    c = circumcircle(pts((0, 0), (2, 0)))
    assert c.center == P(1, 0) and c.radius2 == 1
    c = circumcircle(pts((0, 0), (4, 0), (0, 4), (4, 4)))
    assert c.center == P(2, 2) and c.radius2 == 8
    with pytest.raises(NotCyclicError):
        circumcircle(pts((0, 0), (1, 0), (2, 0)))
    with pytest.raises(NotCyclicError):
        circumcircle(pts((0, 0), (1, 0), (0, 1), (3, 3)))


def test_circumcircle_is_equivariant():
    ps = pts((1, 0), (0, 1), (-1, 0))
    t = Similarity.make(3, F(3, 5), F(4, 5), True, (1, 2))
    c, d = circumcircle(ps), circumcircle([t(p) for p in ps])
    assert d.center == t(c.center)
    assert d.radius2 == c.radius2 * 9


def test_circle_adjacency_examples():
    pairs = circle_adjacency([Angle(F(1, 2)), Angle(0), Angle(F(1, 4))])
    assert [(a.exact, b.exact) for a, b in pairs] == [(0, F(1, 4)), (F(1, 4), F(1, 2)), (F(1, 2), 0)]
    assert len(circle_adjacency([Angle(0), Angle(F(1, 2))])) == 1
    sq = circle_adjacency([Angle(F(k, 4)) for k in range(4)])
    assert all(ccw_arc_length(a, b).exact == F(1, 4) for a, b in sq)


def test_point_on_circle_is_exact_for_rational_turns():
    c = Circle(P(1, 1), F(4))
    p = c.point_at(Angle(F(1, 4)))
    assert p == P(1, 3)
    assert dist2(c.point_at(Angle(F(1, 3))), P(1, 1)) == 4
