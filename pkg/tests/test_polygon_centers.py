import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from planecenters import corpus as cp
from planecenters import numeric as num
from planecenters.errors import DomainError
from planecenters.geom import Point, centroid, dist2
from planecenters.multiset_centers import combine, x_center_multiset
from planecenters.oracle import brute_force_symmetries
from planecenters.polygon_centers import (
    _rings, center_through_polygon, chain_orientation, format_chain_code, half_plane_sign,
    is_center_value_polygon, rotation_code, x_center_polygon, y_center_polygon,
)
from planecenters.suites import affinely_independent
from planecenters.symmetry import Polygon, fixed_set

from conftest import P, pts

FIVE = [Point(num.cos_turn(F(k, 5)), num.sin_turn(F(k, 5))) for k in range(5)]


def real(v):
    return float(num.to_real(v))


def test_pentagon_chain_code():
    poly = Polygon([FIVE[0], FIVE[2], FIVE[1], FIVE[4], FIVE[3]])
    pair = chain_orientation(poly, 0)
    assert not pair.ambiguous
    assert [FIVE.index(v) + 1 for v in pair.positive] == [1, 3, 2, 5, 4, 1]
    c = Point(F(0), F(0))
    code = rotation_code(pair.positive, c, _rings(list(poly.vertices), c), 1)
    want = r"((1,2\frac{2\pi}{5}),(1,4\frac{2\pi}{5}),(1,3\frac{2\pi}{5}),(1,4\frac{2\pi}{5}),(1,2\frac{2\pi}{5}))"
    assert format_chain_code(code) == want


def test_square_and_bowtie():
    square = Polygon(pts((0, 0), (1, 0), (1, 1), (0, 1)))
    half = P(F(1, 2), F(1, 2))
    assert x_center_polygon(square) == half
    assert y_center_polygon(square) == half
    # the crossed quadrilateral keeps a half turn and two mirrors
    bowtie = Polygon(pts((0, 0), (1, 1), (1, 0), (0, 1)))
    g = brute_force_symmetries(bowtie)
    assert g.rotation_order == 2 and len(g.reflections) == 2
    assert x_center_polygon(bowtie) == x_center_multiset(list(bowtie.vertices)) == half


def test_collinear_polygon():
    poly = Polygon(pts((0, 0), (1, 0), (3, 0)))
    assert x_center_polygon(poly) == P(3, 0)
    assert y_center_polygon(poly) == centroid(poly.vertices)


def test_collinear_relabeling_invariance():
    vs = pts((0, 0), (1, 0), (3, 0), (7, 0), (2, 0))
    x = x_center_polygon(Polygon(vs))
    for k in range(len(vs)):
        assert x_center_polygon(Polygon(vs[k:] + vs[:k])) == x
        assert x_center_polygon(Polygon(list(reversed(vs[k:] + vs[:k])))) == x


def test_centroid_as_first_vertex():
    # regression: a vertex at the centroid must not be mistaken for collinearity
    poly = Polygon(pts((0, 0), (1, 0), (0, 1), (-1, 0), (0, -1)))
    x = x_center_polygon(poly)
    assert fixed_set(brute_force_symmetries(poly)).contains(x)


def test_asymmetric_hexagon():
    poly = Polygon(pts((2, 0), (1, 1), (-1, 1), (-1, -1), (-2, 0), (1, -1)))
    assert cp.class_of(poly) == "C"
    assert cp.class_of(list(poly.vertices)) == "A"
    c = centroid(poly.vertices)
    x = x_center_polygon(poly)
    y = y_center_polygon(poly, x)
    assert (c, x, y) == (P(0, 0), P(2, 0), P(-1, -1))
    assert affinely_independent(c, x, y)


def test_half_plane_sign():
    c, x = P(0, 0), P(1, 0)
    chain = pts((0, 1), (1, 1), (2, 0), (3, -1), (0, 1))
    # predecessor and successor off the line decide a position on the line
    assert [half_plane_sign(chain, j, c, x) for j in range(1, 5)] == [1, -1, -1, -1]
    same_side = pts((0, 1), (2, 0), (3, 1), (0, 1))
    assert half_plane_sign(same_side, 1, c, x) == 1


def test_center_through_polygon():
    poly = Polygon(pts((2, 0), (1, 1), (-1, 1), (-1, -1), (-2, 0), (1, -1)))
    assert center_through_polygon(poly, P(0, 0)) == (1, 0, 0)
    assert center_through_polygon(poly, P(-1, -1)) == (0, 0, 1)
    square = Polygon(pts((0, 0), (1, 0), (1, 1), (0, 1)))
    assert not is_center_value_polygon(square, P(0, 0))
    with pytest.raises(DomainError):
        center_through_polygon(square, P(0, 0))


def _random_polygon(seed):
    rng = random.Random(seed)
    makers = (cp.rotational_polygon, cp.mirror_polygon, cp.random_polygon,
              cp.shuffled_symmetric_polygon, lambda r: cp.collinear_polygon(r, r.random() < 0.5))
    while True:
        poly = makers[seed % len(makers)](rng)
        if len(poly) <= 8:
            return poly


@settings(max_examples=40)
@given(st.integers(0, 10**6))
def test_polygon_centers_in_fixed_set(seed):
    poly = _random_polygon(seed)
    fs = fixed_set(brute_force_symmetries(poly))
    x = x_center_polygon(poly)
    assert fs.contains(x)
    assert fs.contains(y_center_polygon(poly, x))


@settings(max_examples=40)
@given(st.integers(0, 10**6))
def test_polygon_iff(seed):
    poly = _random_polygon(seed)
    cls = cp.class_of(poly)
    c = centroid(poly.vertices)
    x = x_center_polygon(poly)
    y = y_center_polygon(poly, x)
    assert (x.exact and x == c) == (cls == "A")
    assert affinely_independent(c, x, y) == (cls == "C")


@settings(max_examples=30)
@given(st.integers(0, 10**6))
def test_polygon_vertex_order_relabeling(seed):
    poly = _random_polygon(seed)
    vs = list(poly.vertices)
    k = seed % len(vs)
    shifted = Polygon(list(reversed(vs[k:] + vs[:k])))
    assert real(dist2(x_center_polygon(shifted), x_center_polygon(poly))) < 1e-18


@settings(max_examples=25)
@given(st.integers(0, 10**6))
def test_polygon_round_trip(seed):
    rng = random.Random(seed)
    poly = _random_polygon(seed)
    c = centroid(poly.vertices)
    x = x_center_polygon(poly)
    y = y_center_polygon(poly, x)
    for target in cp.fixed_set_samples(rng, brute_force_symmetries(poly), 3):
        got = combine(center_through_polygon(poly, target), c, x, y)
        assert real(dist2(got, target)) < 1e-18
