import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from planecenters import corpus as cp
from planecenters import numeric as num
from planecenters.errors import DomainError, EmptyInputError, NotCyclicError
from planecenters.geom import Point, centroid, dist2
from planecenters.multiset_centers import (
    RadialProfile, center_through, circle_indices, circumcenter, combine, half_plane_labels,
    induced_polygon_center, is_center_value, x_center_multiset, y_center_multiset,
)
from planecenters.oracle import brute_force_symmetries
from planecenters.suites import affinely_independent
from planecenters.symmetry import Polygon, fixed_set

from conftest import P, pts

ISOSCELES = pts((1, 0), (-1, 0), (0, 2))
SCALENE = pts((0, 0), (4, 0), (1, 2))


def real(v):
    return float(num.to_real(v))


def test_equilateral_centers_coincide():
    s3 = num.sqrt(F(3))
    tri = [Point(F(1), F(0)), Point(F(-1, 2), num.div(s3, 2)), Point(F(-1, 2), num.div(-s3, 2))]
    c = centroid(tri)
    assert x_center_multiset(tri) == c
    assert y_center_multiset(tri) == c


def test_isosceles_centers():
    assert centroid(ISOSCELES) == P(0, F(2, 3))
    assert x_center_multiset(ISOSCELES) == P(0, 2)
    assert y_center_multiset(ISOSCELES) == P(0, F(2, 3))


def test_scalene_centers():
    c = centroid(SCALENE)
    x = x_center_multiset(SCALENE)
    assert c == P(F(5, 3), F(2, 3))
    assert x == P(4, 0)
    y = y_center_multiset(SCALENE, x)
    assert affinely_independent(c, x, y)
    # distance from the centroid is the total distance of the points to it
    lam = sum(real(dist2(p, c)) ** 0.5 for p in SCALENE)
    assert abs(real(dist2(y, c)) ** 0.5 - lam) < 1e-12
    # and the offset is perpendicular to the centroid-X line
    assert abs(real((y - c).dot(x - c))) < 1e-12


def test_single_and_repeated_points():
    assert x_center_multiset([P(3, 4)]) == P(3, 4)
    assert x_center_multiset([P(1, 1), P(1, 1)]) == P(1, 1)
    with pytest.raises(EmptyInputError):
        x_center_multiset([])


def test_multiplicities_matter():
    doubled = [P(1, 0), P(1, 0), P(-1, 0)]
    assert x_center_multiset(doubled) != centroid(doubled)


def test_circumcenter():
    # (2, y) is equidistant from (0,0) and (1,2) when 4 + y^2 = 1 + (2 - y)^2
    assert circumcenter(SCALENE) == P(2, F(1, 4))
    with pytest.raises(NotCyclicError):
        circumcenter(pts((0, 0), (1, 0), (2, 0)))


def test_radial_profile_ranks():
    prof = RadialProfile.of(pts((2, 0), (1, 0), (0, 3), (0, 0)))
    assert prof.center == P(F(3, 4), F(3, 4))
    assert circle_indices([F(4), F(1), F(4), F(9)]) == [1, 2, 1, 0]


def test_half_plane_labels_symmetric():
    lab = half_plane_labels(ISOSCELES, centroid(ISOSCELES), P(0, 2))
    assert lab.left == lab.right
    assert lab.smaller_side() is None


def test_is_center_value():
    assert is_center_value(ISOSCELES, P(0, 17))
    assert not is_center_value(ISOSCELES, P(1, 1))
    sq = pts((1, 0), (0, 1), (-1, 0), (0, -1))
    assert is_center_value(sq, P(0, 0)) and not is_center_value(sq, P(0, 1))


def test_center_through_examples():
    c, x = centroid(SCALENE), x_center_multiset(SCALENE)
    y = y_center_multiset(SCALENE, x)
    assert center_through(SCALENE, c) == (1, 0, 0)
    assert center_through(SCALENE, x) == (0, 1, 0)
    w = center_through(SCALENE, y)
    assert [round(real(v), 12) for v in w] == [0, 0, 1]
    target = Point(2 * x.x - c.x, 2 * x.y - c.y)
    w = center_through(SCALENE, target)
    assert [round(real(v), 12) for v in w] == [-1, 2, 0]


def test_center_through_rejects_unfixed_points():
    with pytest.raises(DomainError):
        center_through(ISOSCELES, P(1, 1))
    assert center_through(ISOSCELES, P(0, 5)) == (F(-9, 4), F(13, 4), 0)


def test_induced_polygon_center():
    induced = induced_polygon_center(x_center_multiset)
    square = Polygon(pts((0, 0), (1, 0), (1, 1), (0, 1)))
    bowtie = Polygon(pts((0, 0), (1, 1), (1, 0), (0, 1)))
    assert induced(square) == induced(bowtie) == P(F(1, 2), F(1, 2))
    with pytest.raises(TypeError):
        induced(list(square.vertices))


@settings(max_examples=40)
@given(st.integers(0, 10**6))
def test_x_is_centroid_iff_rotational(seed):
    rng = random.Random(seed)
    s = cp.rotational_multiset(rng) if seed % 2 else cp.random_multiset(rng, rng.randint(2, 7))
    g = brute_force_symmetries(s)
    x, c = x_center_multiset(s), centroid(s)
    assert (x.exact and x == c) == (g.continuous or g.rotation_order >= 2)


@settings(max_examples=40)
@given(st.integers(0, 10**6))
def test_centers_lie_in_fixed_set(seed):
    rng = random.Random(seed)
    s = (cp.axial_multiset, cp.rotational_multiset, cp.random_multiset)[seed % 3](rng)
    fs = fixed_set(brute_force_symmetries(s))
    x = x_center_multiset(s)
    assert fs.contains(x)
    assert fs.contains(y_center_multiset(s, x))


@settings(max_examples=30)
@given(st.integers(0, 10**6))
def test_three_centers_independent_iff_no_symmetry(seed):
    rng = random.Random(seed)
    s = (cp.axial_multiset, lambda r: cp.random_multiset(r, r.randint(3, 7)))[seed % 2](rng)
    c, x = centroid(s), x_center_multiset(s)
    y = y_center_multiset(s, x)
    trivial = cp.class_of(s) == "C"
    assert affinely_independent(c, x, y) == trivial


@settings(max_examples=30)
@given(st.integers(0, 10**6))
def test_affine_round_trip(seed):
    rng = random.Random(seed)
    s = cp.random_multiset(rng, rng.randint(3, 6))
    c, x = centroid(s), x_center_multiset(s)
    y = y_center_multiset(s, x)
    for target in cp.fixed_set_samples(rng, brute_force_symmetries(s), 3):
        got = combine(center_through(s, target), c, x, y)
        assert real(dist2(got, target)) < 1e-18
