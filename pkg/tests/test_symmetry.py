from fractions import Fraction as F

from hypothesis import given, strategies as st

from planecenters import numeric as num
from planecenters.cyclic import CyclicConfiguration
from planecenters.geom import Point, Similarity
from planecenters.symmetry import (
    LabeledMultiset, LineSet, Multiset, Plane, Polygon, SinglePoint, classify, fixed_set,
    is_rotationally_symmetric, symmetry_group, symmetry_group_labeled, symmetry_group_multiset,
    symmetry_group_polygon,
)

from conftest import P, points, pts


def regular(n, r=1):
    return [Point(num.mul(r, num.cos_turn(F(k, n))), num.mul(r, num.sin_turn(F(k, n)))) for k in range(n)]


def test_multiset_groups():
    g = symmetry_group_multiset(regular(3))
    assert (g.rotation_order, len(g.reflections)) == (3, 3)
    g = symmetry_group_multiset(pts((1, 0), (-1, 0), (0, 2)))
    assert (g.rotation_order, len(g.reflections)) == (1, 1)
    assert g.reflection_axes[0].same_as(LineSet(g.reflection_axes[0]).line)
    assert g.reflection_axes[0].contains(P(0, 17))
    assert symmetry_group_multiset(pts((0, 0), (4, 0), (1, 2))).trivial


def test_polygon_groups(square):
    g = symmetry_group_polygon(Polygon(square))
    assert (g.rotation_order, len(g.reflections)) == (4, 4)
    bowtie = Polygon(pts((1, 0), (-1, 0), (0, 1), (0, -1)))
    g = symmetry_group_polygon(bowtie)
    assert g.rotation_order == 2
    pent = regular(5)
    star = Polygon([pent[i] for i in (0, 2, 4, 1, 3)])
    g = symmetry_group_polygon(star)
    assert (g.rotation_order, len(g.reflections)) == (5, 5)


def test_labeled_groups(square):
    assert symmetry_group_labeled(LabeledMultiset(square, [1, 1, 1, 1])).rotation_order == 4
    g = symmetry_group_labeled(LabeledMultiset(square, [1, 1, 2, 2]))
    assert (g.rotation_order, len(g.reflections)) == (1, 1)
    g = symmetry_group_labeled(LabeledMultiset(square, [1, 2, 1, 2]))
    assert (g.rotation_order, len(g.reflections)) == (2, 2)


def test_single_repeated_point_is_continuous():
    g = symmetry_group_multiset([P(2, 3)] * 3)
    assert g.continuous
    assert fixed_set(g) == SinglePoint(P(2, 3))
    assert classify(g) == "A"


def test_fixed_sets():
    assert isinstance(fixed_set(symmetry_group_multiset(pts((0, 0), (4, 0), (1, 2)))), Plane)
    fs = fixed_set(symmetry_group_multiset(pts((1, 0), (-1, 0), (0, 2))))
    assert isinstance(fs, LineSet) and fs.contains(P(0, -5)) and not fs.contains(P(1, 1))
    sq = pts((0, 0), (4, 0), (4, 4), (0, 4))
    assert fixed_set(symmetry_group_multiset(sq)) == SinglePoint(P(2, 2))


def test_classes():
    assert classify(Multiset(regular(3))) == "A"
    assert classify(Multiset(pts((1, 0), (-1, 0), (0, 2)))) == "B"
    assert classify(Multiset(pts((0, 0), (4, 0), (1, 2)))) == "C"


def test_collinear_multisets_are_never_class_c():
    assert classify(Multiset(pts((0, 0), (1, 1), (5, 5)))) == "B"
    assert classify(Multiset(pts((0, 0), (1, 1), (2, 2)))) == "A"


def test_rotational_symmetry_checks():
    pair = CyclicConfiguration.from_turns([0, F(1, 2)])
    assert is_rotationally_symmetric(pair) == (True, 2)
    assert is_rotationally_symmetric(CyclicConfiguration.from_turns([0, F(1, 4), F(1, 2)]))[0] is False
    assert is_rotationally_symmetric(Multiset(regular(6))) == (True, 6)


def _similarity(k, m, n, refl, shift):
    h = m * m + n * n
    return Similarity.make(F(k, 2), F(m * m - n * n, h), F(2 * m * n, h), refl, (shift.x, shift.y))


@given(st.lists(points, min_size=1, max_size=5), st.integers(1, 6), st.integers(1, 5), st.booleans(), points)
def test_conjugation_equivariance(ps, k, m, refl, shift):
    t = _similarity(k, m, m - 1, refl, shift)
    g = symmetry_group_multiset(ps)
    h = symmetry_group_multiset([t(p) for p in ps])
    assert h.signature() == g.conjugate(t).signature()
    assert classify(g) == classify(h)


def test_conjugation_on_symmetric_object(square):
    t = _similarity(3, 2, 1, True, P(1, 5))
    g = symmetry_group_multiset(square)
    assert symmetry_group_multiset([t(p) for p in square]).signature() == g.conjugate(t).signature()


@given(st.lists(points, min_size=3, max_size=6))
def test_polygon_group_is_a_subgroup(ps):
    gp, gm = symmetry_group_polygon(Polygon(ps)), symmetry_group_multiset(ps)
    assert set(gp.rotations) <= set(gm.rotations)
    assert set(gp.reflections) <= set(gm.reflections)


def test_polygon_group_on_symmetric_vertices_is_a_subgroup():
    hexa = regular(6)
    for order in [(0, 1, 2, 4, 5, 3), (0, 2, 1, 3, 5, 4), (0, 3, 1, 4, 2, 5)]:
        poly = Polygon([hexa[i] for i in order])
        gp, gm = symmetry_group_polygon(poly), symmetry_group_multiset(hexa)
        assert set(gp.rotations) <= set(gm.rotations)
        assert set(gp.reflections) <= set(gm.reflections)


@given(st.lists(points, min_size=1, max_size=5), st.lists(st.fractions(-5, 5, max_denominator=4), min_size=20, max_size=20))
def test_fixed_set_is_pointwise_fixed(ps, ts):
    g = symmetry_group(Multiset(ps))
    fs = fixed_set(g)
    if isinstance(fs, SinglePoint):
        samples = [fs.point]
    elif isinstance(fs, LineSet):
        samples = [fs.point + fs.direction.scale(t) for t in ts]
    else:
        samples = [P(t, -t) for t in ts]
    for e in g.elements():
        for x in samples:
            assert e(x) == x


def test_regular_polygon_in_cyclotomic_coordinates():
    g = symmetry_group_polygon(Polygon(regular(6, 2)))
    assert g.rotation_order == 6 and len(g.reflections) == 6
