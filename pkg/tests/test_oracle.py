import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from planecenters import numeric as num
from planecenters.geom import Point, centroid
from planecenters.oracle import (
    TrialReport, _check_pair, adjacency_cycles, brute_force_symmetries, circumcenter_closed_form,
    incenter, lemma_aux_suite, orthocenter, rotational_order_mod, same_group,
    search_asymmetric_adjacency, triangle_demo_suite, triangle_from_half_tangents,
)
from planecenters.symmetry import LabeledMultiset, Multiset, Polygon, symmetry_group

from conftest import P, pts


def test_brute_force_examples():
    sq = pts((1, 0), (0, 1), (-1, 0), (0, -1))
    g = brute_force_symmetries(sq)
    assert g.center == P(0, 0) and g.rotation_order == 4 and len(g.reflections) == 4
    generic = brute_force_symmetries(pts((0, 0), (3, 0), (1, 2)))
    assert generic.rotation_order == 1 and not generic.reflections and not generic.continuous
    assert brute_force_symmetries([P(2, 2), P(2, 2)]).continuous
    iso = brute_force_symmetries(pts((1, 0), (-1, 0), (0, 2)))
    assert iso.rotation_order == 1 and len(iso.reflections) == 1


def test_brute_force_respects_labels_and_order():
    lab = LabeledMultiset(pts((1, 0), (0, 1), (-1, 0), (0, -1)), (1, 2, 1, 2))
    assert brute_force_symmetries(lab).rotation_order == 2
    bowtie = Polygon(pts((0, 0), (1, 1), (1, 0), (0, 1)))
    assert brute_force_symmetries(bowtie).rotation_order == 2


def test_brute_force_size_guard():
    with pytest.raises(ValueError):
        brute_force_symmetries([P(i, i * i) for i in range(9)])


@settings(max_examples=50)
@given(st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), min_size=1, max_size=6))
def test_oracle_agrees_with_symmetry_module(coords):
    s = [P(x, y) for x, y in coords]
    assert same_group(symmetry_group(Multiset(s)), brute_force_symmetries(s))


def test_rotational_order_mod():
    assert rotational_order_mod([0, 6, 12, 18], 24) == 4
    assert rotational_order_mod([0, 1, 12, 13], 24) == 2
    assert rotational_order_mod([0, 1, 3], 24) == 1


def test_lemma_pair_examples():
    rep = TrialReport("pair")
    _check_pair(rep, 2, 3, F(0))
    _check_pair(rep, 2, 4, F(0))
    _check_pair(rep, 3, 4, F(1, 24))
    assert rep.passed
    # aligned triangle and square share exactly one point
    tri = {F(j, 3) for j in range(3)}
    sq = {F(j, 4) for j in range(4)}
    assert len(tri & sq) == 1


def test_lemma_suite_small():
    rep = lemma_aux_suite(max_order=5, random_phases=5)
    assert rep.passed and rep.trials > 200


def test_triangle_family_is_exact():
    A, B, C, (a, b, c) = triangle_from_half_tangents(F(1, 2), F(1, 3))
    assert (C - B).norm2() == a * a and (C - A).norm2() == b * b and c == 1


def test_isosceles_sweep():
    for h in (F(1, 3), F(1), F(5, 2), F(7)):
        A, B, C = P(-1, 0), P(1, 0), Point(F(0), h)
        sides = (num.sqrt(1 + h * h), num.sqrt(1 + h * h), F(2))
        i, g, o = incenter(A, B, C, sides), centroid([A, B, C]), orthocenter(A, B, C)
        assert i.x == 0 and g.x == 0 and o.x == 0


def test_triangle_centers():
    A, B, C = pts((0, 0), (2, 0), (1, 5))
    h, o = orthocenter(A, B, C), circumcenter_closed_form(A, B, C)
    assert h == P(1, F(1, 5))
    assert h == A + B + C - o - o
    A, B, C = pts((0, 0), (4, 0), (1, 2))
    assert orthocenter(A, B, C) == P(1, F(3, 2))
    sides = (num.sqrt(F(13)), num.sqrt(F(5)), F(4))
    i, g, h = incenter(A, B, C, sides), centroid([A, B, C]), orthocenter(A, B, C)
    assert num.sign((g - h).cross(i - h)) != 0


def test_triangle_suite_small():
    rep = triangle_demo_suite(with_centers=False)
    assert rep.passed and rep.notes["triangles"] >= 1000


def test_adjacency_search():
    assert sum(1 for _ in adjacency_cycles(pts((0, 0), (1, 0), (1, 1), (0, 1), (2, 2)))) == 12
    square = pts((1, 0), (0, 1), (-1, 0), (0, -1))
    assert search_asymmetric_adjacency(square) is None
    hexagon = [Point(num.cos_turn(F(k, 6)), num.sin_turn(F(k, 6))) for k in range(6)]
    found = search_asymmetric_adjacency(hexagon)
    assert found is not None
    g = brute_force_symmetries(found)
    assert g.rotation_order == 1 and not g.reflections


def test_report_serialization_is_stable():
    def run():
        rep = lemma_aux_suite(max_order=4, random_phases=3, seed=7)
        return json.dumps(rep.to_dict(), sort_keys=True)

    assert run() == run()
    rep = TrialReport("x")
    rep.record(False, [P(1, 2)], F(1, 3), None)
    assert rep.to_dict()["failures"] == [{"input": [["1", "2"]], "expected": "1/3", "got": None}]
    assert not rep.passed and rep.summary().startswith("FAIL x: 1 trials, 1 failures")
