"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""

import itertools
import time
from fractions import Fraction as F

import pytest

from planecenters import numeric as num
from planecenters.cyclic import CyclicConfiguration, b_center, phi
from planecenters.geom import Point
from planecenters.multiset_centers import x_center_multiset
from planecenters.oracle import lemma_aux_suite, rotational_order_mod, triangle_demo_suite
from planecenters.polygon_centers import _rings, chain_orientation, format_chain_code, rotation_code, x_center_polygon
from planecenters.suites import equivariance_suite, iff_suite, oracle_suite, theorem_suite
from planecenters.symmetry import Polygon

from conftest import ACCEPTANCE_LINES, P, pts

ORIGIN = Point(F(0), F(0))


def report(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})"
    print(line)
    ACCEPTANCE_LINES.append(line)
    return ok


@pytest.fixture(scope="module")
def iff_report():
    return iff_suite(seed=0, multisets=50, polygons=40)


def test_1_first_step_iff_on_24_grid():
    start = time.perf_counter()
    turns = [F(i, 24) for i in range(24)]
    count = exceptions = 0
    for n in range(2, 7):
        for idx in itertools.combinations(range(24), n):
            at_center = b_center(CyclicConfiguration.from_turns([turns[i] for i in idx])) == ORIGIN
            exceptions += at_center != (rotational_order_mod(idx, 24) >= 2)
            count += 1
    elapsed = time.perf_counter() - start
    ok = exceptions == 0 and count == 190026 and elapsed < 60
    assert report(1, "cyclic center at O iff rotationally symmetric", ok,
                  f"{count} subsets, {exceptions} exceptions, {elapsed:.1f}s")


def test_2_equivariance():
    rep = equivariance_suite(trials=100, seed=0, objects=20, tolerance=1e-6)
    counts = {k: v["objects"] for k, v in rep.notes.items()}
    ok = rep.passed and len(counts) == 9 and min(counts.values()) == 20 and rep.elapsed < 120
    assert report(2, "equivariance of the nine centers", ok,
                  f"{rep.trials} trials, {len(rep.failures)} failures, {rep.elapsed:.1f}s"), rep.failures[:3]


def test_3_rotational_center_iff(iff_report):
    rep = iff_report
    mine = [f for f in rep.failures if "X == centroid" in str(f["expected"]) or "three centers" in str(f["expected"])]
    ok = not mine and rep.notes["symmetric_multisets"] >= 50 and rep.notes["other_multisets"] >= 50
    assert report(3, "X equals the centroid iff rotationally symmetric", ok,
                  f"{rep.notes['symmetric_multisets']}+{rep.notes['other_multisets']} multisets, {len(mine)} exceptions"), mine[:3]


def test_4_independence_iff(iff_report):
    rep = iff_report
    poly = rep.notes["polygons"]
    ok = (rep.passed and min(poly.values()) >= 40
          and rep.notes["non_simple"] >= 5 and rep.notes["collinear"] >= 5)
    assert report(4, "centroid, X, Y independent iff no symmetry", ok,
                  f"polygons {poly}, non-simple {rep.notes['non_simple']}, collinear {rep.notes['collinear']}, "
                  f"{len(rep.failures)} exceptions"), rep.failures[:3]


def test_5_fixed_sets_and_round_trip():
    rep = theorem_suite(trials=200, seed=0, samples=5)
    assert report(5, "containment and affine round trip", rep.passed,
                  f"{rep.trials} checks, {len(rep.failures)} failures"), rep.failures[:3]


def test_6_two_polygon_lemma():
    rep = lemma_aux_suite(max_order=10, seed=0)
    ok = rep.passed and rep.elapsed < 30
    assert report(6, "regular m-gon and n-gon unions", ok,
                  f"{rep.trials} checks, {len(rep.failures)} violations, {rep.elapsed:.1f}s"), rep.failures[:3]


def test_7_oracle_agreement():
    rep = oracle_suite(seed=0, random_count=500, exhaustive=True)
    assert report(7, "symmetry groups agree with brute force", rep.passed,
                  f"{rep.trials} objects, {len(rep.failures)} disagreements"), rep.failures[:3]


def test_8_triangle_demos():
    rep = triangle_demo_suite(seed=0)
    ok = rep.passed and rep.notes["triangles"] >= 1000
    assert report(8, "triangle center coincidences", ok,
                  f"{rep.notes['triangles']} triangles, {len(rep.failures)} exceptions"), rep.failures[:3]


def test_9_traced_fixtures():
    T = CyclicConfiguration.from_turns
    checks = {}
    checks["triangle plus pair"] = b_center(T([0, F(1, 3), F(2, 3), F(1, 12), F(7, 12)])).theta.exact == F(5, 6)
    checks["three quarters"] = b_center(T([0, F(1, 4), F(1, 2)])).theta.exact == F(1, 4)
    checks["phi"] = sorted(p.theta.exact for p in phi(T([0, F(1, 10), F(1, 2), F(3, 5)])).points) == [F(1, 20), F(11, 20)]
    checks["isosceles X"] = x_center_multiset(pts((1, 0), (-1, 0), (0, 2))) == P(0, 2)
    checks["collinear 3-gon"] = x_center_polygon(Polygon(pts((0, 0), (1, 0), (3, 0)))) == P(3, 0)
    five = [Point(num.cos_turn(F(k, 5)), num.sin_turn(F(k, 5))) for k in range(5)]
    poly = Polygon([five[0], five[2], five[1], five[4], five[3]])
    chain = chain_orientation(poly, 0).positive
    code = format_chain_code(rotation_code(chain, ORIGIN, _rings(list(poly.vertices), ORIGIN), 1))
    checks["pentagram code"] = code == (r"((1,2\frac{2\pi}{5}),(1,4\frac{2\pi}{5}),(1,3\frac{2\pi}{5}),"
                                        r"(1,4\frac{2\pi}{5}),(1,2\frac{2\pi}{5}))")
    bad = [k for k, v in checks.items() if not v]
    assert report(9, "traced fixtures", not bad, f"{len(checks) - len(bad)}/{len(checks)} reproduced"), bad
