"""Verification suites run by ``planecenters verify`` and by the acceptance
tests. Each returns a :class:`~planecenters.oracle.TrialReport` and is
deterministic under its seed."""

from __future__ import annotations

import itertools
import random
import time
from fractions import Fraction

from . import corpus as cp
from . import numeric as num
from .centers import CENTERS, CYCLIC_CENTERS
from .cyclic import CyclicConfiguration
from .errors import ContractViolation, GeometryError, NotCyclicError, PreconditionError
from .geom import Point, centroid
from .multiset_centers import center_through, combine, x_center_multiset, y_center_multiset
from .oracle import (TrialReport, brute_force_symmetries, check_equivariance, discrepancy,
                     lemma_aux_suite, same_group, triangle_demo_suite)
from .polygon_centers import center_through_polygon, x_center_polygon, y_center_polygon
from .symmetry import LabeledMultiset, Multiset, Polygon, fixed_set, symmetry_group

SUITES = ("equivariance", "iff", "lemma-aux", "theorem", "oracle", "triangles")


def _points(obj) -> list[Point]:
    return list(obj.vertices) if isinstance(obj, Polygon) else list(obj)


def affinely_independent(c: Point, x: Point, y: Point) -> bool:
    d, e = x - c, y - c
    cr = d.cross(e)
    if num.is_exact(cr):
        return cr != 0
    scale = max(1, num.to_real(d.norm2())) * max(1, num.to_real(e.norm2()))
    return num.sign(cr, scale=scale) != 0


def three_centers(obj) -> tuple[Point, Point, Point]:
    """Centroid and the two asymmetry centers suited to the object."""
    pts = _points(obj)
    c = centroid(pts)
    if isinstance(obj, Polygon):
        x = x_center_polygon(obj)
        return c, x, y_center_polygon(obj, x)
    x = x_center_multiset(pts)
    return c, x, y_center_multiset(pts, x)


# --- equivariance ------------------------------------------------------------------


def _objects_for(center: str, rng: random.Random, count: int) -> list:
    out: list = []
    guard = 0
    while len(out) < count:
        guard += 1
        if guard > 100 * count:
            raise RuntimeError(f"could not build objects for {center}")
        if center == "circumcenter":
            out.append(cp.concyclic_multiset(rng))
            continue
        if center in CYCLIC_CENTERS:
            obj = cp.turn_configuration(rng, labeled=center == "b_center_labeled")
        elif center in ("x_polygon", "y_polygon"):
            maker = (cp.rotational_polygon, cp.mirror_polygon, cp.random_polygon,
                     cp.shuffled_symmetric_polygon, lambda r: cp.collinear_polygon(r, True))
            obj = maker[len(out) % len(maker)](rng)
        else:
            maker = (cp.rotational_multiset, cp.axial_multiset, cp.random_multiset,
                     lambda r: cp.perturbed(r, cp.rotational_multiset(r)))
            obj = maker[len(out) % len(maker)](rng)
        try:
            CENTERS[center](obj)
        except (PreconditionError, ContractViolation):
            # outside the domain (a_center) or a recorded contract gap
            continue
        out.append(obj)
    return out


def equivariance_suite(trials: int = 100, seed: int = 0, objects: int = 20,
                       tolerance: float = 1e-6, centers=None, obj=None) -> TrialReport:
    rep = TrialReport("equivariance", seed=seed)
    start = time.perf_counter()
    names = list(centers or CENTERS)
    for k, name in enumerate(names):
        rng = random.Random(seed * 1000 + k)
        if obj is not None:
            objs = [obj]
        else:
            objs = _objects_for(name, rng, objects)
        before = len(rep.failures)
        for i, o in enumerate(objs):
            sub = check_equivariance(name, o, trials=trials, seed=seed * 1000 + 37 * k + i, tolerance=tolerance)
            for f in sub.failures:
                f["center"] = name
            rep.merge(sub)
        rep.notes[name] = {"objects": len(objs), "failures": len(rep.failures) - before}
    rep.elapsed = time.perf_counter() - start
    return rep


# --- the iff statements ---------------------------------------------------------------


def iff_suite(seed: int = 0, multisets: int = 50, polygons: int = 40) -> TrialReport:
    """X equals the centroid exactly on rotationally symmetric objects, and
    the three centers are affinely independent exactly on objects without
    symmetry. Classes come from the brute-force oracle."""
    rep = TrialReport("iff", seed=seed)
    rng = random.Random(seed)
    start = time.perf_counter()
    sym = cp.symmetric_corpus(rng, multisets)
    asym = cp.asymmetric_rotation_corpus(rng, multisets)
    bins = cp.polygon_corpus(rng, polygons)
    objs = [(m, "multiset") for m in sym + asym]
    objs += [(p, "polygon") for k in "ABC" for p in bins[k]]
    for obj, kind in objs:
        cls = cp.class_of(obj)
        try:
            c, x, y = three_centers(obj)
        except (GeometryError, ContractViolation) as e:
            rep.record(False, obj, "three centers", f"{type(e).__name__}: {e}")
            continue
        x_is_c = x.exact and c.exact and x == c
        rep.record(x_is_c == (cls == "A"), obj, f"X == centroid iff class A (class {cls})", [c, x])
        if kind == "multiset" and cls == "A":
            rep.record(x.exact, obj, "exact X on the symmetric corpus", x)
        rep.record(affinely_independent(c, x, y) == (cls == "C"), obj,
                   f"independent iff class C (class {cls})", [c, x, y])
    rep.notes.update({
        "symmetric_multisets": len(sym),
        "other_multisets": len(asym),
        "polygons": {k: len(v) for k, v in bins.items()},
        "non_simple": sum(not cp.is_simple(p) for v in bins.values() for p in v),
        "collinear": sum(cp.is_collinear_polygon(p) for v in bins.values() for p in v),
    })
    rep.elapsed = time.perf_counter() - start
    return rep


# --- fixed sets and the affine round trip ---------------------------------------------------


def _random_object(rng: random.Random, i: int):
    makers = (
        cp.rotational_multiset, cp.axial_multiset, lambda r: cp.random_multiset(r, r.randint(1, 7)),
        cp.rotational_polygon, cp.mirror_polygon, cp.random_polygon,
        cp.shuffled_symmetric_polygon, lambda r: cp.collinear_polygon(r, r.random() < 0.5),
    )
    while True:
        obj = makers[i % len(makers)](rng)
        if len(_points(obj)) <= 8:
            return obj


def _close(p: Point, q: Point, scale) -> bool:
    if p.exact and q.exact:
        return p == q
    return num.to_real(discrepancy(p, q)) <= 1e-9 * scale


def _scale(pts) -> object:
    xs = [num.to_real(p.x) for p in pts]
    ys = [num.to_real(p.y) for p in pts]
    return max(1, max(xs) - min(xs), max(ys) - min(ys))


def _all_centers(obj) -> dict:
    pts = _points(obj)
    out = {"centroid": centroid(pts), "x_multiset": x_center_multiset(pts), "y_multiset": y_center_multiset(pts)}
    try:
        out["circumcenter"] = CENTERS["circumcenter"](pts)
    except NotCyclicError:
        pass
    if isinstance(obj, Polygon):
        out["x_polygon"] = x_center_polygon(obj)
        out["y_polygon"] = y_center_polygon(obj)
    return out


def _cyclic_containment(rep: TrialReport, cfg: CyclicConfiguration) -> None:
    """The circle-point centers lie in the fixed set of the configuration.
    The circle belongs to the object, so its center joins the points with
    a label of its own."""
    pts = [p.cartesian() for p in cfg.points]
    labels = list(cfg.labels) if cfg.labels is not None else [0] * len(pts)
    obj = LabeledMultiset(pts + [cfg.center], labels + [max(labels) + 1])
    fs = fixed_set(brute_force_symmetries(obj))
    names = ("b_center_labeled",) if cfg.labels is not None else ("a_center", "b_center")
    for name in names:
        try:
            v = CENTERS[name](cfg)
        except PreconditionError:
            continue
        rep.record(fs.contains(v), list(cfg.turns), f"{name} in the fixed set", v)


def theorem_suite(trials: int = 200, seed: int = 0, samples: int = 5) -> TrialReport:
    """Every center lies in the fixed set of the symmetry group, and every
    fixed point is reached by the affine combination of the three base
    centers."""
    rep = TrialReport("theorem", seed=seed)
    rng = random.Random(seed)
    start = time.perf_counter()
    for i in range(trials):
        obj = _random_object(rng, i)
        pts = _points(obj)
        g = brute_force_symmetries(obj)
        fs = fixed_set(g)
        try:
            values = _all_centers(obj)
            c, x, y = three_centers(obj)
        except (GeometryError, ContractViolation) as e:
            rep.record(False, obj, "centers", f"{type(e).__name__}: {e}")
            continue
        for name, v in values.items():
            rep.record(fs.contains(v), obj, f"{name} in the fixed set", v)
        scale = _scale(pts)
        for target in cp.fixed_set_samples(rng, g, samples):
            solve = center_through_polygon if isinstance(obj, Polygon) else center_through
            w = solve(obj, target)
            rep.record(_close(combine(w, c, x, y), target, scale), obj, target, w)
    for i in range(trials // 2):
        _cyclic_containment(rep, cp.turn_configuration(rng, labeled=i % 2 == 1))
    rep.elapsed = time.perf_counter() - start
    return rep


# --- oracle agreement -----------------------------------------------------------------------


def grid_multisets(size: int = 5, max_n: int = 4):
    grid = [Point(Fraction(i), Fraction(j)) for i in range(size) for j in range(size)]
    for n in range(1, max_n + 1):
        for combo in itertools.combinations_with_replacement(grid, n):
            yield list(combo)


def oracle_suite(seed: int = 0, random_count: int = 500, exhaustive: bool = True, obj=None) -> TrialReport:
    """Symmetry groups from :mod:`symmetry` against the brute-force oracle."""
    rep = TrialReport("oracle", seed=seed)
    rng = random.Random(seed)
    start = time.perf_counter()

    def check(o):
        a, b = symmetry_group(o if not isinstance(o, list) else Multiset(o)), brute_force_symmetries(o)
        rep.record(same_group(a, b), o, b.signature(), a.signature())

    if obj is not None:
        check(obj)
    else:
        if exhaustive:
            for m in grid_multisets():
                check(m)
        for _ in range(random_count):
            n = rng.randint(1, 8)
            maker = rng.choice((cp.random_multiset, cp.rotational_multiset, cp.axial_multiset))
            pts = maker(rng) if maker is not cp.random_multiset else maker(rng, n)
            check(pts[:8])
    rep.elapsed = time.perf_counter() - start
    return rep


def run_suite(name: str, trials: int | None = None, seed: int = 0, tolerance: float = 1e-6,
              max_order: int = 10, obj=None) -> TrialReport:
    if name == "equivariance":
        return equivariance_suite(trials=trials or 100, seed=seed, tolerance=tolerance, obj=obj,
                                  centers=_centers_for(obj) if obj is not None else None)
    if name == "iff":
        return iff_suite(seed=seed)
    if name == "lemma-aux":
        return lemma_aux_suite(max_order=max_order, seed=seed)
    if name == "theorem":
        return theorem_suite(trials=trials or 200, seed=seed)
    if name == "oracle":
        return oracle_suite(seed=seed, random_count=trials or 500, obj=obj)
    if name == "triangles":
        return triangle_demo_suite(seed=seed)
    raise ValueError(f"unknown suite {name!r}")


def _centers_for(obj) -> list[str]:
    if isinstance(obj, CyclicConfiguration):
        return list(CYCLIC_CENTERS)
    if isinstance(obj, Polygon):
        return ["centroid", "x_polygon", "y_polygon"]
    if isinstance(obj, LabeledMultiset):
        return ["centroid"]
    names = ["centroid", "x_multiset", "y_multiset"]
    try:
        CENTERS["circumcenter"](obj)
        names.append("circumcenter")
    except GeometryError:
        pass
    return names
