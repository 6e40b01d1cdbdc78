"""Independent checks: brute-force symmetry groups, equivariance sampling,
the two-regular-polygon lemma suite, the classical triangle demos and the
search for polygons whose adjacency breaks the symmetry of their vertices.

Nothing here reuses the candidate generation of :mod:`symmetry` or the
combinatorics of :mod:`cyclic`; the oracle re-derives what it checks.
"""

from __future__ import annotations

import itertools
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Sequence

from . import numeric as num
from .errors import ContractViolation, GeometryError
from .geom import Point, Similarity
from .symmetry import LabeledMultiset, Multiset, Polygon, SymmetryGroup


@dataclass
class TrialReport:
    """Outcome of a suite; ``passed`` exactly when no failure was recorded."""

    name: str
    trials: int = 0
    seed: int | None = None
    failures: list = field(default_factory=list)
    elapsed: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, item=None, expected=None, got=None) -> bool:
        self.trials += 1
        if not ok:
            self.failures.append({"input": _show(item), "expected": _show(expected), "got": _show(got)})
        return ok

    def merge(self, other: "TrialReport") -> None:
        self.trials += other.trials
        self.failures.extend(other.failures)

    def to_dict(self) -> dict:
        # timing is left out so that reports are byte-stable
        return {"suite": self.name, "trials": self.trials, "seed": self.seed,
                "passed": self.passed, "notes": self.notes, "failures": self.failures}

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.trials} trials, {len(self.failures)} failures, {self.elapsed:.2f}s"


def _show(v):
    if v is None or isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, Point):
        return [_show(v.x), _show(v.y)]
    if isinstance(v, (list, tuple)):
        return [_show(x) for x in v]
    if isinstance(v, Multiset):
        return _show(v.points)
    if isinstance(v, Polygon):
        return {"polygon": _show(v.vertices)}
    if num.is_exact(v) or isinstance(v, num.MPF):
        return num.ctx.nstr(num.to_real(v), 15)
    return repr(v)


# --- brute-force symmetry groups ----------------------------------------------------

MAX_BRUTE_FORCE = 8


def _solve_linear(u: Point, v: Point, mirror: bool):
    """2x2 matrix sending ``u`` to ``v`` and ``perp(u)`` to ``+-perp(v)``,
    or None when it is not orthogonal."""
    pu, pv = u.perp(), (-v.perp() if mirror else v.perp())
    det = u.x * pu.y - pu.x * u.y
    if det == 0:
        return None
    # M = [v pv] [u pu]^-1
    ia, ib, ic, id_ = pu.y / det, -pu.x / det, -u.y / det, u.x / det
    m = (v.x * ia + pv.x * ic, v.x * ib + pv.x * id_, v.y * ia + pv.y * ic, v.y * ib + pv.y * id_)
    a, b, c, d = m
    if a * a + c * c != 1 or b * b + d * d != 1 or a * b + c * d != 0:
        return None
    return m


def _mean(points: Sequence[Point]) -> Point:
    sx, sy = points[0].x, points[0].y
    for p in points[1:]:
        sx, sy = num.add(sx, p.x), num.add(sy, p.y)
    return Point(num.div(sx, len(points)), num.div(sy, len(points)))


def _same_cycle(s: list, t: list) -> bool:
    n = len(s)
    doubled = s + s
    rdoubled = doubled[::-1]
    return any(doubled[r:r + n] == t or rdoubled[r:r + n] == t for r in range(n))


def brute_force_symmetries(obj) -> SymmetryGroup:
    """Symmetry group found by trying every isometry that sends two fixed
    reference points onto a pair of object points at the same distance.

    Raises:
        ValueError: more than ``MAX_BRUTE_FORCE`` points.
    """
    if isinstance(obj, Polygon):
        pts = list(obj.vertices)
        same = lambda mapped: _same_cycle(pts, mapped)
    elif isinstance(obj, LabeledMultiset):
        pts = list(obj.points)
        labels = list(obj.labels)
        same = lambda mapped: Counter(zip(mapped, labels)) == Counter(zip(pts, labels))
    else:
        pts = list(obj.points if isinstance(obj, Multiset) else obj)
        same = lambda mapped: Counter(mapped) == Counter(pts)
    if len(pts) > MAX_BRUTE_FORCE:
        raise ValueError(f"brute force is limited to {MAX_BRUTE_FORCE} points")
    c = _mean(pts)
    a = pts[0]
    b = next((p for p in pts if p != a), None)
    if b is None:
        return SymmetryGroup(a, continuous=True)
    u = b - a
    rots, refls = [], []
    distinct = list(dict.fromkeys(pts))
    for a2 in distinct:
        for b2 in distinct:
            v = b2 - a2
            if v.norm2() != u.norm2():
                continue
            for mirror in (False, True):
                m = _solve_linear(u, v, mirror)
                if m is None:
                    continue
                t = Point(a2.x - (m[0] * a.x + m[1] * a.y), a2.y - (m[2] * a.x + m[3] * a.y))
                mapped = [Point(m[0] * p.x + m[1] * p.y + t.x, m[2] * p.x + m[3] * p.y + t.y) for p in pts]
                if same(mapped):
                    (refls if mirror else rots).append((m[0], m[2]) if not mirror else (m[0], m[1]))
    return SymmetryGroup(c, tuple(dict.fromkeys(rots)), tuple(dict.fromkeys(refls)))


def same_group(g: SymmetryGroup, h: SymmetryGroup) -> bool:
    if g.continuous or h.continuous:
        return g.continuous == h.continuous and g.center == h.center
    return (
        g.center == h.center
        and g.rotation_order == h.rotation_order
        and Counter(g.rotations) == Counter(h.rotations)
        and Counter(g.reflections) == Counter(h.reflections)
    )


# --- similarities ------------------------------------------------------------------


def pythagorean_rotation(rng: random.Random) -> tuple[Fraction, Fraction]:
    m = rng.randint(1, 9)
    n = rng.randint(0, m - 1)
    h = m * m + n * n
    c, s = Fraction(m * m - n * n, h), Fraction(2 * m * n, h)
    if rng.random() < 0.5:
        c, s = s, c
    return (c if rng.random() < 0.5 else -c), (s if rng.random() < 0.5 else -s)


def random_rational(rng: random.Random, bound: int = 10, dens=(1, 2, 3, 4, 5, 7, 8)) -> Fraction:
    d = rng.choice(dens)
    return Fraction(rng.randint(-bound * d, bound * d), d)


def random_similarity(rng: random.Random, reflections: bool = True) -> Similarity:
    """Rational similarity: Pythagorean rotation, scale in [1/4, 4],
    rational translation, reflection with probability 1/2."""
    c, s = pythagorean_rotation(rng)
    scale = Fraction(rng.randint(1, 16), 4)
    reflect = reflections and rng.random() < 0.5
    return Similarity.make(scale, c, s, reflect, Point(random_rational(rng), random_rational(rng)))


def discrepancy(p: Point, q: Point) -> object:
    """``|p - q|``; exactly 0 for equal exact points."""
    if p.exact and q.exact and p == q:
        return 0
    d = p - q
    return num.ctx.sqrt(num.to_real(d.norm2()))


def _object_scale(obj) -> object:
    pts = _object_points(obj)
    xs = [num.to_real(p.x) for p in pts]
    ys = [num.to_real(p.y) for p in pts]
    return max(1, max(xs) - min(xs), max(ys) - min(ys))


def _object_points(obj) -> list[Point]:
    if isinstance(obj, Polygon):
        return list(obj.vertices)
    if isinstance(obj, (Multiset, LabeledMultiset)):
        return list(obj.points)
    if hasattr(obj, "points") and hasattr(obj, "circle"):
        return [p.cartesian() for p in obj.points]
    return list(obj)


def transform_object(obj, t: Similarity):
    if hasattr(obj, "transform"):
        return obj.transform(t)
    return [t(p) for p in obj]


def check_equivariance(center: str | Callable, obj, trials: int = 100, seed: int = 0,
                       tolerance: float = 1e-6) -> TrialReport:
    """Compare ``T(Z(P))`` with ``Z(T P)`` for random rational similarities;
    the discrepancy is relative to the size of ``T P``. Failures and
    exceptions are recorded, never raised."""
    from .centers import CENTERS

    fn = CENTERS[center] if isinstance(center, str) else center
    name = center if isinstance(center, str) else getattr(center, "__name__", "center")
    rep = TrialReport(f"equivariance:{name}", seed=seed)
    rng = random.Random(seed)
    start = time.perf_counter()
    base = fn(obj)
    for _ in range(trials):
        t = random_similarity(rng)
        moved = transform_object(obj, t)
        try:
            got = fn(moved)
        except (GeometryError, ContractViolation) as e:
            rep.record(False, obj, "a value", f"{type(e).__name__}: {e}")
            continue
        want = t(base)
        err = discrepancy(want, got)
        rep.record(err == 0 or err <= tolerance * _object_scale(moved), obj, want, got)
    rep.elapsed = time.perf_counter() - start
    return rep


# --- regular polygon pairs ------------------------------------------------------------


def rotational_order_mod(indices: Sequence[int], modulus: int) -> int:
    """Largest k such that adding ``modulus / k`` maps the residue set onto
    itself (1 when there is none). Plain integer arithmetic."""
    s = {i % modulus for i in indices}
    best = 1
    for k in range(2, len(s) + 1):
        if modulus % k == 0 and len(s) % k == 0:
            step = modulus // k
            if all((i + step) % modulus in s for i in s):
                best = k
    return best


def _regular(n: int, phase: Fraction, den: int) -> set[int]:
    """Vertices of a regular n-gon as residues modulo ``den``."""
    return {int((phase + Fraction(j, n)) % 1 * den) for j in range(n)}


def _check_pair(rep: TrialReport, m: int, n: int, phase: Fraction) -> None:
    den = 2 * lcm(m, n, phase.denominator)
    p, q = _regular(m, Fraction(0), den), _regular(n, phase, den)
    union = sorted(p | q)
    item = {"m": m, "n": n, "phase": str(phase)}
    coprime = gcd(m, n) == 1
    sym = rotational_order_mod(union, den) >= 2
    rep.record(sym != coprime, item, "symmetric iff gcd > 1", f"symmetric={sym}")
    if not coprime:
        return
    rep.record(len(p & q) <= 1, item, "at most one shared point", len(p & q))
    # adjacent cross pairs and their angles, with orientation
    pairs = []
    size = len(union)
    for i in range(size):
        a, b = union[i], union[(i + 1) % size]
        gap = (b - a) % den
        if (a in p and b in q) or (a in q and b in p):
            pairs.append((gap, a, b))
    by_angle = Counter(g for g, _, _ in pairs)
    rep.record(max(by_angle.values(), default=0) <= 2, item, "no three equal-angle cross pairs", dict(by_angle))
    for g, count in by_angle.items():
        if count != 2 or 2 * g >= den:
            continue
        (_, a1, b1), (_, a2, b2) = [x for x in pairs if x[0] == g]
        m1, m2 = (2 * a1 + g) // 2, (2 * a2 + g) // 2
        antipodal = (m1 - m2) % den == den // 2
        rep.record(not antipodal, item, "midpoints not antipodal", (m1, m2))
        # axis through the two midpoints: theta -> m1 + m2 - theta
        mirrored = {(m1 + m2 - x) % den for x in union}
        rep.record(mirrored == set(union), item, "union mirror-symmetric across the midpoint axis", sorted(mirrored))


def lemma_aux_suite(max_order: int = 10, random_phases: int = 50, seed: int = 0) -> TrialReport:
    """Unions of a regular m-gon and n-gon on one circle, 2 <= m, n <=
    ``max_order``, over a phase grid plus random rational phases."""
    if max_order < 3:
        raise ValueError("max_order must be at least 3")
    rep = TrialReport("lemma-aux", seed=seed)
    rng = random.Random(seed)
    start = time.perf_counter()
    for m in range(2, max_order + 1):
        for n in range(2, max_order + 1):
            grid = [Fraction(j, 4 * m * n) for j in range(4 * m)]
            extra = [Fraction(rng.randint(0, 996), 997 - rng.randint(0, 500)) % 1 for _ in range(random_phases)]
            for phase in grid + extra:
                _check_pair(rep, m, n, phase)
    rep.elapsed = time.perf_counter() - start
    return rep


# --- classical triangle centers ------------------------------------------------------------


def _tan_half_values():
    return [Fraction(k, 24) for k in range(1, 73)]


def _trig_from_tan_half(s):
    one = Fraction(1)
    d = one + s * s
    return (one - s * s) / d, 2 * s / d


def triangle_from_half_tangents(s, t) -> tuple[Point, Point, Point, tuple]:
    """Triangle with A=(0,0), B=(1,0) and the given tan(A/2), tan(B/2);
    also returns the exact side lengths (|BC|, |CA|, |AB|)."""
    ca, sa = _trig_from_tan_half(s)
    cb, sb = _trig_from_tan_half(t)
    sc = sa * cb + ca * sb
    b_len = sb / sc
    a_len = sa / sc
    A = Point(Fraction(0), Fraction(0))
    B = Point(Fraction(1), Fraction(0))
    C = Point(b_len * ca, b_len * sa)
    return A, B, C, (a_len, b_len, Fraction(1))


def incenter(A: Point, B: Point, C: Point, sides) -> Point:
    a, b, c = sides
    w = a + b + c
    return Point((a * A.x + b * B.x + c * C.x) / w, (a * A.y + b * B.y + c * C.y) / w)


def circumcenter_closed_form(A: Point, B: Point, C: Point) -> Point:
    d = 2 * (A.x * (B.y - C.y) + B.x * (C.y - A.y) + C.x * (A.y - B.y))
    a2, b2, c2 = A.norm2(), B.norm2(), C.norm2()
    return Point(
        (a2 * (B.y - C.y) + b2 * (C.y - A.y) + c2 * (A.y - B.y)) / d,
        (a2 * (C.x - B.x) + b2 * (A.x - C.x) + c2 * (B.x - A.x)) / d,
    )


def orthocenter(A: Point, B: Point, C: Point) -> Point:
    """Intersection of the altitudes from A and B (Cramer's rule)."""
    # (H - A).(B - C) = 0, (H - B).(A - C) = 0
    u, v = B - C, A - C
    r1, r2 = A.dot(u), B.dot(v)
    det = u.x * v.y - u.y * v.x
    return Point((r1 * v.y - r2 * u.y) / det, (u.x * r2 - v.x * r1) / det)


def _collinear3(p: Point, q: Point, r: Point) -> bool:
    return num.sign((q - p).cross(r - p)) == 0


def triangle_demo_suite(seed: int = 0, with_centers: bool = True) -> TrialReport:
    """Incenter equals orthocenter exactly for equilateral triangles, and
    incenter, centroid, orthocenter are collinear exactly for isosceles
    ones; the asymmetry centers of this package behave the same way."""
    from .geom import centroid
    from .multiset_centers import x_center_multiset, y_center_multiset

    rep = TrialReport("triangles", seed=seed)
    rep.notes["triangles"] = 0
    start = time.perf_counter()
    vals = _tan_half_values()
    params = [(s, t) for s in vals for t in vals if s * t < 1]
    # isosceles at the third vertex: tan(A/2) = tan(C/2)
    params += [(s, (1 - s * s) / (2 * s)) for s in vals if s < 1]
    root = num.sin_turn(Fraction(1, 12)) / num.cos_turn(Fraction(1, 12))  # tan 30 degrees
    params += [(root, root)] + [(root, t) for t in vals[:12]] + [(t, root) for t in vals[:12]]
    for idx, (s, t) in enumerate(params):
        A, B, C, sides = triangle_from_half_tangents(s, t)
        rep.notes["triangles"] += 1
        a, b, c = sides
        if (C - B).norm2() != a * a or (C - A).norm2() != b * b:
            raise ContractViolation("triangle family", "side lengths disagree with the coordinates")
        equilateral = a == b == c
        isosceles = a == b or b == c or a == c
        i, g, h = incenter(A, B, C, sides), centroid([A, B, C]), orthocenter(A, B, C)
        item = [A, B, C]
        o = circumcenter_closed_form(A, B, C)
        rep.record(h == A + B + C - o - o, item, "H = A + B + C - 2 O", [h, o])
        rep.record((i == h) == equilateral, item, f"I==H iff equilateral ({equilateral})", [i, h])
        rep.record(_collinear3(i, g, h) == isosceles, item, f"I,G,H collinear iff isosceles ({isosceles})", [i, g, h])
        if with_centers and (idx % 4 == 0 or isosceles or not isinstance(s, Fraction)):
            x = x_center_multiset(item)
            y = y_center_multiset(item, x)
            rep.record((x == g) == equilateral if x.exact else (not equilateral), item, "X == centroid iff equilateral", x)
            rep.record(_collinear3(g, x, y) == isosceles if (x.exact and y.exact) else (_near_collinear(g, x, y) == isosceles),
                       item, "centroid, X, Y collinear iff isosceles", [x, y])
    rep.elapsed = time.perf_counter() - start
    return rep


def _near_collinear(p: Point, q: Point, r: Point) -> bool:
    a, b = q - p, r - p
    scale = max(1, num.to_real(a.norm2()), num.to_real(b.norm2()))
    return abs(num.to_real(a.cross(b))) <= 1e-9 * scale


# --- polygons whose adjacency breaks the vertex symmetry ----------------------------------


def adjacency_cycles(points: Sequence[Point]):
    """Vertex orders up to rotation and reversal (first vertex fixed,
    second index below last)."""
    n = len(points)
    for perm in itertools.permutations(range(1, n)):
        if n > 3 and perm[0] > perm[-1]:
            continue
        yield Polygon([points[0]] + [points[i] for i in perm])


def search_asymmetric_adjacency(vertices) -> Polygon | None:
    """First vertex order whose polygon has a trivial symmetry group."""
    pts = list(vertices.points if isinstance(vertices, Multiset) else vertices)
    for poly in adjacency_cycles(pts):
        g = brute_force_symmetries(poly)
        if not g.continuous and g.rotation_order == 1 and not g.reflections:
            return poly
    return None
