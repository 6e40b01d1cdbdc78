"""Seeded generators of test objects: symmetric and perturbed multisets,
polygons of each class (including non-simple and collinear ones) and
concyclic configurations. Every object is built from exact coordinates;
orders 3 and 6 use cyclotomic coordinates."""

from __future__ import annotations

import random
from fractions import Fraction

from . import numeric as num
from .cyclic import CyclicConfiguration
from .geom import Point
from .oracle import brute_force_symmetries, pythagorean_rotation, random_rational
from .symmetry import Polygon, fixed_set

ORDERS = (2, 3, 4, 6)


def rand_point(rng: random.Random, bound: int = 6) -> Point:
    return Point(random_rational(rng, bound), random_rational(rng, bound))


def _rotate(p: Point, c: Point, co, si) -> Point:
    v = p - c
    return Point(num.add(c.x, num.sub(num.mul(co, v.x), num.mul(si, v.y))),
                 num.add(c.y, num.add(num.mul(si, v.x), num.mul(co, v.y))))


def _reflect(p: Point, c: Point, a, b) -> Point:
    """Reflection through the line by ``c`` with matrix [[a, b], [b, -a]]."""
    v = p - c
    return Point(num.add(c.x, num.add(num.mul(a, v.x), num.mul(b, v.y))),
                 num.add(c.y, num.sub(num.mul(b, v.x), num.mul(a, v.y))))


def _turn(k: int, j: int = 1):
    q = Fraction(j, k)
    return num.cos_turn(q), num.sin_turn(q)


def _axis(rng: random.Random):
    """Entries (a, b) of a rational reflection matrix [[a, b], [b, -a]]."""
    return pythagorean_rotation(rng)


def class_of(obj) -> str:
    """Class from the brute-force oracle (independent of :mod:`symmetry`)."""
    g = brute_force_symmetries(obj)
    if g.continuous or g.rotation_order >= 2:
        return "A"
    return "B" if g.reflections else "C"


# --- multisets -------------------------------------------------------------------


def rotational_multiset(rng: random.Random, limit: int = 8) -> list[Point]:
    """Union of full orbits of a rotation of order 2, 3, 4 or 6, sometimes
    with a mirror axis and the rotation center; at most ``limit`` points."""
    k = rng.choice(ORDERS)
    mirror = rng.random() < 0.3 and 2 * k <= limit
    per_seed = k * (2 if mirror else 1)
    c = rand_point(rng)
    seeds = [rand_point(rng) for _ in range(rng.randint(1, max(1, limit // per_seed)))]
    pts = []
    for s in seeds:
        for j in range(k):
            pts.append(_rotate(s, c, *_turn(k, j)))
    if mirror:
        a, b = _axis(rng)
        pts += [_reflect(p, c, a, b) for p in pts]
    if len(pts) < limit and rng.random() < 0.3:
        pts.append(c)
    rng.shuffle(pts)
    return pts


def axial_multiset(rng: random.Random) -> list[Point]:
    c = rand_point(rng)
    a, b = _axis(rng)
    pts = []
    for _ in range(rng.randint(1, 3)):
        p = rand_point(rng)
        pts += [p, _reflect(p, c, a, b)]
    if len(pts) < 8 and rng.random() < 0.5:
        # a point on the axis: midpoint of a point and its mirror image
        p = rand_point(rng)
        q = _reflect(p, c, a, b)
        pts.append(Point((p.x + q.x) / 2, (p.y + q.y) / 2))
    rng.shuffle(pts)
    return pts


def perturbed(rng: random.Random, pts: list[Point]) -> list[Point]:
    out = list(pts)
    i = rng.randrange(len(out))
    d = Point(Fraction(rng.randint(1, 9), 37), Fraction(rng.randint(-9, 9), 41))
    out[i] = out[i] + d
    return out


def random_multiset(rng: random.Random, n: int | None = None) -> list[Point]:
    n = n if n is not None else rng.randint(1, 8)
    return [rand_point(rng) for _ in range(n)]


def symmetric_corpus(rng: random.Random, count: int) -> list[list[Point]]:
    """Multisets built with a rotational symmetry."""
    return [rotational_multiset(rng) for _ in range(count)]


def asymmetric_rotation_corpus(rng: random.Random, count: int) -> list[list[Point]]:
    """Multisets without rotational symmetry: perturbed symmetric ones,
    mirror-symmetric ones and random ones (checked with the oracle)."""
    out: list[list[Point]] = []
    makers = (
        lambda: perturbed(rng, rotational_multiset(rng)),
        lambda: axial_multiset(rng),
        lambda: perturbed(rng, axial_multiset(rng)),
        lambda: random_multiset(rng, rng.randint(2, 8)),
    )
    i = 0
    while len(out) < count:
        pts = makers[i % len(makers)]()
        i += 1
        if len(pts) <= 8 and class_of(pts) != "A":
            out.append(pts)
    return out


# --- polygons ---------------------------------------------------------------------


def rotational_polygon(rng: random.Random) -> Polygon:
    k = rng.choice(ORDERS if rng.random() < 0.5 else (2, 4))
    c = rand_point(rng)
    seeds = [rand_point(rng) for _ in range(rng.randint(1, max(1, 8 // k)))]
    if k * len(seeds) < 3:
        seeds.append(rand_point(rng))
    vs = [_rotate(s, c, *_turn(k, j)) for j in range(k) for s in seeds]
    return Polygon(vs)


def mirror_polygon(rng: random.Random) -> Polygon:
    """Chain followed by its mirror image in reverse order; optional axis
    vertices close either end."""
    c = rand_point(rng)
    a, b = _axis(rng)
    seeds = [rand_point(rng) for _ in range(rng.randint(1, 3))]
    vs = seeds + [_reflect(p, c, a, b) for p in reversed(seeds)]
    if rng.random() < 0.5 or len(vs) < 3:
        p = rand_point(rng)
        q = _reflect(p, c, a, b)
        vs.append(Point((p.x + q.x) / 2, (p.y + q.y) / 2))
    return Polygon(vs)


def random_polygon(rng: random.Random, n: int | None = None) -> Polygon:
    return Polygon(random_multiset(rng, n if n is not None else rng.randint(3, 7)))


def collinear_polygon(rng: random.Random, symmetric: bool = False) -> Polygon:
    """Polygon with all vertices on one line (direction from a Pythagorean
    triple); with ``symmetric`` the vertex set is symmetric about its
    midpoint while the vertex order is shuffled."""
    co, si = pythagorean_rotation(rng)
    o = rand_point(rng)
    n = rng.randint(3, 6)
    if symmetric:
        ts = [Fraction(rng.randint(1, 12), rng.choice((1, 2, 3))) for _ in range(n // 2)]
        ts = ts + [-t for t in ts] + ([Fraction(0)] if n % 2 or len(ts) < 2 else [])
    else:
        ts = [Fraction(rng.randint(-12, 12), rng.choice((1, 2, 3))) for _ in range(n)]
    rng.shuffle(ts)
    if len(ts) < 3:
        ts.append(Fraction(rng.randint(-12, 12)))
    return Polygon(Point(o.x + co * t, o.y + si * t) for t in ts)


def shuffled_symmetric_polygon(rng: random.Random) -> Polygon:
    """Random vertex order over a symmetric vertex multiset."""
    pts = rotational_multiset(rng) if rng.random() < 0.6 else axial_multiset(rng)
    while len(pts) < 3:
        pts = rotational_multiset(rng)
    rng.shuffle(pts)
    return Polygon(pts)


def _segments_cross(p, q, r, s) -> bool:
    def orient(a, b, c):
        return num.sign((b - a).cross(c - a))

    d1, d2, d3, d4 = orient(p, q, r), orient(p, q, s), orient(r, s, p), orient(r, s, q)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True

    def on(a, b, c):
        return orient(a, b, c) == 0 and min(num.to_real(a.x), num.to_real(b.x)) <= num.to_real(c.x) <= max(num.to_real(a.x), num.to_real(b.x)) \
            and min(num.to_real(a.y), num.to_real(b.y)) <= num.to_real(c.y) <= max(num.to_real(a.y), num.to_real(b.y))

    return on(p, q, r) or on(p, q, s) or on(r, s, p) or on(r, s, q)


def is_simple(poly: Polygon) -> bool:
    """No repeated vertex and no two non-adjacent edges meet."""
    vs = list(poly.vertices)
    n = len(vs)
    if len(set(vs)) < n:
        return False
    if n == 3:
        return num.sign((vs[1] - vs[0]).cross(vs[2] - vs[0])) != 0
    edges = [(vs[i], vs[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue
            if _segments_cross(*edges[i], *edges[j]):
                return False
    return True


def is_collinear_polygon(poly: Polygon) -> bool:
    vs = poly.vertices
    return all(num.sign((v - vs[0]).cross(w - vs[0])) == 0 for v in vs for w in vs)


def polygon_corpus(rng: random.Random, per_class: int = 40) -> dict[str, list[Polygon]]:
    """At least ``per_class`` polygons of each class, classified by the
    brute-force oracle."""
    bins: dict[str, list[Polygon]] = {"A": [], "B": [], "C": []}
    makers = (
        lambda: rotational_polygon(rng),
        lambda: mirror_polygon(rng),
        lambda: random_polygon(rng),
        lambda: collinear_polygon(rng, symmetric=True),
        lambda: collinear_polygon(rng),
        lambda: shuffled_symmetric_polygon(rng),
    )
    i = 0
    while min(len(v) for v in bins.values()) < per_class:
        poly = makers[i % len(makers)]()
        i += 1
        if len(poly) > 8:
            continue
        k = class_of(poly)
        if len(bins[k]) < per_class:
            bins[k].append(poly)
    return bins


# --- cyclic configurations ---------------------------------------------------------


def concyclic_multiset(rng: random.Random) -> list[Point]:
    """Points on a circle with rational center and radius, at angles from
    Pythagorean triples (so coordinates stay rational)."""
    c = rand_point(rng)
    r = Fraction(rng.randint(1, 6), rng.choice((1, 2)))
    pts = []
    while len(pts) < rng.randint(3, 6):
        co, si = pythagorean_rotation(rng)
        p = Point(c.x + r * co, c.y + r * si)
        if p not in pts:
            pts.append(p)
    return pts


def turn_configuration(rng: random.Random, modulus: int = 24, labeled: bool = False) -> CyclicConfiguration:
    k = rng.randint(2, 7)
    ts = sorted(rng.sample(range(modulus), k))
    labels = [rng.randint(1, 3) for _ in ts] if labeled else None
    return CyclicConfiguration.from_turns([Fraction(t, modulus) for t in ts], labels)


def fixed_set_samples(rng: random.Random, group, count: int = 5) -> list[Point]:
    """Rational points of the fixed set of ``group`` (exact)."""
    fs = fixed_set(group)
    if hasattr(fs, "line"):
        p, d = fs.line.point, fs.line.direction
        return [Point(num.add(p.x, num.mul(t, d.x)), num.add(p.y, num.mul(t, d.y)))
                for t in (random_rational(rng, 5) for _ in range(count))]
    if hasattr(fs, "point"):
        return [fs.point] * count
    return [rand_point(rng, 8) for _ in range(count)]
