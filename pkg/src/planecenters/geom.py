"""Plane points, angles in turns, circles and similarities.

Predicates on input coordinates are exact. Angles are measured in turns
(one full revolution = 1) so that rational turns, which cover every regular
polygon configuration, stay exact; other angles are high-precision reals
compared with the tolerance from :func:`planecenters.numeric.eps`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from typing import Iterable, Sequence

from . import numeric as num
from .errors import AmbiguousArcError, DegenerateRayError, EmptyInputError, NotCyclicError
from .numeric import CyclotomicReal, ctx, is_exact, to_real

HALF = Fraction(1, 2)


@dataclass(frozen=True, slots=True)
class Point:
    x: object
    y: object

    @classmethod
    def of(cls, x, y) -> "Point":
        """Build a point from ints, Fractions, or ``"p/q"``/decimal strings."""
        conv = lambda v: num.as_fraction(v) if isinstance(v, (int, str, float)) else v
        return cls(conv(x), conv(y))

    @property
    def exact(self) -> bool:
        return is_exact(self.x) and is_exact(self.y)

    def __add__(self, o: "Point") -> "Point":
        return Point(num.add(self.x, o.x), num.add(self.y, o.y))

    def __sub__(self, o: "Point") -> "Point":
        return Point(num.sub(self.x, o.x), num.sub(self.y, o.y))

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def scale(self, k) -> "Point":
        return Point(num.mul(self.x, k), num.mul(self.y, k))

    def dot(self, o: "Point"):
        return num.add(num.mul(self.x, o.x), num.mul(self.y, o.y))

    def cross(self, o: "Point"):
        return num.sub(num.mul(self.x, o.y), num.mul(self.y, o.x))

    def norm2(self):
        return self.dot(self)

    def perp(self) -> "Point":
        """Counterclockwise quarter-turn."""
        return Point(-self.y, self.x)

    def real(self) -> tuple:
        return to_real(self.x), to_real(self.y)

    def __iter__(self):
        yield self.x
        yield self.y


ORIGIN = Point(Fraction(0), Fraction(0))


def dist2(p: Point, q: Point):
    return (p - q).norm2()


def distance(p: Point, q: Point):
    return num.sqrt(dist2(p, q))


def points_close(p: Point, q: Point, scale=1) -> bool:
    """Equality for possibly constructed points (exact when both are exact)."""
    if p.exact and q.exact:
        return p == q
    d = dist2(p, q)
    return to_real(d) <= (num.eps() * to_real(scale)) ** 2


def centroid(points: Iterable[Point]) -> Point:
    """Arithmetic mean of a nonempty multiset of points."""
    pts = list(points)
    if not pts:
        raise EmptyInputError("centroid of an empty multiset")
    sx, sy = pts[0].x, pts[0].y
    for p in pts[1:]:
        sx, sy = num.add(sx, p.x), num.add(sy, p.y)
    n = len(pts)
    return Point(num.div(sx, n), num.div(sy, n))


def collinear(a: Point, b: Point, c: Point) -> bool:
    return num.sign((b - a).cross(c - a)) == 0


def all_collinear(points: Sequence[Point]) -> bool:
    distinct = list(dict.fromkeys(points))
    if len(distinct) <= 2:
        return True
    a, b = distinct[0], distinct[1]
    return all(num.sign((b - a).cross(p - a)) == 0 for p in distinct[2:])


# --- angles -----------------------------------------------------------------


def _norm_turns(t):
    if isinstance(t, (int, Fraction)):
        return Fraction(t) % 1
    t = to_real(t) % 1
    # a value that rounds to a full turn is the zero angle
    if t >= 1:
        t -= 1
    return t


class Angle:
    """An angle in turns, normalized to [0, 1).

    ``turns`` is a ``Fraction`` when the angle is a known rational number of
    turns, otherwise an ``mpf``.
    """

    __slots__ = ("turns",)

    def __init__(self, turns):
        self.turns = _norm_turns(turns)

    @property
    def exact(self) -> Fraction | None:
        return self.turns if isinstance(self.turns, Fraction) else None

    @property
    def value(self):
        return to_real(self.turns)

    def radians(self):
        return 2 * ctx.pi * self.value

    def __eq__(self, other):
        if not isinstance(other, Angle):
            return NotImplemented
        return turns_equal(self.turns, other.turns)

    def __hash__(self):
        # tolerance-based equality cannot hash consistently in general
        return hash(self.turns) if self.exact is not None else 0

    def __add__(self, other):
        return Angle(turn_add(self.turns, other.turns if isinstance(other, Angle) else other))

    def __sub__(self, other):
        return Angle(turn_sub(self.turns, other.turns if isinstance(other, Angle) else other))

    def __repr__(self):
        if self.exact is not None:
            return f"Angle({self.exact})"
        return f"Angle(~{float(self.turns):.12g})"


def turn_add(a, b):
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a + b
    return to_real(a) + to_real(b)


def turn_sub(a, b):
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a - b
    return to_real(a) - to_real(b)


def arc(a, b):
    """Counterclockwise arc length from ``a`` to ``b`` in turns, in [0, 1)."""
    return _norm_turns(turn_sub(b, a))


def turns_equal(a, b) -> bool:
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a == b
    d = arc(a, b)
    e = num.eps()
    return d <= e or d >= 1 - e


def length_cmp(a, b) -> int:
    """Compare two arc lengths (not wrapped)."""
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return (a > b) - (a < b)
    d = to_real(a) - to_real(b)
    if abs(d) <= num.eps():
        return 0
    return 1 if d > 0 else -1


def seq_cmp(s: Sequence, t: Sequence, cmp=length_cmp) -> int:
    """Lexicographic comparison of two equally long sequences."""
    for a, b in zip(s, t):
        c = cmp(a, b)
        if c:
            return c
    return (len(s) > len(t)) - (len(s) < len(t))


def ccw_arc_length(a: Angle, b: Angle) -> Angle:
    """Length of the counterclockwise arc from ``a`` to ``b``."""
    return Angle(arc(a.turns, b.turns))


def arc_midpoint(a: Angle, b: Angle, mode: str = "smallest") -> Angle:
    """Bisector of the ccw arc from ``a`` to ``b``, or of the shorter arc.

    Raises:
        AmbiguousArcError: ``mode="smallest"`` with antipodal endpoints.
    """
    return Angle(midpoint_turns(a.turns, b.turns, mode))


def midpoint_turns(a, b, mode: str = "smallest"):
    d = arc(a, b)
    if mode == "ccw_from_a":
        return _norm_turns(turn_add(a, _half(d)))
    if mode != "smallest":
        raise ValueError(f"unknown mode {mode!r}")
    c = length_cmp(d, HALF)
    if c == 0:
        raise AmbiguousArcError(f"antipodal endpoints {a}, {b}")
    if c < 0:
        return _norm_turns(turn_add(a, _half(d)))
    return _norm_turns(turn_add(b, _half(1 - d)))


def _half(x):
    return x / 2


def _half_plane(d: Point) -> int:
    s = num.sign(d.y)
    if s > 0 or (s == 0 and num.sign(d.x) > 0):
        return 0
    return 1


def compare_directions(u: Point, v: Point) -> int:
    """Exact order of the angles of two nonzero vectors in [0, 1) turns."""
    hu, hv = _half_plane(u), _half_plane(v)
    if hu != hv:
        return -1 if hu < hv else 1
    return -num.sign(u.cross(v))


def direction_key():
    return cmp_to_key(compare_directions)


def same_direction(u: Point, v: Point) -> bool:
    return num.sign(u.cross(v)) == 0 and num.sign(u.dot(v)) > 0


@lru_cache(maxsize=4096)
def _exact_turn_check(q: Fraction):
    return num.cos_turn(q), num.sin_turn(q)


def angle_of(origin: Point, v: Point) -> Angle:
    """Direction of the ray from ``origin`` through ``v``.

    Rational-turn directions are recognized exactly: multiples of 1/8 for any
    exact input, and multiples of 1/lcm(m, 8) for points in Q(zeta_m).

    Raises:
        DegenerateRayError: ``v == origin``.
    """
    d = v - origin
    if d.exact:
        sx, sy = num.sign(d.x), num.sign(d.y)
        if sx == 0 and sy == 0:
            raise DegenerateRayError("ray from a point to itself")
        if sy == 0:
            return Angle(Fraction(0) if sx > 0 else HALF)
        if sx == 0:
            return Angle(Fraction(1, 4) if sy > 0 else Fraction(3, 4))
        if abs(d.x) == abs(d.y):
            quad = {(1, 1): 1, (-1, 1): 3, (-1, -1): 5, (1, -1): 7}[(sx, sy)]
            return Angle(Fraction(quad, 8))
        value = ctx.atan2(to_real(d.y), to_real(d.x)) / (2 * ctx.pi)
        orders = [c.n for c in (d.x, d.y) if isinstance(c, CyclotomicReal)]
        if orders:
            den = math.lcm(8, *orders)
            q = Fraction(int(ctx.nint(value * den)), den) % 1
            gap = (to_real(q) - value) % 1
            if min(gap, 1 - gap) < ctx.mpf(10) ** -20:
                c, s = _exact_turn_check(q)
                if d.x * s == d.y * c and num.sign(d.x * c + d.y * s) > 0:
                    return Angle(q)
        return Angle(value)
    x, y = d.real()
    if abs(x) + abs(y) == 0:
        raise DegenerateRayError("ray from a point to itself")
    return Angle(ctx.atan2(y, x) / (2 * ctx.pi))


# --- circles ----------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Circle:
    center: Point
    radius2: object

    @property
    def radius(self):
        return num.sqrt(self.radius2)

    def point_at(self, angle: Angle) -> Point:
        """Cartesian point at ``angle``; exact for rational turns on rational radii."""
        r = self.radius
        if angle.exact is not None and is_exact(r) and self.center.exact:
            return Point(
                num.add(self.center.x, num.mul(r, num.cos_turn(angle.exact))),
                num.add(self.center.y, num.mul(r, num.sin_turn(angle.exact))),
            )
        rad = angle.radians()
        rr = to_real(r)
        cx, cy = self.center.real()
        return Point(cx + rr * ctx.cos(rad), cy + rr * ctx.sin(rad))

    def contains(self, p: Point) -> bool:
        d = dist2(p, self.center)
        if is_exact(d) and is_exact(self.radius2):
            return d == self.radius2
        return num.compare(d, self.radius2, scale=max(1, to_real(self.radius2))) == 0


UNIT_CIRCLE = Circle(ORIGIN, Fraction(1))


@dataclass(frozen=True, slots=True)
class CyclicPoint:
    """A point on a circle, addressed by its angle about the circle center.

    ``point`` keeps the exact Cartesian embedding when one is known.
    """

    circle: Circle
    theta: Angle
    point: Point | None = None

    def cartesian(self) -> Point:
        if self.point is not None:
            return self.point
        return self.circle.point_at(self.theta)


def circumcircle(points: Sequence[Point]) -> Circle:
    """Circle through all (distinct) points.

    One point gives a radius-0 circle, two points the circle on their
    diameter. The result is verified exactly.

    Raises:
        NotCyclicError: the points are collinear (n >= 3) or not concyclic.
    """
    pts = list(dict.fromkeys(points))
    if not pts:
        raise EmptyInputError("circumcircle of no points")
    if len(pts) == 1:
        return Circle(pts[0], Fraction(0))
    if len(pts) == 2:
        a, b = pts
        c = centroid([a, b])
        return Circle(c, dist2(a, c))
    a, b = pts[0], pts[1]
    third = next((p for p in pts[2:] if not collinear(a, b, p)), None)
    if third is None:
        raise NotCyclicError("collinear points have no circumcircle")
    c = _circumcenter(a, b, third)
    r2 = dist2(a, c)
    for p in pts:
        if num.compare(dist2(p, c), r2, scale=max(1, to_real(r2))) != 0:
            raise NotCyclicError(f"{p} is not on the circle through the first three points")
    return Circle(c, r2)


def _circumcenter(a: Point, b: Point, c: Point) -> Point:
    bx, by = num.sub(b.x, a.x), num.sub(b.y, a.y)
    cx, cy = num.sub(c.x, a.x), num.sub(c.y, a.y)
    d = num.mul(2, num.sub(num.mul(bx, cy), num.mul(by, cx)))
    b2 = num.add(num.mul(bx, bx), num.mul(by, by))
    c2 = num.add(num.mul(cx, cx), num.mul(cy, cy))
    ux = num.div(num.sub(num.mul(cy, b2), num.mul(by, c2)), d)
    uy = num.div(num.sub(num.mul(bx, c2), num.mul(cx, b2)), d)
    return Point(num.add(a.x, ux), num.add(a.y, uy))


def circle_adjacency(points: Sequence) -> list[tuple]:
    """Consecutive pairs in increasing angle, wrapping around.

    Accepts :class:`CyclicPoint` or :class:`Angle` items. Two points give a
    single pair.
    """
    items = list(points)
    if len(items) < 2:
        raise EmptyInputError("adjacency needs at least two points")
    key = lambda it: to_real((it.theta if isinstance(it, CyclicPoint) else it).turns)
    items.sort(key=key)
    if len(items) == 2:
        return [(items[0], items[1])]
    return [(items[i], items[(i + 1) % len(items)]) for i in range(len(items))]


# --- similarities -----------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Similarity:
    """``p -> M p + t`` with ``M`` a positive multiple of an orthogonal matrix.

    ``M = [[a, b], [c, d]]``.
    """

    a: object
    b: object
    c: object
    d: object
    tx: object = Fraction(0)
    ty: object = Fraction(0)

    def __post_init__(self):
        direct = num.sign(num.sub(self.a, self.d)) == 0 and num.sign(num.add(self.b, self.c)) == 0
        indirect = num.sign(num.add(self.a, self.d)) == 0 and num.sign(num.sub(self.b, self.c)) == 0
        if not (direct or indirect) or num.sign(num.add(num.mul(self.a, self.a), num.mul(self.c, self.c))) == 0:
            raise ValueError("linear part is not a nonzero multiple of an orthogonal matrix")

    @classmethod
    def identity(cls) -> "Similarity":
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    @classmethod
    def make(cls, scale=1, cos=1, sin=0, reflect: bool = False, translation=(0, 0)) -> "Similarity":
        """Rotation by (cos, sin), optionally after reflecting across the x-axis."""
        sc, ss = num.mul(scale, cos), num.mul(scale, sin)
        tx, ty = (num.as_fraction(v) if isinstance(v, (int, str)) else v for v in translation)
        if reflect:
            return cls(sc, ss, ss, -sc, tx, ty)
        return cls(sc, -ss, ss, sc, tx, ty)

    @classmethod
    def rotation_turns(cls, q, about: Point = ORIGIN) -> "Similarity":
        r = cls.make(cos=num.cos_turn(q), sin=num.sin_turn(q))
        return cls.translation(about).compose(r).compose(cls.translation(-about))

    @classmethod
    def translation(cls, t: Point) -> "Similarity":
        return cls(Fraction(1), Fraction(0), Fraction(0), Fraction(1), t.x, t.y)

    @property
    def orientation(self) -> int:
        det = num.sub(num.mul(self.a, self.d), num.mul(self.b, self.c))
        return num.sign(det)

    @property
    def scale2(self):
        return num.add(num.mul(self.a, self.a), num.mul(self.c, self.c))

    @property
    def scale(self):
        return num.sqrt(self.scale2)

    def linear(self, p: Point) -> Point:
        return Point(
            num.add(num.mul(self.a, p.x), num.mul(self.b, p.y)),
            num.add(num.mul(self.c, p.x), num.mul(self.d, p.y)),
        )

    def __call__(self, p: Point) -> Point:
        q = self.linear(p)
        return Point(num.add(q.x, self.tx), num.add(q.y, self.ty))

    def compose(self, other: "Similarity") -> "Similarity":
        """``self ∘ other``: apply ``other`` first."""
        m = lambda x, y: num.mul(x, y)
        a = num.add(m(self.a, other.a), m(self.b, other.c))
        b = num.add(m(self.a, other.b), m(self.b, other.d))
        c = num.add(m(self.c, other.a), m(self.d, other.c))
        d = num.add(m(self.c, other.b), m(self.d, other.d))
        t = self(Point(other.tx, other.ty))
        return Similarity(a, b, c, d, t.x, t.y)

    def inverse(self) -> "Similarity":
        det = num.sub(num.mul(self.a, self.d), num.mul(self.b, self.c))
        a, b = num.div(self.d, det), num.div(-self.b, det)
        c, d = num.div(-self.c, det), num.div(self.a, det)
        inv = Similarity(a, b, c, d)
        t = inv.linear(Point(self.tx, self.ty))
        return Similarity(a, b, c, d, -t.x, -t.y)

    def apply_circle(self, circle: Circle) -> Circle:
        return Circle(self(circle.center), num.mul(circle.radius2, self.scale2))


def apply_similarity(t: Similarity, p: Point) -> Point:
    return t(p)
