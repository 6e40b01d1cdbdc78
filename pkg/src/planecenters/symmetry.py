"""Exact symmetry groups of multisets, labeled multisets and polygons.

Every isometry of a finite multiset fixes its centroid, so candidates are
linear maps about the centroid. Fixing one point ``p`` at maximal distance,
any symmetry sends it to some ``q`` at the same distance, and the rotation
or reflection taking ``p`` to ``q`` has rational entries (dot and cross
products over ``|p|^2``). Each candidate is then checked by exact multiset
equality, so no angle is ever extracted.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from . import numeric as num
from .geom import Point, Similarity, centroid, points_close

# --- objects ------------------------------------------------------------------


@dataclass(frozen=True)
class Multiset:
    points: tuple[Point, ...]

    def __init__(self, points):
        pts = tuple(points)
        if not pts:
            raise ValueError("a multiset needs at least one point")
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)

    def transform(self, t: Similarity) -> "Multiset":
        return Multiset(t(p) for p in self.points)

    def __eq__(self, other):
        if not isinstance(other, Multiset):
            return NotImplemented
        return multiset_equal(self.points, other.points)

    def __hash__(self):
        return hash(len(self.points))


@dataclass(frozen=True)
class LabeledMultiset:
    points: tuple[Point, ...]
    labels: tuple[int, ...]

    def __init__(self, points, labels):
        pts, labs = tuple(points), tuple(labels)
        if not pts:
            raise ValueError("a labeled multiset needs at least one point")
        if len(pts) != len(labs):
            raise ValueError("one label per point is required")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "labels", labs)

    def __len__(self):
        return len(self.points)

    def pairs(self):
        return list(zip(self.points, self.labels))

    def transform(self, t: Similarity) -> "LabeledMultiset":
        return LabeledMultiset((t(p) for p in self.points), self.labels)


@dataclass(frozen=True)
class Polygon:
    """Vertex cycle; two polygons are equal when their cycles differ by a
    rotation or reversal of the labelling."""

    vertices: tuple[Point, ...]

    def __init__(self, vertices):
        vs = tuple(vertices)
        if len(vs) < 3:
            raise ValueError("a polygon needs at least three vertices")
        object.__setattr__(self, "vertices", vs)

    def __len__(self):
        return len(self.vertices)

    @property
    def multiset(self) -> Multiset:
        return Multiset(self.vertices)

    def transform(self, t: Similarity) -> "Polygon":
        return Polygon(t(p) for p in self.vertices)

    def relabel(self, shift: int = 0, reverse: bool = False) -> "Polygon":
        vs = list(self.vertices)
        if reverse:
            vs = [vs[0]] + vs[:0:-1]
        return Polygon(vs[shift:] + vs[:shift])

    def __eq__(self, other):
        if not isinstance(other, Polygon):
            return NotImplemented
        return dihedral_equal(self.vertices, other.vertices)

    def __hash__(self):
        return hash(len(self.vertices))


def multiset_equal(a: Sequence, b: Sequence) -> bool:
    """Exact multiset equality of points (or hashable pairs)."""
    if len(a) != len(b):
        return False
    try:
        if _all_rational(a) and _all_rational(b):
            return Counter(a) == Counter(b)
    except TypeError:
        pass
    rest = list(b)
    for x in a:
        for i, y in enumerate(rest):
            if x == y:
                del rest[i]
                break
        else:
            return False
    return True


def _all_rational(items) -> bool:
    for it in items:
        p = it[0] if isinstance(it, tuple) else it
        if not (isinstance(p.x, (int, Fraction)) and isinstance(p.y, (int, Fraction))):
            return False
    return True


def dihedral_equal(s: Sequence, t: Sequence) -> bool:
    """True when ``t`` is a cyclic shift of ``s`` or of its reversal."""
    n = len(s)
    if n != len(t):
        return False
    s = list(s)
    rev = [s[0]] + s[:0:-1]
    for seq in (s, rev):
        for r in range(n):
            if all(seq[(r + i) % n] == t[i] for i in range(n)):
                return True
    return False


# --- groups -------------------------------------------------------------------


@dataclass(frozen=True)
class Line:
    point: Point
    direction: Point

    def contains(self, p: Point) -> bool:
        c = self.direction.cross(p - self.point)
        if num.is_exact(c):
            return c == 0
        scale = num.ctx.sqrt(num.to_real(self.direction.norm2()) * max(num.to_real((p - self.point).norm2()), 1))
        return num.sign(c, scale=scale) == 0

    def same_as(self, other: "Line") -> bool:
        return num.sign(self.direction.cross(other.direction)) == 0 and self.contains(other.point)


def canonical_direction(d: Point) -> Point:
    """Direction scaled to ``(1, s)`` or ``(0, 1)``; two parallel vectors map
    to the same canonical vector."""
    if num.sign(d.x) != 0:
        return Point(Fraction(1), num.div(d.y, d.x))
    return Point(Fraction(0), Fraction(1))


@dataclass(frozen=True)
class SymmetryGroup:
    """Finite stabilizer about ``center``.

    ``rotations`` holds the ``(cos, sin)`` pairs of the rotations (identity
    included); ``reflections`` the ``(a, b)`` pairs of the reflection
    matrices ``[[a, b], [b, -a]]``. For the multiset made of one repeated
    point ``continuous`` is set, and ``rotation_order`` is 0.
    """

    center: Point
    rotations: tuple = ()
    reflections: tuple = ()
    continuous: bool = False

    @property
    def rotation_order(self) -> int:
        return 0 if self.continuous else len(self.rotations)

    @property
    def reflection_axes(self) -> tuple[Line, ...]:
        return tuple(Line(self.center, _axis_direction(a, b)) for a, b in self.reflections)

    @property
    def trivial(self) -> bool:
        return not self.continuous and len(self.rotations) == 1 and not self.reflections

    def rotation_elements(self) -> list[Similarity]:
        about = lambda m: _about(self.center, m)
        return [about(Similarity.make(cos=co, sin=si)) for co, si in self.rotations]

    def reflection_elements(self) -> list[Similarity]:
        return [_about(self.center, Similarity(a, b, b, -a)) for a, b in self.reflections]

    def elements(self) -> list[Similarity]:
        """Group elements as plane isometries (just the identity for the
        continuous group)."""
        if self.continuous:
            return [Similarity.identity()]
        return self.rotation_elements() + self.reflection_elements()

    def signature(self):
        """Hashable summary used to compare groups computed independently."""
        axes = sorted(
            ((d.x, d.y) for d in (canonical_direction(ax.direction) for ax in self.reflection_axes)),
            key=lambda t: (num.to_real(t[0]), num.to_real(t[1])),
        )
        return (self.center, self.continuous, self.rotation_order, tuple(axes))

    def conjugate(self, t: Similarity) -> "SymmetryGroup":
        """The group ``t g t^-1`` of the image ``t(object)``."""
        inv = t.inverse()
        conj = lambda g: t.compose(g).compose(inv)
        rots = tuple((h.a, h.c) for h in map(conj, self.rotation_elements()))
        refl = tuple((h.a, h.b) for h in map(conj, self.reflection_elements()))
        return SymmetryGroup(t(self.center), rots, refl, self.continuous)


def _about(c: Point, m: Similarity) -> Similarity:
    return Similarity.translation(c).compose(m).compose(Similarity.translation(-c))


def _axis_direction(a, b) -> Point:
    u = Point(num.add(1, a), b)
    if num.sign(u.x) == 0 and num.sign(u.y) == 0:
        return Point(Fraction(0), Fraction(1))
    return u


def _rot(co, si, v: Point) -> Point:
    return Point(num.sub(num.mul(co, v.x), num.mul(si, v.y)), num.add(num.mul(si, v.x), num.mul(co, v.y)))


def _refl(a, b, v: Point) -> Point:
    return Point(num.add(num.mul(a, v.x), num.mul(b, v.y)), num.sub(num.mul(b, v.x), num.mul(a, v.y)))


def _candidates(rel: list[Point]):
    """Rational rotation and reflection candidates sending a farthest vector
    onto every vector of the same length."""
    norms = [v.norm2() for v in rel]
    far = max(norms)
    p = rel[norms.index(far)]
    targets = list(dict.fromkeys(v for v, n in zip(rel, norms) if n == far))
    rots, refls = [], []
    for q in targets:
        co, si = num.div(p.dot(q), far), num.div(p.cross(q), far)
        rots.append((co, si))
        a = num.div(num.sub(num.mul(p.x, q.x), num.mul(p.y, q.y)), far)
        b = num.div(num.add(num.mul(p.y, q.x), num.mul(p.x, q.y)), far)
        refls.append((a, b))
    return rots, refls


def _check_exact(points: Sequence[Point]) -> None:
    for p in points:
        if not p.exact:
            raise TypeError("symmetry groups are computed on exact coordinates only")


def _group_from_filter(points: Sequence[Point], keep) -> SymmetryGroup:
    """Shared driver: ``keep(rel, m)`` decides whether the candidate linear
    map ``m`` (acting on vectors from the centroid) is a symmetry."""
    _check_exact(points)
    if all(p == points[0] for p in points):
        return SymmetryGroup(points[0], continuous=True)
    c = centroid(points)
    rel = [p - c for p in points]
    rots, refls = _candidates(rel)
    good_r = tuple(r for r in rots if keep(rel, lambda v, r=r: _rot(r[0], r[1], v)))
    good_f = tuple(f for f in refls if keep(rel, lambda v, f=f: _refl(f[0], f[1], v)))
    return SymmetryGroup(c, good_r, good_f)


def _maps_onto(rel: list[Point], m) -> bool:
    """Whether ``m`` maps the multiset ``rel`` onto itself; on rational
    input it stops at the first image that is missing."""
    if not _all_rational(rel):
        return multiset_equal([m(v) for v in rel], rel)
    left = Counter(rel)
    for v in rel:
        w = m(v)
        if left[w] <= 0:
            return False
        left[w] -= 1
    return True


def symmetry_group_multiset(s: Multiset | Sequence[Point]) -> SymmetryGroup:
    """Exact group of isometries mapping the multiset onto itself."""
    pts = list(s.points if isinstance(s, Multiset) else s)

    def keep(rel, m):
        return multiset_equal([m(v) for v in rel], rel)

    return _group_from_filter(pts, keep)


def symmetry_group_labeled(s: LabeledMultiset) -> SymmetryGroup:
    """Isometries that map every labeled point to a point with the same label."""
    pts, labels = list(s.points), list(s.labels)

    def keep(rel, m):
        return multiset_equal([(m(v), l) for v, l in zip(rel, labels)], list(zip(rel, labels)))

    return _group_from_filter(pts, keep)


def symmetry_group_polygon(p: Polygon) -> SymmetryGroup:
    """Symmetries of the vertex multiset that also preserve adjacency."""
    pts = list(p.vertices)

    def keep(rel, m):
        # a polygon symmetry is first a symmetry of the vertex multiset
        return dihedral_equal(rel, [m(v) for v in rel])

    return _group_from_filter(pts, keep)


def symmetry_group(obj) -> SymmetryGroup:
    if isinstance(obj, Polygon):
        return symmetry_group_polygon(obj)
    if isinstance(obj, LabeledMultiset):
        return symmetry_group_labeled(obj)
    return symmetry_group_multiset(obj)


# --- fixed sets and classes ---------------------------------------------------


@dataclass(frozen=True)
class Plane:
    def contains(self, p: Point) -> bool:
        return True


@dataclass(frozen=True)
class LineSet:
    line: Line

    @property
    def point(self) -> Point:
        return self.line.point

    @property
    def direction(self) -> Point:
        return self.line.direction

    def contains(self, p: Point) -> bool:
        return self.line.contains(p)


@dataclass(frozen=True)
class SinglePoint:
    point: Point

    def contains(self, p: Point) -> bool:
        return points_close(self.point, p, scale=1)


FixedSet = Union[Plane, LineSet, SinglePoint]


def fixed_set(g: SymmetryGroup) -> FixedSet:
    """Points fixed by every element of ``g``."""
    if g.continuous or g.rotation_order >= 2:
        return SinglePoint(g.center)
    if g.reflections:
        return LineSet(g.reflection_axes[0])
    return Plane()


def classify(obj) -> str:
    """'A' (one fixed point), 'B' (a line of fixed points) or 'C' (the plane)."""
    g = obj if isinstance(obj, SymmetryGroup) else symmetry_group(obj)
    fs = fixed_set(g)
    if isinstance(fs, SinglePoint):
        return "A"
    if isinstance(fs, LineSet):
        return "B"
    return "C"


def is_rotationally_symmetric(obj, about: Point | None = None) -> tuple[bool, int]:
    """Whether a nontrivial rotation (about ``about`` if given) preserves
    ``obj``, with the maximal order (0 for the continuous case).

    Cyclic configurations are tested about their circle center.
    """
    from .cyclic import CyclicConfiguration, rotation_order

    if isinstance(obj, CyclicConfiguration):
        if about is not None and not points_close(about, obj.circle.center):
            return False, 1
        k = rotation_order(obj)
        return k >= 2, k
    g = symmetry_group(obj)
    if about is not None and not points_close(about, g.center):
        return False, 1
    if g.continuous:
        return True, 0
    k = g.rotation_order
    return k >= 2, k
