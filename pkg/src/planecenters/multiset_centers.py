"""Centers of point multisets: the centroid, the circumcenter, the center of
rotational asymmetry ``x_center_multiset`` and the center of axial
asymmetry ``y_center_multiset``, plus the affine solve that reaches any
fixed point of the symmetry group.

Both constructions are always run in full; they fall back to the centroid
by themselves on symmetric input (a rotationally symmetric ray pattern
makes the labeled cyclic center return its circle center, and a mirror
symmetry across the line through the centroid and ``x_center_multiset``
makes the two half-plane label bags equal).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import numeric as num
from .cyclic import CyclicConfiguration, b_center_labeled
from .errors import DomainError, EmptyInputError
from .geom import Circle, Point, centroid, circumcircle, dist2, points_close, same_direction
from .symmetry import Multiset, Polygon, classify, fixed_set, symmetry_group_multiset


def _points(s) -> list[Point]:
    if isinstance(s, Multiset):
        return list(s.points)
    if isinstance(s, Polygon):
        return list(s.vertices)
    pts = list(s)
    if not pts:
        raise EmptyInputError("empty multiset")
    return pts


def centroid_center(s) -> Point:
    return centroid(_points(s))


def circumcenter(s) -> Point:
    """Center of the circle through the distinct points of ``s``.

    Raises:
        NotCyclicError: the points are not concyclic.
    """
    return circumcircle(_points(s)).center


# --- rotational asymmetry -------------------------------------------------------


@dataclass(frozen=True)
class RadialProfile:
    """Circles about the centroid (``radii2`` decreasing, possibly ending in
    0) and rays from it; ``counts[i][j]`` is the number of points on ray
    ``i`` and circle ``j``. Points at the centroid lie on no ray."""

    center: Point
    radii2: tuple
    rays: tuple[Point, ...]
    counts: tuple[tuple[int, ...], ...]
    at_center: int

    @classmethod
    def of(cls, points: Sequence[Point]) -> "RadialProfile":
        c = centroid(points)
        d2 = [dist2(p, c) for p in points]
        radii = _distinct_decreasing(d2)
        rays: list[Point] = []
        counts: list[list[int]] = []
        at_center = 0
        for p, r in zip(points, d2):
            j = _index_of(radii, r)
            if num.sign(r) == 0:
                at_center += 1
                continue
            v = p - c
            for i, u in enumerate(rays):
                if same_direction(u, v):
                    break
            else:
                rays.append(v)
                counts.append([0] * len(radii))
                i = len(rays) - 1
            counts[i][j] += 1
        return cls(c, tuple(radii), tuple(rays), tuple(map(tuple, counts)), at_center)

    def ranks(self) -> list[int]:
        """Dense ranks (from 1) of the rays by their count sequences."""
        order = sorted(set(self.counts))
        return [order.index(c) + 1 for c in self.counts]

    def ray_points(self) -> list[Point]:
        """Intersection of each ray with the outermost circle, exact when
        the rescaling factor is rational."""
        r2 = self.radii2[0]
        out = []
        for v in self.rays:
            k = num.sqrt(num.div(r2, v.norm2()))
            out.append(self.center + Point(num.mul(k, v.x), num.mul(k, v.y)))
        return out


def _distinct_decreasing(values: list) -> list:
    out: list = []
    for v in sorted(values, key=num.to_real, reverse=True):
        if not out or num.compare(v, out[-1], scale=_scale(v)) != 0:
            out.append(v)
    return out


def _index_of(radii: list, r) -> int:
    for j, q in enumerate(radii):
        if num.compare(r, q, scale=_scale(q)) == 0:
            return j
    raise AssertionError("distance missing from its own circle list")


def _scale(v):
    return max(1, abs(num.to_real(v)))


def x_center_multiset(s) -> Point:
    """Center of rotational asymmetry: the centroid exactly for multisets
    with a nontrivial rotational symmetry (or a single repeated point),
    otherwise a point on the outermost circle about the centroid."""
    pts = _points(s)
    prof = RadialProfile.of(pts)
    if not prof.rays:
        return prof.center
    circle = Circle(prof.center, prof.radii2[0])
    config = CyclicConfiguration.from_points(prof.ray_points(), prof.ranks(), circle=circle)
    r = b_center_labeled(config)
    return r if isinstance(r, Point) else r.cartesian()


# --- axial asymmetry -------------------------------------------------------------


@dataclass(frozen=True)
class HalfPlaneLabels:
    """Label bags on the two sides of the line from ``origin`` along
    ``direction``; ``left`` is the side the direction turns toward
    counterclockwise. Points on the line carry no label."""

    origin: Point
    direction: Point
    left: Counter
    right: Counter

    def smaller_side(self) -> int | None:
        """+1 if the left bag is smaller for the bag order, -1 for the right
        one, None when both bags coincide."""
        diff = (self.left - self.right) + (self.right - self.left)
        if not diff:
            return None
        first = min(diff)
        return 1 if self.left[first] > self.right[first] else -1


def circle_indices(values: list) -> list[int]:
    """0-based index of each squared distance among the distinct values
    sorted in decreasing order (exact, or within tolerance for reals)."""
    radii = _distinct_decreasing(values)
    return [_index_of(radii, v) for v in values]


def half_plane_labels(points: Sequence[Point], c: Point, x: Point) -> HalfPlaneLabels:
    d = x - c
    ci = circle_indices([dist2(p, c) for p in points])
    xi = circle_indices([dist2(p, x) for p in points])
    left, right = Counter(), Counter()
    scale = max(1, num.to_real(d.norm2()))
    for p, i, j in zip(points, ci, xi):
        side = num.sign(d.cross(p - c), scale=scale * max(1, num.to_real(dist2(p, c))))
        if side > 0:
            left[(i + 1, j + 1)] += 1
        elif side < 0:
            right[(i + 1, j + 1)] += 1
    return HalfPlaneLabels(c, d, left, right)


def y_center_multiset(s, x: Point | None = None) -> Point:
    """Center of axial asymmetry: the centroid unless the multiset has a
    trivial symmetry group, otherwise a point off the line through the
    centroid and ``x_center_multiset``, at distance equal to the sum of
    the distances of the points to the centroid."""
    pts = _points(s)
    c = centroid(pts)
    x = x_center_multiset(pts) if x is None else x
    if points_close(c, x, scale=_scale(max((num.to_real(dist2(p, c)) for p in pts), default=1))):
        return c
    side = half_plane_labels(pts, c, x).smaller_side()
    if side is None:
        return c
    lam = Fraction(0)
    for p in pts:
        lam = num.add(lam, num.sqrt(dist2(p, c)))
    d = x - c
    unit = num.div(lam, num.sqrt(d.norm2()))
    n = d.perp() if side > 0 else -d.perp()
    return c + Point(num.mul(unit, n.x), num.mul(unit, n.y))


# --- fixed points and the affine family -----------------------------------------------


def is_center_value(s, x: Point) -> bool:
    """Whether ``x`` is fixed by every symmetry of the multiset."""
    return fixed_set(symmetry_group_multiset(_points(s))).contains(x)


def center_through(s, x: Point) -> tuple:
    """Affine weights ``(l1, l2, l3)`` summing to 1 with
    ``l1 * centroid + l2 * X + l3 * Y == x``.

    Raises:
        DomainError: ``x`` is not fixed by the symmetry group.
    """
    pts = _points(s)
    if not is_center_value(pts, x):
        raise DomainError(f"{x} is not fixed by the symmetry group")
    return affine_weights(centroid(pts), x_center_multiset(pts), None, x, classify(Multiset(pts)), pts)


def affine_weights(c: Point, xc: Point, yc: Point | None, target: Point, kind: str, pts=None) -> tuple:
    """Solve for the weights given the three base centers and the class."""
    if kind == "A":
        return (Fraction(1), Fraction(0), Fraction(0))
    d = xc - c
    t = target - c
    if kind == "B":
        l2 = num.div(t.dot(d), d.norm2())
        return (num.sub(1, l2), l2, Fraction(0))
    if yc is None:
        yc = y_center_multiset(pts, xc)
    e = yc - c
    det = d.cross(e)
    l2 = num.div(t.cross(e), det)
    l3 = num.div(d.cross(t), det)
    return (num.sub(num.sub(1, l2), l3), l2, l3)


def combine(weights: tuple, c: Point, xc: Point, yc: Point) -> Point:
    l1, l2, l3 = weights
    return Point(
        num.add(num.add(num.mul(l1, c.x), num.mul(l2, xc.x)), num.mul(l3, yc.x)),
        num.add(num.add(num.mul(l1, c.y), num.mul(l2, xc.y)), num.mul(l3, yc.y)),
    )


def induced_polygon_center(center: Callable) -> Callable:
    """Polygon center that evaluates ``center`` on the vertex multiset."""

    def on_polygon(p: Polygon) -> Point:
        if not isinstance(p, Polygon):
            raise TypeError("induced centers act on polygons")
        return center(list(p.vertices))

    on_polygon.__name__ = f"induced_{getattr(center, '__name__', 'center')}"
    return on_polygon
