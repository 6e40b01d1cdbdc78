"""Centers of cyclic point sets: the regularizing map ``phi``, the
asymmetric-set center ``a_center``, ``b_center`` and its labeled variant.

All the combinatorics runs on sorted lists of angles in turns (``Fraction``
when exact, ``mpf`` otherwise). The public functions wrap those lists in a
:class:`CyclicConfiguration` and map resulting angles back to points,
reusing the exact Cartesian embedding of an input point whenever the
result coincides with it or differs from it by a rational turn.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from . import numeric as num
from .errors import AmbiguousArcError, ContractViolation, EmptyInputError, GeometryError, PreconditionError
from .geom import (
    UNIT_CIRCLE,
    Angle,
    Circle,
    CyclicPoint,
    Point,
    Similarity,
    angle_of,
    arc,
    circle_adjacency,
    circumcircle,
    length_cmp,
    midpoint_turns,
    seq_cmp,
    turn_add,
    turns_equal,
)

log = logging.getLogger(__name__)

__all__ = [
    "CyclicConfiguration",
    "OrbitPartition",
    "rotation_order",
    "phi",
    "a_center",
    "orbit_partition",
    "b_center",
    "b_center_labeled",
    "circle_adjacency",
]


# --- configurations -----------------------------------------------------------


@dataclass(frozen=True)
class CyclicConfiguration:
    """Distinct points on ``circle``, optionally labeled."""

    circle: Circle
    points: tuple[CyclicPoint, ...]
    labels: tuple | None = None

    def __post_init__(self):
        if self.labels is not None and len(self.labels) != len(self.points):
            raise ValueError("one label per point is required")
        ts = [p.theta.turns for p in self.points]
        order = sorted(range(len(ts)), key=lambda i: num.to_real(ts[i]))
        for a, b in zip(order, order[1:] + order[:1]):
            if a != b and turns_equal(ts[a], ts[b]):
                raise GeometryError("cyclic configurations are sets: repeated angle")

    @classmethod
    def from_points(cls, points: Sequence[Point], labels=None, circle: Circle | None = None):
        """Configuration of Cartesian points on their circumcircle (or on
        ``circle`` when given, which a single point requires)."""
        pts = list(points)
        if not pts:
            raise EmptyInputError("empty cyclic configuration")
        if circle is None:
            if len(pts) == 1:
                raise GeometryError("a single point needs an explicit circle")
            circle = circumcircle(pts)
        cps = tuple(CyclicPoint(circle, angle_of(circle.center, p), p) for p in pts)
        return cls(circle, cps, None if labels is None else tuple(labels))

    @classmethod
    def from_turns(cls, turns, labels=None, circle: Circle = UNIT_CIRCLE):
        ts = [Angle(_as_turn(t)) for t in turns]
        if not ts:
            raise EmptyInputError("empty cyclic configuration")
        cps = tuple(CyclicPoint(circle, a) for a in ts)
        return cls(circle, cps, None if labels is None else tuple(labels))

    def __len__(self):
        return len(self.points)

    @property
    def center(self) -> Point:
        return self.circle.center

    @property
    def turns(self) -> list:
        return [p.theta.turns for p in self.points]

    def transform(self, t: Similarity) -> "CyclicConfiguration":
        circle = t.apply_circle(self.circle)
        pts = [t(p.cartesian()) for p in self.points]
        cps = tuple(CyclicPoint(circle, angle_of(circle.center, p), p) for p in pts)
        return CyclicConfiguration(circle, cps, self.labels)

    def subset(self, turns) -> "CyclicConfiguration":
        return CyclicConfiguration(self.circle, tuple(self.at(t) for t in turns))

    def at(self, t) -> CyclicPoint:
        """Circle point at angle ``t``, reusing an input point when possible."""
        for p in self.points:
            if turns_equal(p.theta.turns, t):
                return p
        a = Angle(t)
        if a.exact is not None:
            for p in self.points:
                q = p.theta.exact
                if q is not None and p.point is not None and p.point.exact and self.center.exact:
                    d = a.exact - q
                    v = p.point - self.center
                    c, s = num.cos_turn(d), num.sin_turn(d)
                    return CyclicPoint(
                        self.circle, a,
                        Point(self.center.x + c * v.x - s * v.y, self.center.y + s * v.x + c * v.y),
                    )
        return CyclicPoint(self.circle, a)


@dataclass(frozen=True)
class OrbitPartition:
    """``classes[k]`` holds the points whose whole orbit under the rotations
    by multiples of ``1/k`` turn stays in the configuration; ``infinity``
    holds the points in no class."""

    classes: dict
    infinity: tuple


def _as_turn(t):
    if isinstance(t, Angle):
        return t.turns
    if isinstance(t, (int, Fraction)):
        return Fraction(t)
    if isinstance(t, str):
        return num.as_fraction(t)
    return num.to_real(t)


# --- angle arithmetic ---------------------------------------------------------
#
# The algorithms below only need: arcs between angles, comparison of arc
# lengths, midpoints, and shifting by j/k turn. Exact input is rescaled to
# integers modulo m = (common denominator) * 2**(n + 3), which keeps every
# midpoint the constructions can produce integral; other input uses the
# tolerant Fraction/mpf helpers.


class _IntTurns:
    def __init__(self, m: int):
        self.m = self.full = m

    def sort(self, vs):
        return sorted(vs)

    def arc(self, a, b):
        return (b - a) % self.m

    def cmp(self, a, b) -> int:
        return (a > b) - (a < b)

    def eq(self, a, b) -> bool:
        return a == b

    def mid_ccw(self, a, b):
        d = (b - a) % self.m
        if d % 2:
            raise ContractViolation("cyclic arithmetic", "midpoint left the working grid")
        return (a + d // 2) % self.m

    def mid_small(self, a, b):
        d = (b - a) % self.m
        if 2 * d == self.m:
            raise AmbiguousArcError(f"antipodal endpoints {a}/{self.m}, {b}/{self.m}")
        return self.mid_ccw(a, b) if 2 * d < self.m else self.mid_ccw(b, a)

    def shift(self, v, j: int, k: int):
        if self.m % k:
            return None
        return (v + j * (self.m // k)) % self.m

    def lookup(self, vs):
        present = set(vs)
        return lambda v: v is not None and v in present

    def back(self, v):
        return Fraction(v, self.m)


class _RealTurns:
    full = Fraction(1)

    def sort(self, vs):
        return _sort(vs)

    def arc(self, a, b):
        return arc(a, b)

    def cmp(self, a, b) -> int:
        return length_cmp(a, b)

    def eq(self, a, b) -> bool:
        return turns_equal(a, b)

    def mid_ccw(self, a, b):
        return midpoint_turns(a, b, "ccw_from_a")

    def mid_small(self, a, b):
        return midpoint_turns(a, b, "smallest")

    def shift(self, v, j: int, k: int):
        return turn_add(v, Fraction(j, k))

    def lookup(self, vs):
        if all(isinstance(v, Fraction) for v in vs):
            present = set(vs)
            return lambda v: isinstance(v, Fraction) and v % 1 in present
        # float bisection narrows the candidates; turns_equal decides
        keyed = sorted((float(num.to_real(s)) % 1.0, i) for i, s in enumerate(vs))
        keys = [k for k, _ in keyed]

        def has(v):
            x = float(num.to_real(v)) % 1.0
            for y in (x, x - 1.0, x + 1.0):
                lo = bisect_left(keys, y - 1e-6)
                hi = bisect_right(keys, y + 1e-6)
                if any(turns_equal(vs[keyed[j][1]], v) for j in range(lo, hi)):
                    return True
            return False

        return has

    def back(self, v):
        return v


def _context(ts: list):
    """Arithmetic suited to ``ts`` and the values expressed in it."""
    d = 1
    for t in ts:
        if not isinstance(t, Fraction):
            return _RealTurns(), list(ts)
        d = lcm(d, t.denominator)
    m = d << (len(ts) + 3)
    return _IntTurns(m), [t.numerator * (m // t.denominator) % m for t in ts]


def _sort(ts) -> list:
    ts = list(ts)
    if all(isinstance(t, Fraction) for t in ts):
        return sorted(ts)
    return sorted(ts, key=num.to_real)


# --- the constructions, on sorted angle lists ---------------------------------


def _gaps(T, vs: list) -> list:
    """``gaps[i]`` is the counterclockwise arc from ``vs[i]`` to ``vs[i+1]``."""
    n = len(vs)
    if n == 1:
        return [T.full]
    return [T.arc(vs[i], vs[(i + 1) % n]) for i in range(n)]


def _order(T, vs: list) -> int:
    """Maximal k such that rotating by ``1/k`` turn preserves the set."""
    n = len(vs)
    if n < 2:
        return 1
    g = _gaps(T, vs)
    for k in range(n, 1, -1):
        p = n // k
        if n % k == 0 and all(T.cmp(g[i], g[(i + p) % n]) == 0 for i in range(n)):
            return k
    return 1


def _partition(T, vs: list) -> tuple[dict, list]:
    n = len(vs)
    has = T.lookup(vs)
    classes, covered = {}, set()
    for k in range(2, n + 1):
        members = [i for i, v in enumerate(vs) if all(has(T.shift(v, j, k)) for j in range(1, k))]
        covered.update(members)
        classes[k] = [vs[i] for i in members]
    return classes, [v for i, v in enumerate(vs) if i not in covered]


def _phi(T, vs: list, k: int | None = None) -> list:
    vs = T.sort(vs)
    n = len(vs)
    order = _order(T, vs)
    if order < 2:
        raise PreconditionError("phi needs a rotationally symmetric configuration")
    if k is not None and k != order:
        raise PreconditionError(f"phi: requested order {k} but the maximal order is {order}")
    k = order
    if n == k:
        return vs
    g = _gaps(T, vs)
    fwd = [g[i:] + g[:i] for i in range(n)]
    bwd = [[g[(i - 1 - j) % n] for j in range(n)] for i in range(n)]
    q_plus = _lex_minimal(T, fwd)
    q_minus = _lex_minimal(T, bwd)
    if len(q_plus) != k or len(q_minus) != k:
        raise ContractViolation("phi step 4/7", f"expected {k} minimal gap sequences, got {len(q_plus)} and {len(q_minus)}")
    if set(q_plus) & set(q_minus):
        raise ContractViolation("phi step 8", "the two minimal classes intersect")
    union = sorted(set(q_plus) | set(q_minus))
    out = []
    for pos, i in enumerate(union):
        if i not in q_plus:
            continue
        j = union[(pos + 1) % len(union)]
        if j not in q_minus:
            raise ContractViolation("phi step 8", "a positive arc from the first class does not end in the second")
        out.append(T.mid_ccw(vs[i], vs[j]))
    return T.sort(out)


def _lex_minimal(T, seqs: list) -> list[int]:
    best = [0]
    for i in range(1, len(seqs)):
        c = seq_cmp(seqs[i], seqs[best[0]], T.cmp)
        if c < 0:
            best = [i]
        elif c == 0:
            best.append(i)
    return best


def _a_center(T, vs: list):
    vs = T.sort(vs)
    level = 0
    while True:
        if not vs:
            raise ContractViolation("a_center", "all points were removed")
        _, rest = _partition(T, vs)
        log.debug("a_center level %d: %d points, %d in symmetric orbits", level, len(vs), len(vs) - len(rest))
        if len(rest) != len(vs):
            if level:
                # the midpoint replacement should never create one
                raise ContractViolation(f"a_center level {level}", "a rotationally symmetric subset appeared")
            raise PreconditionError("a_center level 0: the set contains a rotationally symmetric subset")
        n = len(vs)
        if n == 1:
            return vs[0]
        if n == 2:
            return T.mid_small(vs[0], vs[1])
        g = _gaps(T, vs)
        big = g[0]
        for x in g[1:]:
            if T.cmp(x, big) > 0:
                big = x
        idx = [i for i in range(n) if T.cmp(g[i], big) == 0]
        touched = set(idx) | {(i + 1) % n for i in idx}
        if len(touched) == n:
            vs = T.sort(T.mid_ccw(vs[i], vs[(i + 1) % n]) for i in idx)
        else:
            vs = [v for i, v in enumerate(vs) if i not in touched]
        level += 1


def _closest_pair_center(T, q: list, where: str):
    """Final steps shared by the unlabeled and labeled constructions, once
    two regular polygons have been merged into ``q``."""
    q = T.sort(_dedupe(T, q))
    n = len(q)
    g = _gaps(T, q)
    small = g[0]
    for x in g[1:]:
        if T.cmp(x, small) < 0:
            small = x
    mids = [T.mid_ccw(q[i], q[(i + 1) % n]) for i in range(n) if T.cmp(g[i], small) == 0]
    if len(mids) == 1:
        return mids[0]
    if len(mids) == 2:
        try:
            return T.mid_small(mids[0], mids[1])
        except AmbiguousArcError:
            raise ContractViolation(where + " step 10", "the two midpoints are antipodal") from None
    raise ContractViolation(where + " step 7", f"{len(mids)} adjacent pairs reach the minimal angle")


def _dedupe(T, vs: list) -> list:
    out = []
    for v in vs:
        if not any(T.eq(v, w) for w in out):
            out.append(v)
    return out


def _coprime_pair(orders: dict, where: str) -> tuple:
    """Lexicographically largest ``(i, j)`` with ``i > j`` among keys whose
    orders are coprime."""
    keys = sorted(orders)
    best = None
    for a in keys:
        for b in keys:
            if b < a and gcd(orders[a], orders[b]) == 1 and (best is None or (a, b) > best):
                best = (a, b)
    if best is None:
        raise ContractViolation(where + " step 5", "no pair with coprime orders")
    return best


def _b_center(T, vs: list):
    """``None`` stands for the circle center."""
    vs = T.sort(vs)
    if not vs:
        raise EmptyInputError("b_center of no points")
    if _order(T, vs) >= 2:
        return None
    classes, rest = _partition(T, vs)
    if rest:
        return _a_center(T, rest)
    # only classes whose maximal order is their own index: a class Q_i of
    # higher order would be regularized into a polygon with more than i sides
    usable = {k: k for k, c in classes.items() if c and _order(T, T.sort(c)) == k}
    i, j = _coprime_pair(usable, "b_center")
    return _closest_pair_center(T, _phi(T, classes[i]) + _phi(T, classes[j]), "b_center")


def _b_center_labeled(T, vs: list, labels: list):
    if not vs:
        raise EmptyInputError("b_center_labeled of no points")
    kinds = sorted(set(labels))
    groups = [T.sort(v for v, l in zip(vs, labels) if l == lab) for lab in kinds]
    orders = [_order(T, gr) for gr in groups]
    common = 0
    for d in orders:
        common = gcd(common, d)
    if common >= 2:
        return None
    if len(kinds) == 1:
        return _b_center(T, vs)
    asym = [i for i, d in enumerate(orders) if d < 2]
    if asym:
        return _b_center(T, groups[max(asym)])
    i, j = _coprime_pair(dict(enumerate(orders)), "b_center_labeled")
    return _closest_pair_center(T, _phi(T, groups[i]) + _phi(T, groups[j]), "b_center_labeled")


def _label_order(T, vs: list, labels) -> int:
    common = 0
    for lab in set(labels):
        common = gcd(common, _order(T, T.sort(v for v, l in zip(vs, labels) if l == lab)))
    return common


# --- public API ---------------------------------------------------------------


def _wrap(config):
    if isinstance(config, CyclicConfiguration):
        return config
    return CyclicConfiguration.from_turns(config)


def rotation_order(config) -> int:
    """Maximal order of a rotation about the circle center preserving the
    configuration (and its labels, if any)."""
    config = _wrap(config)
    T, vs = _context(config.turns)
    if config.labels is None:
        return _order(T, T.sort(vs))
    return _label_order(T, vs, config.labels)


def phi(config, k: int | None = None) -> CyclicConfiguration:
    """Regular polygon on the same circle determined by a configuration
    whose maximal rotational order is ``k`` (antipodal pair for ``k = 2``).

    Raises:
        PreconditionError: the configuration is not rotationally symmetric,
            or ``k`` is not its maximal order.
    """
    config = _wrap(config)
    T, vs = _context(config.turns)
    return config.subset(T.back(v) for v in _phi(T, vs, k))


def a_center(config) -> CyclicPoint:
    """Center of a configuration with no rotationally symmetric subset.

    Raises:
        PreconditionError: a rotationally symmetric subset exists at some
            level of the recursion (the message names the level).
    """
    config = _wrap(config)
    T, vs = _context(config.turns)
    return config.at(T.back(_a_center(T, vs)))


def orbit_partition(config) -> OrbitPartition:
    config = _wrap(config)
    T, vs = _context(config.turns)
    classes, rest = _partition(T, T.sort(vs))
    pt = lambda v: config.at(T.back(v))
    return OrbitPartition({k: tuple(map(pt, c)) for k, c in classes.items()}, tuple(map(pt, rest)))


def b_center(config) -> CyclicPoint | Point:
    """A point of the circle, or the circle center exactly when the
    configuration is rotationally symmetric."""
    config = _wrap(config)
    T, vs = _context(config.turns)
    r = _b_center(T, vs)
    return config.center if r is None else config.at(T.back(r))


def b_center_labeled(config, labels=None) -> CyclicPoint | Point:
    """Labeled variant: the circle center exactly when a label-preserving
    rotation exists. Labels must be mutually comparable."""
    config = _wrap(config)
    if labels is None:
        labels = config.labels if config.labels is not None else [0] * len(config)
    T, vs = _context(config.turns)
    r = _b_center_labeled(T, vs, list(labels))
    return config.center if r is None else config.at(T.back(r))
