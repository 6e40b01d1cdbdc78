"""Polygon centers of rotational and axial asymmetry.

Both centers reduce to the multiset ones unless the polygon has fewer
symmetries than its vertex multiset; only then is the adjacency read, by
coding the two closed chains from well-chosen start vertices and picking
the start with the lexicographically smallest code.

Angles inside chain codes are kept as exact vectors ``(u.v, u x v)``
(the second vector expressed in the frame of the first), so comparing two
angles never needs a trigonometric function.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Sequence

from . import numeric as num
from .errors import ContractViolation, DomainError
from .geom import Angle, Point, all_collinear, angle_of, centroid, compare_directions, dist2, points_close
from .multiset_centers import affine_weights, circle_indices, x_center_multiset, y_center_multiset
from .symmetry import Multiset, Polygon, classify, fixed_set, symmetry_group_multiset, symmetry_group_polygon

_ZERO_TURN = Point(Fraction(1), Fraction(0))


def _vertices(p) -> list[Point]:
    return list(p.vertices if isinstance(p, Polygon) else p)


def _chain(vs: Sequence[Point], start: int, step: int) -> list[Point]:
    """Closed chain of ``n + 1`` vertices from ``vs[start]``."""
    n = len(vs)
    return [vs[(start + step * j) % n] for j in range(n + 1)]


@lru_cache(maxsize=512)
def _groups(vs: tuple) -> tuple:
    """(polygon group, vertex multiset group), shared by both centers."""
    return symmetry_group_polygon(Polygon(vs)), symmetry_group_multiset(vs)


def _is_rotational(group) -> bool:
    return group.continuous or group.rotation_order >= 2


# --- chain orientation and codes -------------------------------------------------


@dataclass(frozen=True)
class ChainPair:
    """The two chains from a start vertex. When the orientation test cannot
    tell them apart (repeated vertices, or a single ray besides the start
    ray) ``ambiguous`` is set and both chains play both roles."""

    positive: tuple[Point, ...]
    negative: tuple[Point, ...]
    ambiguous: bool = False


def _turn_vector(u: Point, v: Point, sense: int) -> Point:
    """Vector whose direction is the angle from ``u`` to ``v`` measured in
    the given sense (+1 counterclockwise)."""
    return Point(u.dot(v), u.cross(v) if sense > 0 else -u.cross(v))


def _neighbour_rays(c: Point, w: Point, pts: Sequence[Point]) -> tuple[Point, Point]:
    """Farthest points on the first rays met turning from ray ``c -> w``
    counterclockwise and clockwise (points on that ray skipped)."""
    u = w - c
    best = {1: None, -1: None}
    for sense in (1, -1):
        for p in pts:
            v = p - c
            if num.sign(v.x) == 0 and num.sign(v.y) == 0:
                continue
            t = _turn_vector(u, v, sense)
            if num.sign(t.y) == 0 and num.sign(t.x) > 0:
                continue
            cur = best[sense]
            if cur is None:
                best[sense] = (t, p)
                continue
            cmp = compare_directions(t, cur[0])
            if cmp < 0 or (cmp == 0 and num.compare(dist2(p, c), dist2(cur[1], c)) > 0):
                best[sense] = (t, p)
    return best[1][1], best[-1][1]


def chain_orientation(p, start: int, center: Point | None = None) -> ChainPair:
    """Split the two closed chains from vertex ``start`` into the positive
    one (meeting the counterclockwise neighbour ray's farthest point first)
    and the negative one. Requires a non-collinear vertex set."""
    vs = _vertices(p)
    c = centroid(vs) if center is None else center
    v_plus, v_minus = _neighbour_rays(c, vs[start], vs)
    fwd, bwd = _chain(vs, start, 1), _chain(vs, start, -1)

    def first(chain, target):
        return next(i for i, q in enumerate(chain) if q == target)

    def leads(chain):
        a, b = first(chain, v_plus), first(chain, v_minus)
        return (a < b) - (a > b)

    lf, lb = leads(fwd), leads(bwd)
    if lf > 0 and lb < 0:
        return ChainPair(tuple(fwd), tuple(bwd))
    if lf < 0 and lb > 0:
        return ChainPair(tuple(bwd), tuple(fwd))
    return ChainPair(tuple(fwd), tuple(bwd), ambiguous=True)


@dataclass(frozen=True)
class ChainTrace:
    """Code of one closed chain: entry ``j`` describes ``chain[j + 1]``."""

    start: Point
    chain: tuple[Point, ...]
    code: tuple


def rotation_code(chain: Sequence[Point], c: Point, rings: dict, sense: int) -> tuple:
    """Pairs ``(ring, angle vector)`` for chain positions 2..n+1; the angle
    is measured in ``sense`` from the last predecessor that is not ``c``."""
    out = []
    last = chain[0] - c
    for q in chain[1:]:
        v = q - c
        if num.sign(v.x) == 0 and num.sign(v.y) == 0:
            out.append((rings[q], _ZERO_TURN))
            continue
        out.append((rings[q], _turn_vector(last, v, sense)))
        last = v
    return tuple(out)


def _entry_cmp(a, b) -> int:
    if a[0] != b[0]:
        return -1 if a[0] < b[0] else 1
    return compare_directions(a[1], b[1])


def code_cmp(s: Sequence, t: Sequence, entry=_entry_cmp) -> int:
    for a, b in zip(s, t):
        c = entry(a, b)
        if c:
            return c
    return (len(s) > len(t)) - (len(s) < len(t))


def code_turns(code: Sequence) -> list[tuple]:
    """``(ring, Angle)`` pairs for display."""
    return [(ring, Angle(0) if t == _ZERO_TURN else angle_of(Point(Fraction(0), Fraction(0)), t)) for ring, t in code]


def format_chain_code(code: Sequence) -> str:
    """LaTeX rendering, e.g. ``((1,2\\frac{2\\pi}{5}),(1,4\\frac{2\\pi}{5}))``."""
    parts = []
    for ring, a in code_turns(code):
        q = a.exact
        if q is None:
            ang = f"{float(a.radians()):.12g}"
        elif q == 0:
            ang = "0"
        else:
            coef = "" if q.numerator == 1 else str(q.numerator)
            ang = f"{coef}\\frac{{2\\pi}}{{{q.denominator}}}"
        parts.append(f"({ring},{ang})")
    return "(" + ",".join(parts) + ")"


def _rings(vs: Sequence[Point], c: Point) -> dict:
    idx = circle_indices([dist2(v, c) for v in vs])
    return {v: i + 1 for v, i in zip(vs, idx)}


def _pick_minimal(cands: list, cmp, where: str):
    """Start point of the minimal code; a tie between different points
    breaks the construction."""
    best = [cands[0]]
    for cand in cands[1:]:
        r = cmp(cand[1], best[0][1])
        if r < 0:
            best = [cand]
        elif r == 0:
            best.append(cand)
    first = best[0][0]
    if any(not points_close(b[0], first) for b in best):
        raise ContractViolation(where, "different start vertices share the minimal code")
    return first


def _arc_midpoint(c: Point, a: Point, b: Point) -> Point:
    """Midpoint of the counterclockwise arc from ``a`` to ``b`` about ``c``."""
    if points_close(a, b):
        return a
    u, v = a - c, b - c
    if u.exact and v.exact:
        ta, tb = angle_of(c, a).exact, angle_of(c, b).exact
        if ta is not None and tb is not None:
            h = ((tb - ta) % 1) / 2
            co, si = num.cos_turn(h), num.sin_turn(h)
            return c + Point(co * u.x - si * u.y, si * u.x + co * u.y)
    turn = num.sign(u.cross(v))
    if turn == 0:
        d = u.perp()
    else:
        d = u + v if turn > 0 else -(u + v)
    k = num.sqrt(num.div(u.norm2(), d.norm2()))
    return c + Point(num.mul(k, d.x), num.mul(k, d.y))


# --- rotational asymmetry -----------------------------------------------------------


def collinear_code(chain: Sequence[Point], c: Point, axis: Point) -> tuple:
    """Signed step lengths along the line (in units of ``|axis|``); a step
    is positive when it ends strictly closer to ``c``."""
    out = []
    for a, b in zip(chain, chain[1:]):
        ta, tb = (a - c).dot(axis), (b - c).dot(axis)
        step = abs(num.sub(tb, ta)) if num.is_exact(tb) and num.is_exact(ta) else abs(num.to_real(tb) - num.to_real(ta))
        closer = num.compare(abs(tb), abs(ta)) < 0
        out.append(step if closer else -step)
    return tuple(out)


def _scalar_cmp(a, b) -> int:
    return num.compare(a, b)


def _x_collinear(vs: list[Point], c: Point) -> Point:
    axis = next(v - c for v in vs if not points_close(v, c))
    d2 = [dist2(v, c) for v in vs]
    far = max(d2, key=num.to_real)
    cands = []
    for i, v in enumerate(vs):
        if num.compare(d2[i], far) != 0:
            continue
        for step in (1, -1):
            cands.append((v, collinear_code(_chain(vs, i, step), c, axis)))
    return _pick_minimal(cands, lambda s, t: code_cmp(s, t, _scalar_cmp), "x_center_polygon collinear")


def _x_chains(vs: list[Point], c: Point) -> Point:
    rings = _rings(vs, c)
    plus, minus = [], []
    for i, v in enumerate(vs):
        if rings[v] != 1:
            continue
        pair = chain_orientation(vs, i, c)
        for chain, role in ((pair.positive, 1), (pair.negative, -1)):
            roles = (1, -1) if pair.ambiguous else (role,)
            for r in roles:
                code = rotation_code(chain, c, rings, r)
                (plus if r > 0 else minus).append((v, code))
    z_plus = _pick_minimal(plus, code_cmp, "x_center_polygon positive chains")
    z_minus = _pick_minimal(minus, code_cmp, "x_center_polygon negative chains")
    return _arc_midpoint(c, z_plus, z_minus)


def x_center_polygon(p: Polygon) -> Point:
    """Center of rotational asymmetry: the centroid exactly when the polygon
    has a nontrivial rotational symmetry."""
    vs = _vertices(p)
    c = centroid(vs)
    g_poly, g_set = _groups(tuple(vs))
    if _is_rotational(g_poly):
        return c
    if not _is_rotational(g_set):
        return x_center_multiset(vs)
    if all_collinear(vs):
        return _x_collinear(vs, c)
    return _x_chains(vs, c)


# --- axial asymmetry ------------------------------------------------------------------


def half_plane_sign(chain: Sequence[Point], j: int, c: Point, x: Point) -> int:
    """+1 when chain position ``j`` keeps to the half-plane of its last
    predecessor off the line ``c x``; for a position on the line, whether
    that predecessor and the next successor off the line share a side."""
    side = _side_fn(c, x)
    return _sign_at([side(v) for v in chain], j)


def _sign_at(sides: Sequence[int], j: int) -> int:
    pred = next(sides[h] for h in range(j - 1, -1, -1) if sides[h] != 0)
    here = sides[j]
    if here == 0:
        n = len(sides)
        here = next(sides[h % n] for h in range(j + 1, j + n) if sides[h % n] != 0)
    return 1 if here == pred else -1


def _side_fn(c: Point, x: Point):
    d = x - c
    scale = max(1, num.to_real(d.norm2()))
    return lambda q: num.sign(d.cross(q - c), scale=scale * max(1, num.to_real(dist2(q, c))))


def axial_code(chain: Sequence[Point], c: Point, x: Point, c_rings: dict, x_rings: dict, side=None) -> tuple:
    """Triples (ring about ``c``, ring about ``x``, side sign) for positions 2..n+1."""
    side = _side_fn(c, x) if side is None else side
    sides = [side(v) for v in chain]
    return tuple((c_rings[chain[j]], x_rings[chain[j]], _sign_at(sides, j)) for j in range(1, len(chain)))


def _triple_cmp(a, b) -> int:
    return (a > b) - (a < b)


def y_center_polygon(p: Polygon, x: Point | None = None) -> Point:
    """Center of axial asymmetry: the centroid unless the polygon has a
    trivial symmetry group."""
    vs = _vertices(p)
    c = centroid(vs)
    g_poly, g_set = _groups(tuple(vs))
    if classify(g_poly) != "C":
        return c
    if classify(g_set) == "C":
        return y_center_multiset(vs)
    x = x_center_polygon(Polygon(vs)) if x is None else x
    side_of = _side_fn(c, x)
    cache: dict = {}
    side = lambda v: cache[v] if v in cache else cache.setdefault(v, side_of(v))
    off = [i for i, v in enumerate(vs) if side(v) != 0]
    if not off:
        raise ContractViolation("y_center_polygon", "every vertex lies on the line through the first two centers")
    c_d2 = [dist2(v, c) for v in vs]
    x_d2 = [dist2(v, x) for v in vs]
    c_idx, x_idx = circle_indices(c_d2), circle_indices(x_d2)
    c_rings = {v: i + 1 for v, i in zip(vs, c_idx)}
    x_rings = {v: i + 1 for v, i in zip(vs, x_idx)}
    top_c = min(c_idx[i] for i in off)
    ring = [i for i in off if c_idx[i] == top_c]
    top_x = min(x_idx[i] for i in ring)
    q = [i for i in ring if x_idx[i] == top_x]
    cands = []
    for i in q:
        codes = [axial_code(_chain(vs, i, s), c, x, c_rings, x_rings, side) for s in (1, -1)]
        cands.append((vs[i], min(codes)))
    return _pick_minimal(cands, lambda s, t: code_cmp(s, t, _triple_cmp), "y_center_polygon")


# --- fixed points and the affine family -----------------------------------------------


def is_center_value_polygon(p: Polygon, x: Point) -> bool:
    return fixed_set(symmetry_group_polygon(Polygon(_vertices(p)))).contains(x)


def center_through_polygon(p: Polygon, x: Point) -> tuple:
    """Affine weights of the centroid and the two polygon centers reaching
    ``x``.

    Raises:
        DomainError: ``x`` is not fixed by the polygon's symmetry group.
    """
    poly = Polygon(_vertices(p))
    if not is_center_value_polygon(poly, x):
        raise DomainError(f"{x} is not fixed by the polygon's symmetry group")
    kind = classify(symmetry_group_polygon(poly))
    c = centroid(poly.vertices)
    xc = x_center_polygon(poly)
    yc = y_center_polygon(poly, xc) if kind == "C" else None
    return affine_weights(c, xc, yc, x, kind)
