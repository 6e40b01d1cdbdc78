"""Center report of a scene: symmetry group, class, fixed set, the centers
and the coincidence/collinearity flags."""

from __future__ import annotations

from fractions import Fraction

from . import numeric as num
from .errors import NotCyclicError
from .geom import Point, centroid
from .multiset_centers import circumcenter, x_center_multiset, y_center_multiset
from .polygon_centers import x_center_polygon, y_center_polygon
from .scene import SceneFile
from .symmetry import LineSet, SinglePoint, classify, fixed_set, symmetry_group
from .suites import affinely_independent


def render_scalar(v, digits: int = 20) -> str:
    """Rationals as "p/q" (or "p"); other reals as decimals with ``digits``
    significant digits."""
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return str(v)
    return num.ctx.nstr(num.to_real(v), digits)


def render_point(p: Point, digits: int = 20) -> dict:
    exact = isinstance(p.x, (int, Fraction)) and isinstance(p.y, (int, Fraction))
    return {"x": render_scalar(p.x, digits), "y": render_scalar(p.y, digits), "rational": exact}


def render_fixed_set(fs, digits: int = 20) -> dict:
    if isinstance(fs, SinglePoint):
        return {"type": "point", "point": render_point(fs.point, digits)}
    if isinstance(fs, LineSet):
        return {"type": "line", "point": render_point(fs.point, digits),
                "direction": render_point(fs.direction, digits)}
    return {"type": "plane"}


def build_report(scene: SceneFile, digits: int = 20) -> dict:
    obj = scene.to_object()
    pts = list(scene.points)
    g = symmetry_group(obj)
    cls = classify(g)
    c = centroid(pts)
    rp = lambda p: render_point(p, digits)
    centers: dict = {"centroid": rp(c)}
    try:
        centers["circumcenter"] = rp(circumcenter(pts))
    except NotCyclicError:
        centers["circumcenter"] = None
    flags: dict = {"X_eq_centroid": None, "triple_collinear": None}
    if scene.kind == "labeled":
        # no asymmetry centers are defined for labeled multisets
        centers["X"] = centers["Y"] = None
    else:
        if scene.kind == "polygon":
            x = x_center_polygon(obj)
            y = y_center_polygon(obj, x)
        else:
            x = x_center_multiset(pts)
            y = y_center_multiset(pts, x)
        centers["X"], centers["Y"] = rp(x), rp(y)
        flags = {
            "X_eq_centroid": bool(x.exact and x == c),
            "triple_collinear": not affinely_independent(c, x, y),
        }
    return {
        "kind": scene.kind,
        "n": len(pts),
        "symmetry": {
            "rotation_order": g.rotation_order,
            "axes": len(g.reflections),
            "center": rp(g.center),
            "continuous": g.continuous,
        },
        "class": cls,
        "fixed_set": render_fixed_set(fixed_set(g), digits),
        "centers": centers,
        "flags": flags,
    }
