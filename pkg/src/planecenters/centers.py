"""Name -> callable registry of every center, each taking its natural
input object and returning a Cartesian point."""

from __future__ import annotations

from .cyclic import CyclicConfiguration, a_center, b_center, b_center_labeled
from .geom import Point
from .multiset_centers import centroid_center, circumcenter, x_center_multiset, y_center_multiset
from .polygon_centers import x_center_polygon, y_center_polygon


def _cart(r) -> Point:
    return r if isinstance(r, Point) else r.cartesian()


CENTERS = {
    "centroid": centroid_center,
    "circumcenter": circumcenter,
    "a_center": lambda c: _cart(a_center(c)),
    "b_center": lambda c: _cart(b_center(c)),
    "b_center_labeled": lambda c: _cart(b_center_labeled(c)),
    "x_multiset": x_center_multiset,
    "y_multiset": y_center_multiset,
    "x_polygon": x_center_polygon,
    "y_polygon": y_center_polygon,
}

CYCLIC_CENTERS = ("a_center", "b_center", "b_center_labeled")
MULTISET_CENTERS = ("centroid", "circumcenter", "x_multiset", "y_multiset")
POLYGON_CENTERS = ("x_polygon", "y_polygon")
