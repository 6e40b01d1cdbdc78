"""Scene files: one JSON document holding a multiset, a labeled multiset
or a polygon with exact coordinates.

    {"kind": "polygon", "points": [[0, 0], ["1/2", 3], [2.5, "-7/3"]]}

Decimal numbers are read by their literal digits, so ``0.1`` is exactly
1/10. Serialization writes every coordinate as a rational string.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .geom import Point
from .symmetry import LabeledMultiset, Multiset, Polygon

KINDS = ("multiset", "labeled", "polygon")


class SceneError(ValueError):
    """Malformed scene document."""


def parse_number(v) -> Fraction:
    if isinstance(v, bool):
        raise SceneError(f"not a number: {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v.strip())
        except (ValueError, ZeroDivisionError):
            raise SceneError(f"not a rational number: {v!r}") from None
    raise SceneError(f"not a number: {v!r}")


def format_number(q: Fraction) -> str:
    return str(q)


@dataclass(frozen=True)
class SceneFile:
    kind: str
    points: tuple[Point, ...]
    labels: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SceneError(f"unknown kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        if not self.points:
            raise SceneError("a scene needs at least one point")
        if self.kind == "labeled":
            if self.labels is None or len(self.labels) != len(self.points):
                raise SceneError("a labeled scene needs one integer label per point")
        elif self.labels is not None:
            raise SceneError("labels are only allowed for kind 'labeled'")
        if self.kind == "polygon" and len(self.points) < 3:
            raise SceneError("a polygon needs at least three vertices")

    @classmethod
    def from_dict(cls, d: dict) -> "SceneFile":
        if not isinstance(d, dict):
            raise SceneError("scene must be a JSON object")
        raw = d.get("points")
        if not isinstance(raw, list):
            raise SceneError("'points' must be a list of [x, y] pairs")
        pts = []
        for item in raw:
            if not isinstance(item, list) or len(item) != 2:
                raise SceneError(f"bad point {item!r}")
            pts.append(Point(parse_number(item[0]), parse_number(item[1])))
        labels = d.get("labels")
        if labels is not None:
            if not isinstance(labels, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in labels):
                raise SceneError("'labels' must be a list of integers")
            labels = tuple(labels)
        return cls(d.get("kind", "multiset"), tuple(pts), labels)

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind, "points": [[format_number(p.x), format_number(p.y)] for p in self.points]}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        return out

    def to_object(self):
        if self.kind == "polygon":
            return Polygon(self.points)
        if self.kind == "labeled":
            return LabeledMultiset(self.points, self.labels)
        return Multiset(self.points)


def loads(text: str) -> SceneFile:
    try:
        # keep decimal literals as strings so they convert exactly
        data = json.loads(text, parse_float=str)
    except json.JSONDecodeError as e:
        raise SceneError(f"invalid JSON: {e}") from None
    return SceneFile.from_dict(data)


def dumps(scene: SceneFile) -> str:
    return json.dumps(scene.to_dict(), indent=2) + "\n"


def load(path: str | Path) -> SceneFile:
    return loads(Path(path).read_text())


def save(scene: SceneFile, path: str | Path) -> None:
    Path(path).write_text(dumps(scene))
