"""Command line: ``planecenters report|verify|svg``.

Exit codes: 0 success, 1 verification failures, 2 usage or parse error,
3 contract violation inside an algorithm, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import numeric as num
from .errors import ContractViolation, GeometryError
from .scene import SceneError, load

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_CONTRACT, EXIT_IO = 0, 1, 2, 3, 4


def _parser() -> argparse.ArgumentParser:
    from .suites import SUITES

    p = argparse.ArgumentParser(prog="planecenters", description="Centers of plane multisets and polygons.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("report", help="symmetry class and centers of a scene file")
    r.add_argument("file")
    r.add_argument("--tol", type=float, default=None, help="tolerance for constructed reals")
    r.add_argument("--precision", type=int, default=20, help="significant digits for non-rational values")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("file", nargs="?")
    v.add_argument("--suite", default=None, help=f"one of {', '.join(SUITES)}")
    v.add_argument("--trials", type=int, default=None)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tol", type=float, default=1e-6)
    v.add_argument("--max", type=int, default=10, help="largest polygon order for lemma-aux")

    s = sub.add_parser("svg", help="draw a scene with its centers")
    s.add_argument("file")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--width", type=int, default=800)
    s.add_argument("--no-centers", action="store_true", help="draw the input only")
    return p


def _err(msg: str) -> None:
    print(f"planecenters: {msg}", file=sys.stderr)


def _load(path: str):
    try:
        return load(path)
    except OSError as e:
        raise _Exit(EXIT_IO, f"cannot read {path}: {e.strerror or e}")
    except SceneError as e:
        raise _Exit(EXIT_USAGE, f"{path}: {e}")


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def cmd_report(args) -> int:
    from .report import build_report

    scene = _load(args.file)
    if args.tol is not None:
        num.set_tolerance(args.tol)
    if args.precision < 1:
        raise _Exit(EXIT_USAGE, "--precision must be positive")
    num.set_precision(max(256, 4 * args.precision))
    print(json.dumps(build_report(scene, digits=args.precision), indent=2))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .suites import SUITES, run_suite

    suite = args.suite or ("equivariance" if args.file else None)
    if suite is None:
        raise _Exit(EXIT_USAGE, "give a scene file or --suite")
    if suite not in SUITES:
        raise _Exit(EXIT_USAGE, f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    obj = None
    if args.file:
        if suite not in ("equivariance", "oracle"):
            raise _Exit(EXIT_USAGE, f"suite {suite!r} does not take a scene file")
        scene = _load(args.file)
        obj = scene.to_object() if scene.kind != "multiset" else list(scene.points)
    try:
        rep = run_suite(suite, trials=args.trials, seed=args.seed, tolerance=args.tol, max_order=args.max, obj=obj)
    except ValueError as e:
        raise _Exit(EXIT_USAGE, str(e))
    print(json.dumps(rep.to_dict(), indent=2))
    print(rep.summary(), file=sys.stderr)
    return EXIT_OK if rep.passed else EXIT_FAILED


def cmd_svg(args) -> int:
    from .multiset_centers import x_center_multiset, y_center_multiset
    from .polygon_centers import x_center_polygon, y_center_polygon
    from .geom import centroid
    from .svg import render
    from .symmetry import LineSet, fixed_set, symmetry_group

    scene = _load(args.file)
    if args.width < 1:
        raise _Exit(EXIT_USAGE, "--width must be positive")
    centers, axis = {}, None
    if not args.no_centers:
        pts = list(scene.points)
        centers["c"] = centroid(pts)
        if scene.kind == "polygon":
            x = x_center_polygon(scene.to_object())
            centers["X"], centers["Y"] = x, y_center_polygon(scene.to_object(), x)
        elif scene.kind == "multiset":
            x = x_center_multiset(pts)
            centers["X"], centers["Y"] = x, y_center_multiset(pts, x)
        fs = fixed_set(symmetry_group(scene.to_object()))
        if isinstance(fs, LineSet):
            axis = (fs.point, fs.direction)
    text = render(scene, centers, axis, width=args.width)
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as e:
        raise _Exit(EXIT_IO, f"cannot write {args.output}: {e.strerror or e}")
    return EXIT_OK


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    handler = {"report": cmd_report, "verify": cmd_verify, "svg": cmd_svg}[args.command]
    try:
        return handler(args)
    except _Exit as e:
        _err(str(e))
        return e.code
    except ContractViolation as e:
        _err(f"contract violation {e}")
        return EXIT_CONTRACT
    except GeometryError as e:
        _err(str(e))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
