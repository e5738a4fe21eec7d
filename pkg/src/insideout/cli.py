"""Command-line front end: ``insideout dissect|verify|render|census``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import dissect2d, dissect3d
from .io_render import (
    RenderOptions,
    emit_off,
    emit_svg,
    parse_cells,
    parse_dissection,
    parse_polygon,
    serialize_dissection,
)
from .kernel import EXACT, approx
from .model import BOUNDARY, Dissection
from .verify import verify


class UsageError(Exception):
    pass


def _mode(name, eps=1e-9):
    if name is None:
        return None
    return EXACT if name == "exact" else approx(eps)


def _write(data: bytes, out) -> None:
    if out in (None, "-"):
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(out).write_bytes(data)


def _read(path) -> bytes:
    return Path(path).read_bytes()


def cmd_dissect(args) -> int:
    mode = _mode(args.mode, args.epsilon)
    if args.kind == "generic":
        if not args.input:
            raise UsageError("dissect generic needs --input")
        P = parse_polygon(_read(args.input), exact=None if mode is None else mode.exact)
        d = dissect2d.dissect_generic(P, t_start=args.t_start, mode=mode)
    elif args.kind == "regular":
        if args.n is None:
            raise UsageError("dissect regular needs --n")
        if mode is not None and mode.exact:
            raise UsageError("regular polygons are built in approx mode")
        d = dissect2d.dissect_regular(args.n, args.circumradius, mode=mode)
    elif args.kind in ("tet", "oct"):
        vertices = None
        if args.vertices:
            cells = parse_cells(_read(args.vertices), exact=None if mode is None else mode.exact)
            if len(cells) != 1:
                raise UsageError("--vertices must describe exactly one cell")
            vertices = cells[0]
        fn = (dissect3d.dissect_regular_tetrahedron if args.kind == "tet"
              else dissect3d.dissect_regular_octahedron)
        d = fn(vertices, mode=mode)
    else:
        if not args.cells:
            raise UsageError("dissect complex needs --cells")
        cells = parse_cells(_read(args.cells), exact=None if mode is None else mode.exact)
        d = dissect3d.dissect_complex(cells, mode=mode)
    _write(serialize_dissection(d), args.output)
    return 0


def _load(path, epsilon=None) -> Dissection:
    d = parse_dissection(_read(path))
    if epsilon is not None and not d.mode.exact:
        d = Dissection(d.space, approx(epsilon), d.original, d.witness_motion, d.pieces,
                       d.metadata)
    return d


def cmd_verify(args) -> int:
    d = _load(args.record, args.epsilon)
    report = verify(d)
    _write((json.dumps(report.to_json(), indent=2) + "\n").encode("utf-8"), None)
    return 0 if report.passed else 1


def cmd_render(args) -> int:
    d = _load(args.record)
    opts = RenderOptions(layout=args.layout, explode=args.explode, moved=args.moved)
    if args.svg:
        _write(emit_svg(d, opts), args.svg)
    elif args.off:
        _write(emit_off(d, opts), args.off)
    else:
        raise UsageError("render needs --svg or --off")
    return 0


def census(d: Dissection) -> dict:
    """Histogram of pieces by kind and number of original-boundary facets."""
    out = {}
    for p in d.pieces:
        if d.space == 3:
            kind = {4: "tet", 6: "oct"}.get(len(p.vertices), "poly")
        else:
            kind = "polygon"
        k = sum(f == BOUNDARY for f in p.facet_origin)
        out.setdefault(kind, {})
        out[kind][k] = out[kind].get(k, 0) + 1
    return {kind: {str(k): h[k] for k in sorted(h, reverse=True)} for kind, h in sorted(
        out.items(), key=lambda kv: ("tet", "oct", "polygon", "poly").index(kv[0]))}


def cmd_census(args) -> int:
    d = _load(args.record)
    _write((json.dumps(census(d), indent=2) + "\n").encode("utf-8"), None)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="insideout",
                                     description="Inside-out dissections of polygons and polyhedra.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dissect", help="construct a dissection record")
    p.add_argument("kind", choices=["generic", "regular", "tet", "oct", "complex"])
    p.add_argument("--input", help="polygon JSON for 'generic'")
    p.add_argument("--t-start", type=int, default=2, help="initial collar stiffness")
    p.add_argument("--n", type=int, help="number of sides for 'regular'")
    p.add_argument("--circumradius", type=float, default=1.0)
    p.add_argument("--vertices", help="cell JSON for 'tet'/'oct' (default: canonical cell)")
    p.add_argument("--cells", help="cell-complex JSON for 'complex'")
    p.add_argument("--mode", choices=["exact", "approx"])
    p.add_argument("--epsilon", type=float, default=1e-9)
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    p.set_defaults(func=cmd_dissect)

    p = sub.add_parser("verify", help="check a record; exit 0 pass, 1 fail, 2 error")
    p.add_argument("record")
    p.add_argument("--epsilon", type=float, help="override the tolerance of approx records")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="write SVG (2D) or OFF (3D)")
    p.add_argument("record")
    p.add_argument("--svg")
    p.add_argument("--off")
    p.add_argument("--explode", type=float, default=1.0)
    p.add_argument("--layout", choices=["before_after", "overlay"], default="before_after")
    p.add_argument("--moved", action="store_true", help="OFF: show the rearranged pieces")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("census", help="boundary-facet histogram of a record")
    p.add_argument("record")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 2
    except (OSError, ValueError, RuntimeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
