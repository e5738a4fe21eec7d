"""JSON records (schema version 1), SVG before/after panels and OFF meshes."""

from __future__ import annotations

import colorsys
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .kernel import EXACT, ConvexPolyhedron, RigidMotion, approx, centroid, format_scalar
from .model import CUT, BOUNDARY, CellComplex, Dissection, Piece, RecordError

SCHEMA_VERSION = 1
_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


class SchemaError(ValueError):
    def __init__(self, path: str, msg: str):
        super().__init__("%s: %s" % (path, msg))
        self.path = path


class NumberFormatError(ValueError):
    pass


class InvariantViolation(ValueError):
    pass


class WrongSpace(ValueError):
    pass


def parse_number(x, exact: bool, path: str = "$"):
    if isinstance(x, bool):
        raise NumberFormatError("%s: boolean is not a number" % path)
    if isinstance(x, int):
        return Fraction(x) if exact else float(x)
    if isinstance(x, float):
        # floats in an exact record are kept so the verifier can report the mode clash
        return x
    if isinstance(x, str):
        if not _RATIONAL.match(x.strip()):
            raise NumberFormatError("%s: %r is not an integer or p/q rational" % (path, x))
        num, _, den = x.strip().partition("/")
        if den and int(den) == 0:
            raise NumberFormatError("%s: zero denominator in %r" % (path, x))
        q = Fraction(int(num), int(den) if den else 1)
        return q if exact else float(q)
    raise NumberFormatError("%s: expected a number, got %s" % (path, type(x).__name__))


def _point(raw, exact, path, dim=None):
    if not isinstance(raw, list):
        raise SchemaError(path, "expected a coordinate list")
    if dim is not None and len(raw) != dim:
        raise SchemaError(path, "expected %d coordinates, got %d" % (dim, len(raw)))
    return tuple(parse_number(x, exact, "%s[%d]" % (path, i)) for i, x in enumerate(raw))


def _points(raw, exact, path, dim=None):
    if not isinstance(raw, list) or not raw:
        raise SchemaError(path, "expected a non-empty list of points")
    return tuple(_point(p, exact, "%s[%d]" % (path, i), dim) for i, p in enumerate(raw))


def _motion(raw, exact, path, dim):
    if not isinstance(raw, dict) or "rotation" not in raw or "translation" not in raw:
        raise SchemaError(path, "motion needs 'rotation' and 'translation'")
    rot = _points(raw["rotation"], exact, path + ".rotation", dim)
    if len(rot) != dim:
        raise SchemaError(path + ".rotation", "expected a %dx%d matrix" % (dim, dim))
    return RigidMotion(rot, _point(raw["translation"], exact, path + ".translation", dim))


def _faces(raw, path, nverts):
    if not isinstance(raw, list) or not raw:
        raise SchemaError(path, "expected a list of faces")
    out = []
    for i, f in enumerate(raw):
        if (not isinstance(f, list) or len(f) < 3
                or not all(isinstance(k, int) and not isinstance(k, bool) and 0 <= k < nverts
                           for k in f)):
            raise SchemaError("%s[%d]" % (path, i), "bad vertex index cycle")
        out.append(tuple(f))
    return tuple(out)


def _cell(raw, exact, path):
    from .dissect3d import cell_faces, infer_kind

    if not isinstance(raw, dict) or "vertices" not in raw:
        raise SchemaError(path, "a cell needs 'vertices'")
    vs = _points(raw["vertices"], exact, path + ".vertices", 3)
    if "faces" in raw:
        return ConvexPolyhedron(vs, _faces(raw["faces"], path + ".faces", len(vs)))
    kind = raw.get("kind") or infer_kind(vs)
    vs = tuple(sorted(vs))
    return ConvexPolyhedron(vs, cell_faces(vs, kind))


def dissection_from_json(obj) -> Dissection:
    if not isinstance(obj, dict):
        raise SchemaError("$", "top level must be an object")
    for key in ("version", "space", "mode", "original", "witness_motion", "pieces"):
        if key not in obj:
            raise SchemaError("$", "missing key %r" % key)
    if obj["version"] != SCHEMA_VERSION:
        raise SchemaError("$.version", "unsupported version %r" % obj["version"])
    space = obj["space"]
    if space not in (2, 3):
        raise SchemaError("$.space", "must be 2 or 3")
    if obj["mode"] == "exact":
        mode = EXACT
    elif obj["mode"] == "approx":
        eps = obj.get("epsilon", 1e-9)
        if not isinstance(eps, (int, float)) or isinstance(eps, bool) or eps <= 0:
            raise SchemaError("$.epsilon", "must be a positive number")
        mode = approx(float(eps))
    else:
        raise SchemaError("$.mode", "must be 'exact' or 'approx'")
    exact = mode.exact
    orig = obj["original"]
    if space == 2:
        if not isinstance(orig, dict) or "polygon" not in orig:
            raise SchemaError("$.original", "2D records need {'polygon': [...]}")
        original = _points(orig["polygon"], exact, "$.original.polygon", 2)
    else:
        if not isinstance(orig, dict) or "cells" not in orig or not isinstance(orig["cells"], list):
            raise SchemaError("$.original", "3D records need {'cells': [...]}")
        original = CellComplex([_cell(c, exact, "$.original.cells[%d]" % i)
                                for i, c in enumerate(orig["cells"])])
    witness = _motion(obj["witness_motion"], exact, "$.witness_motion", space)
    raw_pieces = obj["pieces"]
    if not isinstance(raw_pieces, list) or not raw_pieces:
        raise SchemaError("$.pieces", "expected a non-empty list")
    pieces = []
    for i, rp in enumerate(raw_pieces):
        path = "$.pieces[%d]" % i
        if not isinstance(rp, dict):
            raise SchemaError(path, "expected an object")
        for key in ("id", "vertices", "facet_origin", "motion"):
            if key not in rp:
                raise SchemaError(path, "missing key %r" % key)
        vs = _points(rp["vertices"], exact, path + ".vertices", space)
        faces = _faces(rp["faces"], path + ".faces", len(vs)) if space == 3 else None
        if space == 3 and "faces" not in rp:
            raise SchemaError(path, "3D pieces need 'faces'")
        flags = rp["facet_origin"]
        if not isinstance(flags, list) or any(f not in (BOUNDARY, CUT) for f in flags):
            raise SchemaError(path + ".facet_origin", "flags must be 'boundary' or 'cut'")
        motion = _motion(rp["motion"], exact, path + ".motion", space)
        try:
            pieces.append(Piece(rp["id"], vs, flags, motion, faces))
        except RecordError as exc:
            raise InvariantViolation(str(exc)) from None
    meta = obj.get("metadata", {})
    if not isinstance(meta, dict):
        raise SchemaError("$.metadata", "expected an object")
    try:
        return Dissection(space, mode, original, witness, pieces, meta)
    except RecordError as exc:
        raise InvariantViolation(str(exc)) from None


def parse_dissection(data) -> Dissection:
    """Parse UTF-8 JSON bytes (or text) into a validated record."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", "invalid JSON: %s" % exc) from None
    return dissection_from_json(obj)


def _pt(p):
    return [format_scalar(x) for x in p]


def _motion_json(m: RigidMotion):
    return {"rotation": [_pt(r) for r in m.rotation], "translation": _pt(m.translation)}


def dissection_to_json(d: Dissection) -> dict:
    obj = {"version": SCHEMA_VERSION, "space": d.space, "mode": d.mode.name}
    if not d.mode.exact:
        obj["epsilon"] = d.mode.eps
    if d.space == 2:
        obj["original"] = {"polygon": [_pt(p) for p in d.original]}
    else:
        obj["original"] = {"cells": [{"vertices": [_pt(p) for p in c.vertices],
                                      "faces": [list(f) for f in c.faces]}
                                     for c in d.original.cells]}
    obj["witness_motion"] = _motion_json(d.witness_motion)
    pieces = []
    for p in d.pieces:
        rp = {"id": p.id, "vertices": [_pt(v) for v in p.vertices]}
        if p.faces is not None:
            rp["faces"] = [list(f) for f in p.faces]
        rp["facet_origin"] = list(p.facet_origin)
        rp["motion"] = _motion_json(p.motion)
        pieces.append(rp)
    obj["pieces"] = pieces
    if d.metadata:
        obj["metadata"] = d.metadata
    return obj


def _compact(x) -> str:
    return json.dumps(x, separators=(", ", ": "))


def serialize_dissection(d: Dissection) -> bytes:
    """Deterministic JSON: one line per top-level key and per piece."""
    obj = dissection_to_json(d)
    lines = ["{"]
    keys = list(obj)
    for n, key in enumerate(keys):
        tail = "," if n < len(keys) - 1 else ""
        if key == "pieces":
            lines.append('  "pieces": [')
            for k, rp in enumerate(obj["pieces"]):
                lines.append("    " + _compact(rp) + ("," if k < len(obj["pieces"]) - 1 else ""))
            lines.append("  ]" + tail)
        else:
            lines.append("  %s: %s%s" % (json.dumps(key), _compact(obj[key]), tail))
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def parse_polygon(data, exact: Optional[bool] = None) -> tuple:
    """``{"polygon": [[x, y], ...]}`` or a bare list of points."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    obj = json.loads(data) if isinstance(data, str) else data
    raw = obj.get("polygon") if isinstance(obj, dict) else obj
    if exact is None:
        exact = not any(isinstance(x, float) for p in raw for x in p)
    return _points(raw, exact, "$.polygon", 2)


def parse_cells(data, exact: Optional[bool] = None) -> list:
    """``{"cells": [{"vertices": [...], "kind": ...}, ...]}`` to vertex lists."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    obj = json.loads(data) if isinstance(data, str) else data
    if isinstance(obj, dict) and "vertices" in obj and "cells" not in obj:
        obj = {"cells": [obj]}
    if not isinstance(obj, dict) or not isinstance(obj.get("cells"), list):
        raise SchemaError("$", "expected {'cells': [...]}")
    if exact is None:
        exact = not any(isinstance(x, float) for c in obj["cells"]
                        for p in c.get("vertices", []) for x in p)
    return [_points(c.get("vertices"), exact, "$.cells[%d].vertices" % i, 3)
            for i, c in enumerate(obj["cells"])]


# -- rendering ---------------------------------------------------------------------

@dataclass(frozen=True)
class RenderOptions:
    layout: str = "before_after"  # or "overlay"
    explode: float = 1.0
    moved: bool = False  # OFF only: render the rearranged state

    def __post_init__(self):
        if self.explode < 1:
            raise ValueError("explode factor must be >= 1")
        if self.layout not in ("before_after", "overlay"):
            raise ValueError("layout must be 'before_after' or 'overlay'")


def piece_color(pid: int) -> str:
    h = (pid * 0.618033988749895) % 1.0
    r, g, b = colorsys.hsv_to_rgb(h, 0.45, 0.95)
    return "#%02x%02x%02x" % (round(r * 255), round(g * 255), round(b * 255))


def _num(x) -> str:
    s = "%.6f" % float(x)
    s = s.rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _exploded(points_by_piece, origin, f):
    if f == 1:
        return points_by_piece
    out = []
    for pts in points_by_piece:
        c = centroid([tuple(float(x) for x in p) for p in pts])
        shift = tuple((ci - oi) * (f - 1) for ci, oi in zip(c, origin))
        out.append([tuple(float(x) + s for x, s in zip(p, shift)) for p in pts])
    return out


def emit_svg(d: Dissection, opts: RenderOptions = RenderOptions()) -> bytes:
    """Two panels (pieces in place, pieces moved); boundary and cut edges styled apart."""
    if d.space != 2:
        raise WrongSpace("SVG output needs a 2D record")
    origin = centroid([tuple(float(x) for x in p) for p in d.original])
    before = _exploded([p.vertices for p in d.pieces], origin, opts.explode)
    target_origin = centroid([tuple(float(x) for x in p) for p in d.target()])
    after = _exploded([p.moved_vertices() for p in d.pieces], target_origin, opts.explode)
    allpts = [tuple(float(x) for x in p) for pts in before + after for p in pts]
    allpts += [tuple(float(x) for x in p) for p in d.original]
    xs = [p[0] for p in allpts]
    ys = [p[1] for p in allpts]
    w = max(xs) - min(xs) or 1.0
    h = max(ys) - min(ys) or 1.0
    margin = 0.05 * max(w, h)
    gap = w + 2 * margin if opts.layout == "before_after" else 0.0
    x0, y0 = min(xs) - margin, -max(ys) - margin
    vw = w + 2 * margin + gap
    vh = h + 2 * margin
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="%s %s %s %s">'
           % (_num(x0), _num(y0), _num(vw), _num(vh)),
           "<style>.boundary{stroke:#c0392b;stroke-width:%s}"
           ".cut{stroke:#2c3e50;stroke-width:%s;stroke-dasharray:%s}"
           ".outline{fill:none;stroke:#999;stroke-width:%s}</style>"
           % (_num(0.012 * max(w, h)), _num(0.005 * max(w, h)), _num(0.02 * max(w, h)),
              _num(0.004 * max(w, h)))]
    panels = [("before", before, 0.0, d.original), ("after", after, gap, d.target())]
    for name, geoms, dx, outline in panels:
        out.append('<g id="%s">' % name)
        out.append('<polyline class="outline" points="%s"/>' % " ".join(
            "%s,%s" % (_num(float(p[0]) + dx), _num(-float(p[1]))) for p in list(outline) + [outline[0]]))
        for piece, pts in zip(d.pieces, geoms):
            coords = " ".join("%s,%s" % (_num(float(p[0]) + dx), _num(-float(p[1]))) for p in pts)
            out.append('<polygon id="%s-%d" points="%s" fill="%s" fill-opacity="0.8" stroke="none"/>'
                       % (name, piece.id, coords, piece_color(piece.id)))
            n = len(pts)
            for k, flag in enumerate(piece.facet_origin):
                a, b = pts[k], pts[(k + 1) % n]
                out.append('<line class="%s" x1="%s" y1="%s" x2="%s" y2="%s"/>'
                           % (flag, _num(float(a[0]) + dx), _num(-float(a[1])),
                              _num(float(b[0]) + dx), _num(-float(b[1]))))
        out.append("</g>")
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")


def emit_off(d: Dissection, opts: RenderOptions = RenderOptions()) -> bytes:
    """One ASCII OFF mesh holding every piece, pushed out from the container centroid."""
    if d.space != 3:
        raise WrongSpace("OFF output needs a 3D record")
    region = d.target() if opts.moved else d.original
    origin = centroid([tuple(float(x) for x in v) for c in region.cells for v in c.vertices])
    geoms = [p.moved_vertices() if opts.moved else p.vertices for p in d.pieces]
    geoms = _exploded(geoms, origin, opts.explode)
    verts, faces = [], []
    for piece, pts in zip(d.pieces, geoms):
        base = len(verts)
        verts.extend(pts)
        faces.extend([base + k for k in f] for f in piece.faces)
    lines = ["OFF", "%d %d 0" % (len(verts), len(faces))]
    lines += [" ".join("%.9g" % float(x) for x in v) for v in verts]
    lines += ["%d %s" % (len(f), " ".join(str(k) for k in f)) for f in faces]
    return ("\n".join(lines) + "\n").encode("ascii")
