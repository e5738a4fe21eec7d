"""Tetrahedral-octahedral honeycomb subdivisions and their inside-out rearrangement.

Everything is computed in the canonical frame of the face-centred cubic
lattice, where the regular tetrahedron is ``conv{0, v1, v2, v3}`` with
``v1 = e1 + e2``, ``v2 = e1 + e3``, ``v3 = e2 + e3``.  User-supplied cells are
related to that frame by a similarity; conjugating the canonical motions by
the similarity gives rigid motions in user coordinates.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .kernel import (
    EXACT,
    ConvexPolyhedron,
    GeometryError,
    NumericMode,
    RigidMotion,
    add,
    approx,
    centroid,
    convex_polygons_overlap,
    cross3,
    dot,
    midpoint,
    polyhedra_overlap,
    polyhedron_volume,
    scale,
    sqnorm,
    sub,
)
from .model import CellComplex, Dissection, Piece, facet_flags_from_original

_F = Fraction
V1 = (_F(1), _F(1), _F(0))
V2 = (_F(1), _F(0), _F(1))
V3 = (_F(0), _F(1), _F(1))
ORIGIN = (_F(0), _F(0), _F(0))
W1, W2, W3 = (scale(v, _F(1, 2)) for v in (V1, V2, V3))

CANONICAL_TET = (ORIGIN, V1, V2, V3)
CANONICAL_OCT = (V1, V2, V3, add(V1, V2), add(V1, V3), add(V2, V3))


class WrongKind(ValueError):
    pass


class NotRegular(GeometryError):
    pass


class CellNotRegular(NotRegular):
    pass


class CellsOverlap(GeometryError):
    pass


class NotFaceToFace(GeometryError):
    pass


class CellsDoNotTile(GeometryError):
    pass


class NoPlacementFound(RuntimeError):
    pass


class NotExactMode(ValueError):
    pass


def _outward(tri, center):
    a, b, c = tri
    n = cross3(sub(b, a), sub(c, a))
    return tri if dot(n, sub(center, a)) < 0 else (a, c, b)


def cell_faces(vertices: Sequence, kind: str) -> tuple:
    """Outward triangles as vertex-index triples, in a fixed order."""
    c = centroid(vertices)
    idx = range(len(vertices))
    if kind == "tet":
        triples = list(itertools.combinations(idx, 3))
    elif kind == "oct":
        # drop triples holding an opposite (diagonal) pair
        far = max(sqnorm(sub(vertices[i], vertices[j])) for i in idx for j in idx)
        triples = [t for t in itertools.combinations(idx, 3)
                   if all(sqnorm(sub(vertices[i], vertices[j])) != far
                          for i, j in itertools.combinations(t, 2))]
    else:
        raise WrongKind("unknown cell kind %r" % kind)
    faces = []
    for t in triples:
        pts = tuple(vertices[i] for i in t)
        out = _outward(pts, c)
        faces.append(tuple(t) if out == pts else (t[0], t[2], t[1]))
    return tuple(faces)


@dataclass(frozen=True)
class Cell:
    kind: str
    vertices: tuple
    depth: int = 0

    def __post_init__(self):
        if self.kind not in ("tet", "oct"):
            raise WrongKind("unknown cell kind %r" % self.kind)
        object.__setattr__(self, "vertices", tuple(sorted(tuple(v) for v in self.vertices)))

    @property
    def faces(self) -> tuple:
        return cell_faces(self.vertices, self.kind)

    @property
    def solid(self) -> ConvexPolyhedron:
        return ConvexPolyhedron(self.vertices, self.faces)

    def shape_key(self) -> tuple:
        c = centroid(self.vertices)
        return tuple(sub(v, c) for v in self.vertices)


def subdivide_tet(T: Cell) -> list:
    """Four corner tetrahedra and the central octahedron, at half the edge length."""
    if T.kind != "tet":
        raise WrongKind("subdivide_tet needs a tetrahedron")
    vs = T.vertices
    kids = []
    for i, x in enumerate(vs):
        kids.append(Cell("tet", [x] + [midpoint(x, y) for j, y in enumerate(vs) if j != i],
                         T.depth + 1))
    mids = [midpoint(vs[i], vs[j]) for i, j in itertools.combinations(range(4), 2)]
    kids.append(Cell("oct", mids, T.depth + 1))
    return kids


def subdivide_oct(O: Cell) -> list:
    """Six corner octahedra (one per vertex) and eight face tetrahedra."""
    if O.kind != "oct":
        raise WrongKind("subdivide_oct needs an octahedron")
    vs = O.vertices
    c = centroid(vs)
    far = max(sqnorm(sub(a, b)) for a in vs for b in vs)
    kids = []
    for face in O.faces:
        p, q, r = (vs[k] for k in face)
        kids.append(Cell("tet", [midpoint(p, q), midpoint(q, r), midpoint(p, r), c], O.depth + 1))
    for p in vs:
        nbrs = [q for q in vs if q != p and sqnorm(sub(p, q)) != far]
        kids.append(Cell("oct", [p, c] + [midpoint(p, q) for q in nbrs], O.depth + 1))
    return kids


def subdivide(cells: Sequence[Cell], depth: int) -> list:
    if depth < 1:
        raise ValueError("depth must be at least 1")
    out = list(cells)
    for _ in range(depth):
        nxt = []
        for cell in out:
            nxt.extend(subdivide_tet(cell) if cell.kind == "tet" else subdivide_oct(cell))
        out = nxt
    return out


def _as_complex(container) -> CellComplex:
    if isinstance(container, CellComplex):
        return container
    if isinstance(container, Cell):
        return CellComplex([container.solid])
    return CellComplex([container])


def _check_tiling(cells: Sequence[Cell], region: CellComplex, mode: NumericMode) -> None:
    if not mode.eq(sum(polyhedron_volume(c.solid) for c in cells), region.measure()):
        raise CellsDoNotTile("cell volumes do not add up to the container volume")
    solids = [c.solid for c in cells]
    for i, j in itertools.combinations(range(len(solids)), 2):
        if polyhedra_overlap(solids[i], solids[j], mode):
            raise CellsDoNotTile("cells %d and %d overlap" % (i, j))
    for i, s in enumerate(solids):
        if not region.contains(s, mode):
            raise CellsDoNotTile("cell %d sticks out of the container" % i)


def boundary_flags(cells: Sequence[Cell], container, mode: NumericMode = EXACT) -> list:
    region = _as_complex(container)
    out = []
    for cell in cells:
        pts = [[cell.vertices[k] for k in f] for f in cell.faces]
        out.append([region.classify_face(f, mode) == "on_boundary" for f in pts])
    return out


def boundary_census(cells: Sequence[Cell], container, mode: NumericMode = EXACT,
                    check: bool = True) -> dict:
    """Histogram ``{kind: {boundary_face_count: cells}}``."""
    region = _as_complex(container)
    if check:
        _check_tiling(cells, region, mode)
    census = {"tet": {}, "oct": {}}
    for cell, flags in zip(cells, boundary_flags(cells, region, mode)):
        k = sum(flags)
        census[cell.kind][k] = census[cell.kind].get(k, 0) + 1
    return {kind: dict(sorted(h.items(), reverse=True)) for kind, h in census.items()}


@functools.lru_cache(maxsize=None)
def proper_signed_permutations() -> tuple:
    """The 24 rotations of the cube, sorted lexicographically by entries."""
    mats = []
    for perm in itertools.permutations(range(3)):
        for signs in itertools.product((1, -1), repeat=3):
            m = tuple(tuple(_F(signs[i]) if j == perm[i] else _F(0) for j in range(3))
                      for i in range(3))
            if RigidMotion(m, (0, 0, 0)).determinant() == 1:
                mats.append(m)
    return tuple(sorted(mats, reverse=True))


@dataclass(frozen=True)
class Placement:
    slots: tuple  # slot index per cell
    motions: tuple  # RigidMotion per cell


def _rot_apply(rot, v):
    return tuple(dot(row, v) for row in rot)


@functools.lru_cache(maxsize=None)
def _shape_maps(ka: tuple, kb: tuple, kind: str) -> tuple:
    """For each rotation taking shape ``ka`` onto ``kb``: (rotation, face map)."""
    faces_a = cell_faces(ka, kind)
    faces_b = cell_faces(kb, kind)
    index_b = {v: i for i, v in enumerate(kb)}
    face_index_b = {frozenset(f): i for i, f in enumerate(faces_b)}
    out = []
    for rot in proper_signed_permutations():
        img = [index_b.get(_rot_apply(rot, v)) for v in ka]
        if None in img:
            continue
        fmap = tuple(face_index_b[frozenset(img[k] for k in f)] for f in faces_a)
        out.append((rot, fmap))
    return tuple(out)


def solve_rearrangement(cells: Sequence[Cell], container, mode: NumericMode = EXACT) -> Placement:
    """Assign every cell to a slot (a cell footprint) so no boundary face stays on the boundary.

    Candidate motions are the cube rotations plus the translation that
    carries the cell's centroid onto the slot's.  The assignment is found by
    backtracking over cells, most-constrained cell first.
    """
    if not mode.exact:
        raise NotExactMode("the placement search runs in exact mode only")
    cells = list(cells)
    flags = boundary_flags(cells, container, mode)
    keys = [c.shape_key() for c in cells]
    options = []
    for i, cell in enumerate(cells):
        bf = [k for k, f in enumerate(flags[i]) if f]
        opts = []
        for j, slot in enumerate(cells):
            if slot.kind != cell.kind:
                continue
            for rot, fmap in _shape_maps(keys[i], keys[j], cell.kind):
                if not any(flags[j][fmap[k]] for k in bf):
                    opts.append((j, rot))
                    break
        options.append(opts)

    assignment = {}
    used = set()

    def search() -> bool:
        free = [i for i in range(len(cells)) if i not in assignment]
        if not free:
            return True
        best, best_opts = None, None
        for i in free:
            live = [o for o in options[i] if o[0] not in used]
            if best_opts is None or len(live) < len(best_opts):
                best, best_opts = i, live
            if not live:
                return False
        for j, rot in best_opts:
            assignment[best] = (j, rot)
            used.add(j)
            if search():
                return True
            del assignment[best]
            used.discard(j)
        return False

    if not search():
        raise NoPlacementFound("no slot assignment internalises every boundary face")
    slots, motions = [], []
    for i, cell in enumerate(cells):
        j, rot = assignment[i]
        tr = sub(centroid(cells[j].vertices), _rot_apply(rot, centroid(cell.vertices)))
        slots.append(j)
        motions.append(RigidMotion(rot, tr))
    return Placement(tuple(slots), tuple(motions))


# -- similarity frames ---------------------------------------------------------------

def _mat_from_cols(cols):
    return tuple(tuple(c[i] for c in cols) for i in range(3))


def _mat_mul(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
                 for i in range(3))


def _mat_inv(m):
    (a, b, c), (d, e, f), (g, h, i) = m
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    if det == 0:
        raise NotRegular("degenerate frame")
    adj = ((e * i - f * h, c * h - b * i, b * f - c * e),
           (f * g - d * i, a * i - c * g, c * d - a * f),
           (d * h - e * g, b * g - a * h, a * e - b * d))
    return tuple(tuple(x / det for x in row) for row in adj)


@dataclass(frozen=True)
class Similarity:
    """``x -> linear @ x + offset`` with ``linear`` a scaled rotation or rotoreflection."""

    linear: tuple
    offset: tuple

    def apply(self, p):
        return add(_rot_apply(self.linear, p), self.offset)

    def conjugate(self, g: RigidMotion) -> RigidMotion:
        """The motion ``S g S^-1``; still a proper rigid motion."""
        inv = _mat_inv(self.linear)
        rot = _mat_mul(_mat_mul(self.linear, g.rotation), inv)
        tr = add(sub(self.offset, _rot_apply(rot, self.offset)),
                 _rot_apply(self.linear, g.translation))
        return RigidMotion(rot, tr)


def _all_edges_equal(vs, mode: NumericMode, kind: str) -> bool:
    d2 = sorted((sqnorm(sub(a, b)) for a, b in itertools.combinations(vs, 2)))
    if kind == "tet":
        return all(mode.eq(x, d2[0]) for x in d2) and mode.sign(d2[0]) > 0
    edges, diags = d2[:12], d2[12:]
    return (mode.sign(edges[0]) > 0 and all(mode.eq(x, edges[0]) for x in edges)
            and all(mode.eq(x, 2 * edges[0]) for x in diags))


def frame_for(vertices: Sequence, kind: str, mode: NumericMode = EXACT) -> Similarity:
    """Similarity taking the canonical cell of ``kind`` onto the given vertices."""
    vs = [mode.point(v) for v in vertices]
    if kind == "tet":
        if len(vs) != 4 or not _all_edges_equal(vs, mode, "tet"):
            raise NotRegular("not a regular tetrahedron")
        src = [V1, V2, V3]
        dst = [sub(v, vs[0]) for v in vs[1:]]
        src_origin, dst_origin = ORIGIN, vs[0]
        canon = CANONICAL_TET
    elif kind == "oct":
        if len(vs) != 6 or not _all_edges_equal(vs, mode, "oct"):
            raise NotRegular("not a regular octahedron")
        cu = centroid(vs)
        edge = min(sqnorm(sub(a, b)) for a, b in itertools.combinations(vs, 2))
        u0 = vs[0]
        u1 = next(v for v in vs[1:] if mode.eq(sqnorm(sub(u0, v)), edge))
        u2 = next(v for v in vs[1:] if v is not u1 and mode.eq(sqnorm(sub(u0, v)), edge)
                  and mode.eq(sqnorm(sub(u1, v)), edge))
        c0 = centroid(CANONICAL_OCT)
        src = [sub(v, c0) for v in (V1, V2, V3)]
        dst = [sub(v, cu) for v in (u0, u1, u2)]
        src_origin, dst_origin = c0, cu
        canon = CANONICAL_OCT
    else:
        raise WrongKind("unknown cell kind %r" % kind)
    src_m = _mat_from_cols([mode.point(v) for v in src])
    dst_m = _mat_from_cols(dst)
    lin = _mat_mul(dst_m, _mat_inv(src_m))
    off = sub(dst_origin, _rot_apply(lin, mode.point(src_origin)))
    S = Similarity(lin, off)
    # a similarity: L^T L = s^2 I
    ltl = _mat_mul(tuple(zip(*lin)), lin)
    s2 = ltl[0][0]
    for i in range(3):
        for j in range(3):
            if not mode.eq(ltl[i][j], s2 if i == j else 0):
                raise NotRegular("vertices are not a similar image of the canonical cell")
    images = [S.apply(mode.point(v)) for v in canon]
    for im in images:
        if not any(mode.points_equal(im, v) for v in vs):
            raise NotRegular("vertex correspondence failed")
    return S


def infer_kind(vertices: Sequence) -> str:
    if len(vertices) == 4:
        return "tet"
    if len(vertices) == 6:
        return "oct"
    raise WrongKind("a cell has 4 (tet) or 6 (oct) vertices, got %d" % len(vertices))


def _mode_for(points) -> NumericMode:
    if all(not isinstance(x, float) for p in points for x in p):
        return EXACT
    return approx()


@functools.lru_cache(maxsize=None)
def canonical_solution(kind: str, depth: int = 2) -> tuple:
    """Subdivided canonical cell and its placement (cached; deterministic)."""
    root = Cell(kind, CANONICAL_TET if kind == "tet" else CANONICAL_OCT)
    cells = subdivide([root], depth)
    return tuple(cells), solve_rearrangement(cells, root)


def _cell_pieces(vertices, kind, mode, depth=2):
    """(vertices, faces, motion) triples for one cell in user coordinates."""
    S = frame_for(vertices, kind, mode)
    cells, placement = canonical_solution(kind, depth)
    out = []
    for cell, g in zip(cells, placement.motions):
        vs = tuple(S.apply(mode.point(v)) for v in cell.vertices)
        motion = S.conjugate(RigidMotion(tuple(mode.point(r) for r in g.rotation),
                                         mode.point(g.translation)))
        out.append((vs, cell.faces, motion))
    return out


def _user_solid(vertices, kind, mode) -> ConvexPolyhedron:
    vs = tuple(sorted(mode.point(v) for v in vertices))
    return ConvexPolyhedron(vs, cell_faces(vs, kind))


def _build(raw_pieces, region: CellComplex, mode, meta) -> Dissection:
    pieces = []
    for vs, faces, motion in raw_pieces:
        _, flags = facet_flags_from_original(vs, region, mode, faces=faces)
        pieces.append(Piece(len(pieces), vs, flags, motion, faces))
    ident = RigidMotion.identity(3, mode.coerce(1))
    return Dissection(3, mode, region, ident, pieces, meta)


def _dissect_single(kind, vertices, mode, depth):
    default = CANONICAL_TET if kind == "tet" else CANONICAL_OCT
    vertices = default if vertices is None else vertices
    if mode is None:
        mode = _mode_for(vertices)
    region = CellComplex([_user_solid(vertices, kind, mode)])
    raw = _cell_pieces(vertices, kind, mode, depth)
    return _build(raw, region, mode, {"construction": kind, "depth": depth})


def dissect_regular_tetrahedron(vertices: Optional[Sequence] = None,
                                mode: Optional[NumericMode] = None, depth: int = 2) -> Dissection:
    """34 pieces: two honeycomb subdivisions, then the placement search."""
    return _dissect_single("tet", vertices, mode, depth)


def dissect_regular_octahedron(vertices: Optional[Sequence] = None,
                               mode: Optional[NumericMode] = None, depth: int = 2) -> Dissection:
    """124 pieces, as for the tetrahedron."""
    return _dissect_single("oct", vertices, mode, depth)


def _drop_axis(normal) -> int:
    return max(range(3), key=lambda k: abs(normal[k]))


def check_complex(solids: Sequence[ConvexPolyhedron], mode: NumericMode = EXACT) -> None:
    """Raise unless the cells are interior-disjoint and meet face to face."""
    for i, j in itertools.combinations(range(len(solids)), 2):
        a, b = solids[i], solids[j]
        if polyhedra_overlap(a, b, mode):
            raise CellsOverlap("cells %d and %d overlap" % (i, j))
        for fa in range(len(a.faces)):
            pa = a.face_points(fa)
            na = a.face_normal(fa)
            for fb in range(len(b.faces)):
                pb = b.face_points(fb)
                if any(mode.sign(dot(na, sub(p, pa[0]))) != 0 for p in pb):
                    continue
                k = _drop_axis(na)
                qa = [tuple(x for m, x in enumerate(p) if m != k) for p in pa]
                qb = [tuple(x for m, x in enumerate(p) if m != k) for p in pb]
                if not convex_polygons_overlap(qa, qb, mode):
                    continue
                same = len(pa) == len(pb) and all(
                    any(mode.points_equal(p, q) for q in pb) for p in pa)
                if not same:
                    raise NotFaceToFace("cells %d and %d touch along part of a face" % (i, j))


def dissect_complex(cells: Sequence, mode: Optional[NumericMode] = None,
                    depth: int = 2) -> Dissection:
    """Dissect each regular cell on its own; boundary faces of the union end up inside."""
    cell_vs = [c.vertices if isinstance(c, ConvexPolyhedron) else c for c in cells]
    if not cell_vs:
        raise ValueError("empty cell complex")
    if mode is None:
        mode = _mode_for([p for vs in cell_vs for p in vs])
    kinds = []
    for i, vs in enumerate(cell_vs):
        kind = infer_kind(vs)
        try:
            frame_for(vs, kind, mode)
        except NotRegular as exc:
            raise CellNotRegular("cell %d: %s" % (i, exc)) from None
        kinds.append(kind)
    solids = [_user_solid(vs, k, mode) for vs, k in zip(cell_vs, kinds)]
    check_complex(solids, mode)
    region = CellComplex(solids)
    raw = []
    for vs, k in zip(cell_vs, kinds):
        raw.extend(_cell_pieces(vs, k, mode, depth))
    return _build(raw, region, mode, {"construction": "complex", "depth": depth,
                                      "cells": kinds})
