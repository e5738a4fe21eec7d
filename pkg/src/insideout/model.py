"""Dissection records: pieces, the original shape, and verification reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .kernel import (
    EXACT,
    ConvexPolyhedron,
    FacetOutsideShape,
    GeometryError,
    NumericMode,
    RigidMotion,
    boundary_overlap_face,
    format_scalar,
    polygon_area,
    polyhedron_volume,
    segment_pieces,
    _lerp,
)

BOUNDARY = "boundary"
CUT = "cut"


class RecordError(ValueError):
    """A dissection record violates a structural invariant."""


@dataclass(frozen=True)
class CellComplex:
    """A polyhedron given as convex cells meeting face to face."""

    cells: tuple

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(self.cells))

    def measure(self):
        return sum((polyhedron_volume(c) for c in self.cells), 0)

    def moved(self, motion: RigidMotion) -> "CellComplex":
        return CellComplex(tuple(c.moved(motion) for c in self.cells))

    def _face_shared(self, ci: int, fi: int, mode: NumericMode) -> bool:
        pts = self.cells[ci].face_points(fi)
        for cj, other in enumerate(self.cells):
            if cj == ci:
                continue
            for fj in range(len(other.faces)):
                qs = other.face_points(fj)
                if len(qs) == len(pts) and all(
                        any(mode.points_equal(p, q) for q in qs) for p in pts):
                    return True
        return False

    def containing_cells(self, pts: Sequence, mode: NumericMode = EXACT) -> list:
        return [i for i, c in enumerate(self.cells)
                if all(c.contains_point(p, mode) for p in pts)]

    def classify_face(self, pts: Sequence, mode: NumericMode = EXACT) -> str:
        """``on_boundary`` if the face lies in an unshared cell facet, else ``interior``."""
        hosts = self.containing_cells(pts, mode)
        if not hosts:
            raise FacetOutsideShape("face is not inside any single cell")
        for ci in hosts:
            cell = self.cells[ci]
            for fi in range(len(cell.faces)):
                if all(mode.sign(cell.plane_side(fi, p)) == 0 for p in pts):
                    if not self._face_shared(ci, fi, mode):
                        return "on_boundary"
        return "interior"

    def contains(self, body: ConvexPolyhedron, mode: NumericMode = EXACT) -> bool:
        return bool(self.containing_cells(body.vertices, mode))


@dataclass(frozen=True)
class Piece:
    id: int
    vertices: tuple
    facet_origin: tuple
    motion: RigidMotion
    faces: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(tuple(v) for v in self.vertices))
        object.__setattr__(self, "facet_origin", tuple(self.facet_origin))
        if self.faces is not None:
            object.__setattr__(self, "faces", tuple(tuple(f) for f in self.faces))
        bad = [f for f in self.facet_origin if f not in (BOUNDARY, CUT)]
        if bad:
            raise RecordError("piece %d: unknown facet flag %r" % (self.id, bad[0]))
        if len(self.facet_origin) != self.facet_count:
            raise RecordError("piece %d: %d facet flags for %d facets"
                              % (self.id, len(self.facet_origin), self.facet_count))

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    @property
    def facet_count(self) -> int:
        return len(self.vertices) if self.faces is None else len(self.faces)

    @property
    def solid(self) -> ConvexPolyhedron:
        return ConvexPolyhedron(self.vertices, self.faces)

    def facets(self, vertices: Optional[Sequence] = None) -> list:
        """Facet point tuples: edges ``(v[i], v[i+1])`` in 2D, face cycles in 3D."""
        vs = self.vertices if vertices is None else vertices
        if self.faces is None:
            n = len(vs)
            return [(vs[i], vs[(i + 1) % n]) for i in range(n)]
        return [tuple(vs[k] for k in f) for f in self.faces]

    def moved_vertices(self) -> tuple:
        return self.motion.apply_all(self.vertices)

    def measure(self):
        if self.faces is None:
            return polygon_area(self.vertices)
        return polyhedron_volume(self.solid)


@dataclass(frozen=True)
class Dissection:
    space: int
    mode: NumericMode
    original: object  # polygon vertex tuple (2D) or CellComplex (3D)
    witness_motion: RigidMotion
    pieces: tuple
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if self.space not in (2, 3):
            raise RecordError("space must be 2 or 3")
        if not self.pieces:
            raise RecordError("a dissection needs at least one piece")
        if [p.id for p in self.pieces] != list(range(len(self.pieces))):
            raise RecordError("piece ids must be 0..k-1 in order")
        if self.witness_motion.dim != self.space:
            raise RecordError("witness motion dimension differs from space")
        for p in self.pieces:
            if p.dim != self.space or p.motion.dim != self.space:
                raise RecordError("piece %d has the wrong dimension" % p.id)
            if (p.faces is None) != (self.space == 2):
                raise RecordError("piece %d: faces are required exactly in 3D" % p.id)
        if self.space == 2 and isinstance(self.original, CellComplex):
            raise RecordError("2D record with a cell-complex original")
        if self.space == 3 and not isinstance(self.original, CellComplex):
            raise RecordError("3D record needs a cell-complex original")

    @property
    def piece_count(self) -> int:
        return len(self.pieces)

    def original_measure(self):
        if self.space == 2:
            return polygon_area(self.original)
        return self.original.measure()

    def target(self):
        """The region P' = witness(P)."""
        if self.space == 2:
            return self.witness_motion.apply_all(self.original)
        return self.original.moved(self.witness_motion)


def classify_facet(facet: Sequence, region, mode: NumericMode = EXACT) -> str:
    if isinstance(region, CellComplex):
        return region.classify_face(facet, mode)
    if isinstance(region, ConvexPolyhedron):
        return boundary_overlap_face(facet, region, mode)
    kinds = {cls for _, _, cls in segment_pieces(facet[0], facet[1], region, mode)}
    if "outside" in kinds:
        raise FacetOutsideShape("segment %s-%s leaves the polygon" % tuple(facet))
    if kinds == {"boundary"}:
        return "on_boundary"
    if kinds == {"inside"}:
        return "interior"
    return "mixed"


def _flag(cls: str) -> str:
    return BOUNDARY if cls == "on_boundary" else CUT


def facet_flags_from_original(vertices: Sequence, original, mode: NumericMode = EXACT,
                              faces: Optional[Sequence] = None):
    """Flag each facet by whether it lies on the original boundary.

    Returns ``(vertices, flags)``.  In 2D, edges that are partly on the
    boundary are split at the transition points, so the returned vertex list
    may be longer than the input.
    """
    if faces is not None:
        flags = []
        for f in faces:
            pts = [vertices[k] for k in f]
            cls = classify_facet(pts, original, mode)
            if cls == "mixed":
                raise GeometryError("3D facets cannot be split")
            flags.append(_flag(cls))
        return tuple(vertices), tuple(flags)
    out_v, out_f = [], []
    n = len(vertices)
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        parts = segment_pieces(a, b, original, mode)
        if any(cls == "outside" for _, _, cls in parts):
            raise FacetOutsideShape("edge %d of the piece leaves the original" % i)
        # merge consecutive parts of one kind so only real transitions split
        runs = []
        for t0, t1, cls in parts:
            kind = BOUNDARY if cls == "boundary" else CUT
            if runs and runs[-1][2] == kind:
                runs[-1][1] = t1
            else:
                runs.append([t0, t1, kind])
        for t0, _, kind in runs:
            out_v.append(a if t0 == 0 else _lerp(a, b, t0))
            out_f.append(kind)
    return tuple(out_v), tuple(out_f)


@dataclass(frozen=True)
class Diagnostic:
    piece: Optional[int]
    facet: Optional[int]
    kind: str
    location: object = None

    def to_json(self) -> dict:
        loc = self.location
        if isinstance(loc, tuple):
            loc = [format_scalar(x) for x in loc]
        return {"piece": self.piece, "facet": self.facet, "kind": self.kind,
                "location": loc}


@dataclass
class VerificationReport:
    partition_ok: bool = True
    rearranged_partition_ok: bool = True
    motions_ok: bool = True
    inside_out_ok: bool = True
    piece_count: int = 0
    diagnostics: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (self.partition_ok and self.rearranged_partition_ok
                and self.motions_ok and self.inside_out_ok)

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "piece_count": self.piece_count,
            "conditions": {
                "partition": self.partition_ok,
                "rearranged_partition": self.rearranged_partition_ok,
                "motions": self.motions_ok,
                "inside_out": self.inside_out_ok,
            },
            "diagnostics": [d.to_json() for d in self.diagnostics],
        }
