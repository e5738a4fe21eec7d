"""Checker for inside-out dissection records.

A record passes when its motions are proper rigid motions, the pieces tile
the original shape, the moved pieces tile the target shape, and every facet
that used to lie on the original boundary ends up strictly inside the target.
"""

from __future__ import annotations

from fractions import Fraction

from .kernel import (
    FacetOutsideShape,
    GeometryError,
    centroid,
    convex_polygons_overlap,
    is_convex,
    is_simple,
    polygon_area,
    polygon_in_polygon,
    polyhedra_overlap,
    polyhedron_volume,
    signed_area,
    triangulate,
    validate_polyhedron,
    ConvexPolyhedron,
    _segment_params,
)
from .model import BOUNDARY, CUT, Diagnostic, Dissection, VerificationReport, classify_facet


class MalformedRecord(ValueError):
    pass


class ModeMismatch(ValueError):
    pass


def _check_mode(d: Dissection) -> None:
    if not d.mode.exact:
        return

    def scalars():
        for p in d.pieces:
            for v in p.vertices:
                yield from v
            yield from p.motion.translation
            for row in p.motion.rotation:
                yield from row
        yield from d.witness_motion.translation
        for row in d.witness_motion.rotation:
            yield from row
        if d.space == 2:
            for v in d.original:
                yield from v
        else:
            for c in d.original.cells:
                for v in c.vertices:
                    yield from v

    for x in scalars():
        if not isinstance(x, (int, Fraction)):
            raise ModeMismatch("exact record contains a non-rational scalar %r" % (x,))


def check_motions(d: Dissection) -> tuple:
    diags = []
    if not d.witness_motion.is_proper(d.mode):
        diags.append(Diagnostic(None, None, "ImproperWitness"))
    for p in d.pieces:
        m = p.motion
        if not m.is_proper(d.mode):
            kind = "Reflection" if d.mode.eq(m.determinant(), -1) else "NotRigid"
            diags.append(Diagnostic(p.id, None, kind))
    return not diags, diags


def _convex_parts(vertices, mode):
    if is_convex(vertices, mode):
        return [tuple(vertices)]
    return triangulate(vertices, mode)


def check_partition(d: Dissection, use_moved: bool) -> tuple:
    """Measure accounting, containment and pairwise interior-disjointness.

    Only pieces inside the region count towards the measure sum, so a piece
    that escapes the region also shows up as a measure shortfall.
    """
    mode = d.mode
    region = d.target() if use_moved else d.original
    tag = "moved " if use_moved else ""
    diags = []
    geoms = []
    for p in d.pieces:
        verts = p.moved_vertices() if use_moved else p.vertices
        geoms.append(verts)
    total = 0
    bodies = []
    for p, verts in zip(d.pieces, geoms):
        if d.space == 2:
            if not is_simple(verts, mode) or mode.sign(signed_area(verts)) <= 0:
                diags.append(Diagnostic(p.id, None, tag + "InvalidPiece"))
                bodies.append([])
                continue
            if polygon_in_polygon(verts, region, mode):
                total += polygon_area(verts)
            else:
                diags.append(Diagnostic(p.id, None, tag + "OutsideRegion"))
            bodies.append(_convex_parts(verts, mode))
        else:
            solid = ConvexPolyhedron(verts, p.faces)
            try:
                validate_polyhedron(solid, mode)
            except GeometryError:
                diags.append(Diagnostic(p.id, None, tag + "InvalidPiece"))
                bodies.append([])
                continue
            if region.contains(solid, mode):
                total += polyhedron_volume(solid)
            else:
                diags.append(Diagnostic(p.id, None, tag + "OutsideRegion"))
            bodies.append([solid])
    target = polygon_area(region) if d.space == 2 else region.measure()
    if not mode.eq(total, target):
        diags.append(Diagnostic(None, None, tag + "MeasureMismatch", (total - target,)))
    overlap = convex_polygons_overlap if d.space == 2 else polyhedra_overlap
    for i in range(len(bodies)):
        for j in range(i + 1, len(bodies)):
            if any(overlap(a, b, mode) for a in bodies[i] for b in bodies[j]):
                diags.append(Diagnostic(i, None, tag + "Overlap", j))
    return not diags, diags


def _witness_point(pts):
    return centroid(pts)


def _boundary_covered(d: Dissection, target) -> list:
    """2D only: every edge of P' is covered by moved internal-cut edges."""
    mode = d.mode
    cuts = []
    for p in d.pieces:
        moved = p.facets(p.moved_vertices())
        cuts.extend(f for f, flag in zip(moved, p.facet_origin) if flag == CUT)
    diags = []
    n = len(target)
    for i in range(n):
        a, b = target[i], target[(i + 1) % n]
        spans = []
        for c, e in cuts:
            ts = _segment_params(a, b, c, e, mode)
            if len(ts) == 2 and not mode.eq(ts[0], ts[1]):
                # only collinear overlaps yield two parameters
                spans.append((ts[0], ts[1]))
        spans.sort()
        reach = 0
        for t0, t1 in spans:
            if mode.lt(reach, t0):
                break
            reach = max(reach, t1)
        if not mode.le(1, reach):
            diags.append(Diagnostic(None, i, "BoundaryUncovered", a))
    return diags


def check_inside_out(d: Dissection) -> tuple:
    mode = d.mode
    target = d.target()
    diags = []
    for p in d.pieces:
        for k, (facet, flag) in enumerate(zip(p.facets(), p.facet_origin)):
            try:
                cls = classify_facet(facet, d.original, mode)
            except FacetOutsideShape:
                diags.append(Diagnostic(p.id, k, "FacetOutside", _witness_point(facet)))
                continue
            if cls == "mixed":
                diags.append(Diagnostic(p.id, k, "MixedFacet", _witness_point(facet)))
            elif (flag == BOUNDARY) != (cls == "on_boundary"):
                diags.append(Diagnostic(p.id, k, "FlagMismatch", _witness_point(facet)))
        moved = p.facets(p.moved_vertices())
        for k, (facet, flag) in enumerate(zip(moved, p.facet_origin)):
            if flag != BOUNDARY:
                continue
            try:
                cls = classify_facet(facet, target, mode)
            except FacetOutsideShape:
                cls = "outside"
            if cls != "interior":
                diags.append(Diagnostic(p.id, k, "BoundaryFacetExposed", _witness_point(facet)))
    if d.space == 2:
        diags.extend(_boundary_covered(d, target))
    return not diags, diags


def verify(d: Dissection) -> VerificationReport:
    """Run every check; the report passes iff all four conditions hold."""
    if not isinstance(d, Dissection):
        raise MalformedRecord("expected a Dissection, got %r" % type(d).__name__)
    _check_mode(d)
    report = VerificationReport(piece_count=d.piece_count)
    report.motions_ok, diags = check_motions(d)
    report.diagnostics.extend(diags)
    report.partition_ok, diags = check_partition(d, use_moved=False)
    report.diagnostics.extend(diags)
    report.rearranged_partition_ok, diags = check_partition(d, use_moved=True)
    report.diagnostics.extend(diags)
    report.inside_out_ok, diags = check_inside_out(d)
    report.diagnostics.extend(diags)
    return report
