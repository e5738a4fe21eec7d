"""Scalar arithmetic, rigid motions, measures and predicates.

Coordinates are plain tuples of ``Fraction`` (exact mode) or ``float``
(approx mode).  Every predicate takes a :class:`NumericMode`; in exact mode
no tolerance is ever consulted.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[Fraction, float]
Point = tuple  # tuple[Scalar, ...] of length 2 or 3


class GeometryError(ValueError):
    """Base class for kernel errors."""


class DimensionMismatch(GeometryError):
    pass


class NormMismatch(GeometryError):
    pass


class ZeroVector(GeometryError):
    pass


class InvalidPolygon(GeometryError):
    pass


class NonPlanarFace(GeometryError):
    pass


class BadOrientation(GeometryError):
    pass


class FacetOutsideShape(GeometryError):
    pass


@dataclass(frozen=True)
class NumericMode:
    exact: bool = True
    eps: float = 1e-9

    @property
    def name(self) -> str:
        return "exact" if self.exact else "approx"

    def coerce(self, x) -> Scalar:
        if self.exact:
            if isinstance(x, float):
                raise TypeError("float scalar in exact mode: %r" % (x,))
            return Fraction(x)
        return float(x)

    def point(self, coords: Iterable) -> Point:
        return tuple(self.coerce(c) for c in coords)

    def sign(self, x: Scalar) -> int:
        if self.exact:
            return (x > 0) - (x < 0)
        if abs(x) <= self.eps:
            return 0
        return 1 if x > 0 else -1

    def eq(self, a: Scalar, b: Scalar) -> bool:
        if self.exact:
            return a == b
        return abs(a - b) <= self.eps * max(1.0, abs(a), abs(b))

    def le(self, a: Scalar, b: Scalar) -> bool:
        return a <= b or self.eq(a, b)

    def lt(self, a: Scalar, b: Scalar) -> bool:
        return a < b and not self.eq(a, b)

    def points_equal(self, p: Point, q: Point) -> bool:
        return all(self.eq(a, b) for a, b in zip(p, q))


EXACT = NumericMode(True)


def approx(eps: float = 1e-9) -> NumericMode:
    return NumericMode(False, eps)


def format_scalar(x: Scalar) -> Union[str, float]:
    """Exact scalars become ``"p/q"`` (or ``"p"``); floats stay floats."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, int):
        return str(x)
    return float(x)


# -- vectors -----------------------------------------------------------------

def add(p: Point, q: Point) -> Point:
    return tuple(a + b for a, b in zip(p, q))


def sub(p: Point, q: Point) -> Point:
    return tuple(a - b for a, b in zip(p, q))


def scale(p: Point, k) -> Point:
    return tuple(a * k for a in p)


def dot(p: Point, q: Point) -> Scalar:
    return sum((a * b for a, b in zip(p, q)), 0)


def sqnorm(p: Point) -> Scalar:
    return dot(p, p)


def cross2(p: Point, q: Point) -> Scalar:
    return p[0] * q[1] - p[1] * q[0]


def cross3(p: Point, q: Point) -> Point:
    return (p[1] * q[2] - p[2] * q[1],
            p[2] * q[0] - p[0] * q[2],
            p[0] * q[1] - p[1] * q[0])


def midpoint(p: Point, q: Point) -> Point:
    return tuple((a + b) / 2 for a, b in zip(p, q))


def centroid(points: Sequence[Point]) -> Point:
    n = len(points)
    return tuple(sum(c) / n for c in zip(*points))


def orient2d(a: Point, b: Point, c: Point) -> Scalar:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def det3(a: Point, b: Point, c: Point) -> Scalar:
    return dot(a, cross3(b, c))


# -- rigid motions -------------------------------------------------------------

def _matvec(m, p: Point) -> Point:
    return tuple(dot(row, p) for row in m)


def _matmul(a, b):
    cols = list(zip(*b))
    return tuple(tuple(dot(row, col) for col in cols) for row in a)


def _transpose(m):
    return tuple(zip(*m))


def _det(m) -> Scalar:
    if len(m) == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    return det3(m[0], m[1], m[2])


@dataclass(frozen=True)
class RigidMotion:
    """``x -> rotation @ x + translation``.  Rotations are kept as matrices."""

    rotation: tuple
    translation: Point

    def __post_init__(self):
        d = len(self.rotation)
        if d not in (2, 3) or any(len(r) != d for r in self.rotation):
            raise DimensionMismatch("rotation must be 2x2 or 3x3")
        if len(self.translation) != d:
            raise DimensionMismatch("translation dimension differs from rotation")
        object.__setattr__(self, "rotation", tuple(tuple(r) for r in self.rotation))
        object.__setattr__(self, "translation", tuple(self.translation))

    @property
    def dim(self) -> int:
        return len(self.rotation)

    @classmethod
    def identity(cls, dim: int, one=Fraction(1)) -> "RigidMotion":
        zero = one - one
        rot = tuple(tuple(one if i == j else zero for j in range(dim)) for i in range(dim))
        return cls(rot, (zero,) * dim)

    def apply(self, p: Point) -> Point:
        if len(p) != self.dim:
            raise DimensionMismatch("point has dimension %d, motion %d" % (len(p), self.dim))
        return add(_matvec(self.rotation, p), self.translation)

    def apply_all(self, pts: Iterable[Point]) -> tuple:
        return tuple(self.apply(p) for p in pts)

    def compose(self, inner: "RigidMotion") -> "RigidMotion":
        """The motion ``x -> self(inner(x))``."""
        if inner.dim != self.dim:
            raise DimensionMismatch("cannot compose %dD with %dD" % (self.dim, inner.dim))
        rot = _matmul(self.rotation, inner.rotation)
        return RigidMotion(rot, self.apply(inner.translation))

    def inverse(self) -> "RigidMotion":
        rt = _transpose(self.rotation)
        return RigidMotion(rt, scale(_matvec(rt, self.translation), -1))

    def determinant(self) -> Scalar:
        return _det(self.rotation)

    def is_proper(self, mode: NumericMode = EXACT) -> bool:
        """Orthogonal with determinant +1 (reflections rejected)."""
        rt = _transpose(self.rotation)
        prod = _matmul(rt, self.rotation)
        for i, row in enumerate(prod):
            for j, v in enumerate(row):
                if not mode.eq(v, 1 if i == j else 0):
                    return False
        return mode.eq(self.determinant(), 1)

    def equals(self, other: "RigidMotion", mode: NumericMode = EXACT) -> bool:
        return (self.dim == other.dim
                and all(mode.points_equal(a, b) for a, b in zip(self.rotation, other.rotation))
                and mode.points_equal(self.translation, other.translation))


def motion_apply(motion: RigidMotion, p: Point) -> Point:
    return motion.apply(p)


def motion_compose(g: RigidMotion, h: RigidMotion) -> RigidMotion:
    return g.compose(h)


def motion_invert(g: RigidMotion) -> RigidMotion:
    return g.inverse()


def rotation2d(c: Scalar, s: Scalar) -> tuple:
    return ((c, -s), (s, c))


def rotation_between(u: Point, v: Point, mode: NumericMode = EXACT) -> tuple:
    """2D rotation matrix taking ``u`` to ``v`` (equal norms required)."""
    if len(u) != 2 or len(v) != 2:
        raise DimensionMismatch("rotation_between is 2D only")
    nu = mode.coerce(sqnorm(u))
    if mode.sign(nu) == 0:
        raise ZeroVector("u is the zero vector")
    if not mode.eq(nu, sqnorm(v)):
        raise NormMismatch("|u|^2 = %s but |v|^2 = %s" % (nu, sqnorm(v)))
    c = dot(u, v) / nu
    s = cross2(u, v) / nu
    return rotation2d(c, s)


def point_reflection(z: Point) -> RigidMotion:
    """Half turn about ``z`` (2D only; in 3D this would be improper)."""
    if len(z) != 2:
        raise DimensionMismatch("half turn about a point is a 2D motion")
    one = z[0] - z[0] + 1
    return RigidMotion(((-one, one - one), (one - one, -one)), scale(z, 2))


# -- polygons ----------------------------------------------------------------

def signed_area(vertices: Sequence[Point]) -> Scalar:
    n = len(vertices)
    acc = 0
    for i in range(n):
        acc += cross2(vertices[i], vertices[(i + 1) % n])
    return acc / 2


def polygon_area(vertices: Sequence[Point]) -> Scalar:
    return abs(signed_area(vertices))


def on_segment(p: Point, a: Point, b: Point, mode: NumericMode = EXACT) -> bool:
    """Closed-segment membership of a 2D point."""
    # the box test is cheap and rejects most candidates before orient2d
    if not (mode.le(min(a[0], b[0]), p[0]) and mode.le(p[0], max(a[0], b[0]))
            and mode.le(min(a[1], b[1]), p[1]) and mode.le(p[1], max(a[1], b[1]))):
        return False
    return mode.sign(orient2d(a, b, p)) == 0


def _boxes_apart(a: Point, b: Point, c: Point, d: Point, mode: NumericMode) -> bool:
    """Bounding boxes of [a,b] and [c,d] are disjoint (so the segments are too)."""
    for k in range(len(a)):
        if (mode.lt(max(a[k], b[k]), min(c[k], d[k]))
                or mode.lt(max(c[k], d[k]), min(a[k], b[k]))):
            return True
    return False


def segments_intersect(a: Point, b: Point, c: Point, d: Point,
                       mode: NumericMode = EXACT) -> bool:
    """Closed segments [a,b] and [c,d] share at least one point."""
    if _boxes_apart(a, b, c, d, mode):
        return False
    d1 = mode.sign(orient2d(c, d, a))
    d2 = mode.sign(orient2d(c, d, b))
    d3 = mode.sign(orient2d(a, b, c))
    d4 = mode.sign(orient2d(a, b, d))
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return (on_segment(a, c, d, mode) or on_segment(b, c, d, mode)
            or on_segment(c, a, b, mode) or on_segment(d, a, b, mode))


def is_simple(vertices: Sequence[Point], mode: NumericMode = EXACT) -> bool:
    """No consecutive duplicates and no two edges meeting except adjacent ones at their shared vertex."""
    n = len(vertices)
    if n < 3:
        return False
    for i in range(n):
        if mode.points_equal(vertices[i], vertices[(i + 1) % n]):
            return False
    edges = [(vertices[i], vertices[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        a, b = edges[i]
        for j in range(i + 1, n):
            c, d = edges[j]
            if j == i + 1:
                # adjacent edges share b and must not fold back onto each other
                if on_segment(d, a, b, mode) or on_segment(a, c, d, mode):
                    return False
                continue
            if i == 0 and j == n - 1:
                if on_segment(c, a, b, mode) or on_segment(b, c, d, mode):
                    return False
                continue
            if segments_intersect(a, b, c, d, mode):
                return False
    return True


def validate_polygon(vertices: Sequence[Point], mode: NumericMode = EXACT) -> tuple:
    """Check the simple-polygon invariants; returns the vertices in CCW order."""
    verts = tuple(vertices)
    if len(verts) < 3:
        raise InvalidPolygon("a polygon needs at least 3 vertices")
    if any(len(p) != 2 for p in verts):
        raise InvalidPolygon("polygon vertices must be 2D")
    if not is_simple(verts, mode):
        raise InvalidPolygon("polygon is not simple")
    a = signed_area(verts)
    if mode.sign(a) == 0:
        raise InvalidPolygon("polygon has zero area")
    if a < 0:
        verts = verts[::-1]
    return verts


def point_in_polygon(p: Point, vertices: Sequence[Point], mode: NumericMode = EXACT) -> str:
    """Classify ``p`` as ``"inside"``, ``"boundary"`` or ``"outside"``."""
    n = len(vertices)
    for i in range(n):
        if on_segment(p, vertices[i], vertices[(i + 1) % n], mode):
            return "boundary"
    # crossing number; boundary points were handled above
    inside = False
    x, y = p
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        if (a[1] > y) != (b[1] > y):
            o = orient2d(a, b, p)
            if (o > 0) == (b[1] > a[1]):
                inside = not inside
    return "inside" if inside else "outside"


def _segment_params(a: Point, b: Point, c: Point, d: Point, mode: NumericMode) -> list:
    """Parameters along [a,b] where it meets the closed segment [c,d]."""
    if _boxes_apart(a, b, c, d, mode):
        return []
    r = sub(b, a)
    s = sub(d, c)
    denom = cross2(r, s)
    qp = sub(c, a)
    rr = sqnorm(r)
    if mode.sign(denom) == 0:
        if mode.sign(cross2(qp, r)) != 0:
            return []
        t0 = dot(qp, r) / rr
        t1 = dot(sub(d, a), r) / rr
        lo, hi = min(t0, t1), max(t0, t1)
        out = []
        for t in (lo, hi):
            if mode.le(0, t) and mode.le(t, 1):
                out.append(t)
        return out
    t = cross2(qp, s) / denom
    u = cross2(qp, r) / denom
    if mode.le(0, t) and mode.le(t, 1) and mode.le(0, u) and mode.le(u, 1):
        return [t]
    return []


def _lerp(a: Point, b: Point, t) -> Point:
    return tuple(x + (y - x) * t for x, y in zip(a, b))


def segment_pieces(a: Point, b: Point, vertices: Sequence[Point],
                   mode: NumericMode = EXACT) -> list:
    """Split [a,b] where it meets the polygon boundary; classify each sub-segment.

    Returns ``[(t0, t1, cls)]`` with ``cls`` from :func:`point_in_polygon`.
    """
    zero = a[0] - a[0]
    params = [zero, zero + 1]
    n = len(vertices)
    for i in range(n):
        params.extend(_segment_params(a, b, vertices[i], vertices[(i + 1) % n], mode))
    params.sort()
    uniq = []
    for t in params:
        t = min(max(t, 0), 1)
        if not uniq or not mode.eq(uniq[-1], t):
            uniq.append(t)
    if mode.eq(uniq[-1], 1):
        uniq[-1] = zero + 1
    else:
        uniq.append(zero + 1)
    out = []
    for t0, t1 in zip(uniq, uniq[1:]):
        cls = point_in_polygon(_lerp(a, b, (t0 + t1) / 2), vertices, mode)
        out.append((t0, t1, cls))
    return out


def boundary_overlap_segment(a: Point, b: Point, vertices: Sequence[Point],
                             mode: NumericMode = EXACT) -> str:
    parts = segment_pieces(a, b, vertices, mode)
    kinds = {cls for _, _, cls in parts}
    if "outside" in kinds:
        raise FacetOutsideShape("segment %s-%s leaves the polygon" % (a, b))
    if kinds == {"boundary"}:
        return "on_boundary"
    if kinds == {"inside"}:
        return "interior"
    return "mixed"


def segment_in_polygon(a: Point, b: Point, vertices: Sequence[Point],
                       mode: NumericMode = EXACT) -> bool:
    return all(cls != "outside" for _, _, cls in segment_pieces(a, b, vertices, mode))


def polygon_in_polygon(inner: Sequence[Point], outer: Sequence[Point],
                       mode: NumericMode = EXACT) -> bool:
    """Closed containment of a simple polygon in a simple polygon (no holes)."""
    n = len(inner)
    return all(segment_in_polygon(inner[i], inner[(i + 1) % n], outer, mode)
               for i in range(n))


def is_convex(vertices: Sequence[Point], mode: NumericMode = EXACT) -> bool:
    """CCW polygon with no reflex vertex (collinear vertices allowed)."""
    n = len(vertices)
    return all(mode.sign(orient2d(vertices[i - 1], vertices[i], vertices[(i + 1) % n])) >= 0
               for i in range(n))


def triangulate(vertices: Sequence[Point], mode: NumericMode = EXACT) -> list:
    """Ear clipping of a simple CCW polygon into triangles."""
    poly = list(vertices)
    tris = []
    while len(poly) > 3:
        n = len(poly)
        for i in range(n):
            a, b, c = poly[i - 1], poly[i], poly[(i + 1) % n]
            if mode.sign(orient2d(a, b, c)) <= 0:
                continue
            blocked = False
            for q in poly:
                if (mode.points_equal(q, a) or mode.points_equal(q, b)
                        or mode.points_equal(q, c)):
                    continue
                if (mode.sign(orient2d(a, b, q)) >= 0 and mode.sign(orient2d(b, c, q)) >= 0
                        and mode.sign(orient2d(c, a, q)) >= 0):
                    blocked = True
                    break
            if not blocked:
                tris.append((a, b, c))
                del poly[i]
                break
        else:
            # only straight (180 degree) vertices are left to remove
            for i in range(n):
                if mode.sign(orient2d(poly[i - 1], poly[i], poly[(i + 1) % n])) == 0:
                    del poly[i]
                    break
            else:
                raise InvalidPolygon("ear clipping found no ear; polygon not simple")
    if mode.sign(orient2d(*poly)) > 0:
        tris.append(tuple(poly))
    return tris


# -- convex bodies -------------------------------------------------------------

def _projection_separates(axis: Point, pa: Sequence[Point], pb: Sequence[Point],
                          mode: NumericMode) -> bool:
    da = [dot(axis, p) for p in pa]
    db = [dot(axis, p) for p in pb]
    return mode.le(max(da), min(db)) or mode.le(max(db), min(da))


def _bbox_separated(pa: Sequence[Point], pb: Sequence[Point], mode: NumericMode) -> bool:
    for k in range(len(pa[0])):
        if (mode.le(max(p[k] for p in pa), min(p[k] for p in pb))
                or mode.le(max(p[k] for p in pb), min(p[k] for p in pa))):
            return True
    return False


def convex_polygons_overlap(pa: Sequence[Point], pb: Sequence[Point],
                            mode: NumericMode = EXACT) -> bool:
    """Separating-axis test on open interiors of two convex polygons."""
    if _bbox_separated(pa, pb, mode):
        return False
    for poly in (pa, pb):
        n = len(poly)
        for i in range(n):
            e = sub(poly[(i + 1) % n], poly[i])
            axis = (-e[1], e[0])
            if mode.sign(sqnorm(axis)) == 0:
                continue
            if _projection_separates(axis, pa, pb, mode):
                return False
    return True


@dataclass(frozen=True)
class ConvexPolyhedron:
    """Vertices plus faces as index cycles, counter-clockwise seen from outside."""

    vertices: tuple
    faces: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(tuple(v) for v in self.vertices))
        object.__setattr__(self, "faces", tuple(tuple(f) for f in self.faces))

    def face_points(self, i: int) -> tuple:
        return tuple(self.vertices[k] for k in self.faces[i])

    @functools.cached_property
    def planes(self) -> tuple:
        """``(normal, offset)`` per face; ``dot(normal, p) > offset`` is outside."""
        out = []
        for i in range(len(self.faces)):
            nrm = _polygon_normal(self.face_points(i))
            out.append((nrm, dot(nrm, self.vertices[self.faces[i][0]])))
        return tuple(out)

    def face_normal(self, i: int) -> Point:
        return self.planes[i][0]

    def edges(self) -> list:
        seen = set()
        out = []
        for f in self.faces:
            for a, b in zip(f, f[1:] + f[:1]):
                key = (min(a, b), max(a, b))
                if key not in seen:
                    seen.add(key)
                    out.append(key)
        return out

    def moved(self, motion: RigidMotion) -> "ConvexPolyhedron":
        return ConvexPolyhedron(motion.apply_all(self.vertices), self.faces)

    def contains_point(self, p: Point, mode: NumericMode = EXACT) -> bool:
        return all(mode.sign(dot(n, p) - off) <= 0 for n, off in self.planes)

    def plane_side(self, i: int, p: Point) -> Scalar:
        """Positive outside the supporting plane of face ``i``."""
        n, off = self.planes[i]
        return dot(n, p) - off


def _polygon_normal(pts: Sequence[Point]) -> Point:
    # Newell-free: sum of fan cross products, exact for planar polygons
    n = (0, 0, 0)
    o = pts[0]
    for a, b in zip(pts[1:], pts[2:]):
        n = add(n, cross3(sub(a, o), sub(b, o)))
    return n


def validate_polyhedron(q: ConvexPolyhedron, mode: NumericMode = EXACT) -> None:
    """Raise if a face is non-planar, inward-facing, or the hull/Euler checks fail."""
    for i, f in enumerate(q.faces):
        pts = q.face_points(i)
        nrm = _polygon_normal(pts)
        if mode.sign(sqnorm(nrm)) == 0:
            raise NonPlanarFace("face %d is degenerate" % i)
        for p in pts[3:]:
            if mode.sign(dot(nrm, sub(p, pts[0]))) != 0:
                raise NonPlanarFace("face %d is not planar" % i)
        for k, v in enumerate(q.vertices):
            if k in f:
                continue
            if mode.sign(dot(nrm, sub(v, pts[0]))) > 0:
                raise BadOrientation("face %d is not outward-oriented or body not convex" % i)
    V, E, F = len(q.vertices), len(q.edges()), len(q.faces)
    if V - E + F != 2:
        raise GeometryError("Euler relation fails: V-E+F = %d" % (V - E + F))


def polyhedron_volume(q: ConvexPolyhedron) -> Scalar:
    """Divergence-theorem sum of signed tetrahedra over fan-triangulated faces."""
    acc = 0
    for f in q.faces:
        o = q.vertices[f[0]]
        for a, b in zip(f[1:], f[2:]):
            acc += det3(o, q.vertices[a], q.vertices[b])
    return acc / 6


def _sort_ccw(pts: list, normal: Point, mode: NumericMode) -> list:
    c = centroid(pts)
    ref = sub(pts[0], c)

    def half(v):
        # 0 for angles in [0, pi), 1 for [pi, 2pi) measured from ref about normal
        s = mode.sign(dot(normal, cross3(ref, v)))
        if s > 0:
            return 0
        if s < 0:
            return 1
        return 0 if dot(ref, v) > 0 else 1

    def cmp(p, q):
        vp, vq = sub(p, c), sub(q, c)
        hp, hq = half(vp), half(vq)
        if hp != hq:
            return hp - hq
        s = mode.sign(dot(normal, cross3(vp, vq)))
        return -s

    return sorted(pts, key=functools.cmp_to_key(cmp))


def convex_hull_polyhedron(points: Sequence[Point], mode: NumericMode = EXACT) -> ConvexPolyhedron:
    """Brute-force hull for small vertex sets (a few dozen points at most)."""
    pts = []
    for p in points:
        if not any(mode.points_equal(p, q) for q in pts):
            pts.append(tuple(p))
    faces = []
    seen = set()
    for i, j, k in itertools.combinations(range(len(pts)), 3):
        nrm = cross3(sub(pts[j], pts[i]), sub(pts[k], pts[i]))
        if mode.sign(sqnorm(nrm)) == 0:
            continue
        sides = [mode.sign(dot(nrm, sub(p, pts[i]))) for p in pts]
        if all(s <= 0 for s in sides):
            pass
        elif all(s >= 0 for s in sides):
            nrm = scale(nrm, -1)
        else:
            continue
        on = frozenset(idx for idx, s in enumerate(sides) if s == 0)
        if on in seen:
            continue
        seen.add(on)
        ordered = _sort_ccw([pts[idx] for idx in sorted(on)], nrm, mode)
        faces.append(tuple(pts.index(p) for p in ordered))
    if len(faces) < 4:
        raise GeometryError("points do not span a solid")
    # keep only hull vertices, renumbered in first-seen order
    used = sorted({k for f in faces for k in f})
    remap = {old: new for new, old in enumerate(used)}
    return ConvexPolyhedron(tuple(pts[k] for k in used),
                            tuple(tuple(remap[k] for k in f) for f in faces))


def polyhedra_overlap(a: ConvexPolyhedron, b: ConvexPolyhedron,
                      mode: NumericMode = EXACT) -> bool:
    """Separating-axis test on open interiors of two convex polyhedra."""
    pa, pb = a.vertices, b.vertices
    if _bbox_separated(pa, pb, mode):
        return False
    for body in (a, b):
        for i in range(len(body.faces)):
            if _projection_separates(body.face_normal(i), pa, pb, mode):
                return False
    ea = [sub(pa[j], pa[i]) for i, j in a.edges()]
    eb = [sub(pb[j], pb[i]) for i, j in b.edges()]
    for u in ea:
        for v in eb:
            axis = cross3(u, v)
            if mode.sign(sqnorm(axis)) == 0:
                continue
            if _projection_separates(axis, pa, pb, mode):
                return False
    return True


def interiors_intersect(a, b, mode: NumericMode = EXACT) -> bool:
    """Open interiors of two convex bodies (vertex lists in 2D, polyhedra in 3D) meet."""
    if isinstance(a, ConvexPolyhedron) != isinstance(b, ConvexPolyhedron):
        raise DimensionMismatch("cannot compare a polygon with a polyhedron")
    if isinstance(a, ConvexPolyhedron):
        return polyhedra_overlap(a, b, mode)
    if len(a[0]) != len(b[0]):
        raise DimensionMismatch("bodies have different dimensions")
    return convex_polygons_overlap(a, b, mode)


def boundary_overlap_face(face: Sequence[Point], q: ConvexPolyhedron,
                          mode: NumericMode = EXACT) -> str:
    """Classify a planar face lying in the closed convex body ``q``.

    For a convex container the relative interior of a face is either inside
    one facet plane or entirely interior, so ``mixed`` never occurs here.
    """
    for p in face:
        if not q.contains_point(p, mode):
            raise FacetOutsideShape("face vertex %s outside the body" % (p,))
    for i in range(len(q.faces)):
        if all(mode.sign(q.plane_side(i, p)) == 0 for p in face):
            return "on_boundary"
    return "interior"


def boundary_overlap(facet, shape, mode: NumericMode = EXACT) -> str:
    """``on_boundary`` / ``interior`` / ``mixed`` for a segment or face against a shape."""
    if isinstance(shape, ConvexPolyhedron):
        return boundary_overlap_face(facet, shape, mode)
    a, b = facet
    return boundary_overlap_segment(a, b, shape, mode)
