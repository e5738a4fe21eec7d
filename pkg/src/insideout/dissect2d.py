"""Inside-out dissections of polygons.

Two constructions live here.  The generic one puts a pair of isosceles
"collar" triangles on every edge and swaps them, which always gives
``2n + 1`` pieces.  The regular-polygon one cuts the perimeter into a few
arcs and turns each arc into a centrally symmetric piece that is flipped by a
half turn about its own centre.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .kernel import (
    EXACT,
    GeometryError,
    NumericMode,
    RigidMotion,
    add,
    approx,
    convex_polygons_overlap,
    dot,
    is_convex,
    is_simple,
    midpoint,
    point_reflection,
    polygon_area,
    polygon_in_polygon,
    rotation2d,
    rotation_between,
    scale,
    signed_area,
    sqnorm,
    sub,
    validate_polygon,
)
from .model import BOUNDARY, Dissection, Piece, facet_flags_from_original

MAX_DOUBLINGS = 64


class FeasibilitySearchExhausted(RuntimeError):
    pass


class UnsupportedN(ValueError):
    pass


class DegeneratePiece(GeometryError):
    pass


@dataclass(frozen=True)
class CollarPair:
    edge: int
    u: tuple  # (a, m, p)
    v: tuple  # (m, b, q)
    swap: RigidMotion  # maps u onto v's footprint; its inverse maps v onto u's
    t: int


def stiffness_rotation(t: int, mode: NumericMode = EXACT) -> tuple:
    """Rational point on the unit circle: c = (t^2-1)/(t^2+1), s = 2t/(t^2+1)."""
    c = Fraction(t * t - 1, t * t + 1)
    s = Fraction(2 * t, t * t + 1)
    if not mode.exact:
        c, s = float(c), float(s)
    return c, s


def _mat_apply(rot, v):
    return tuple(dot(row, v) for row in rot)


def collar_pair(P: Sequence, i: int, t: int = 2, mode: NumericMode = EXACT) -> CollarPair:
    """The two collar triangles on edge ``i`` of the CCW polygon ``P``."""
    n = len(P)
    if not 0 <= i < n:
        raise IndexError("edge index %d out of range" % i)
    if t < 2:
        raise ValueError("stiffness t must be at least 2")
    a, b = mode.point(P[i]), mode.point(P[(i + 1) % n])
    m = midpoint(a, b)
    c, s = stiffness_rotation(t, mode)
    p = add(a, _mat_apply(rotation2d(c, s), sub(m, a)))
    d = sub(b, a)
    # mirror p across the perpendicular bisector of [a, b]
    q = sub(p, scale(d, 2 * dot(sub(p, m), d) / sqnorm(d)))
    rot = rotation_between(sub(m, a), sub(q, b), mode)
    swap = RigidMotion(rot, sub(b, _mat_apply(rot, a)))
    return CollarPair(i, (a, m, p), (m, b, q), swap, t)


def _scrap_vertices(collars: Sequence[CollarPair]) -> tuple:
    out = []
    for cp in collars:
        a, m, p = cp.u
        q = cp.v[2]
        out.extend([a, p, m, q])
    return tuple(out)


def _collars_feasible(P, collars, mode) -> bool:
    tris = []
    for cp in collars:
        tris.extend([cp.u, cp.v])
    for tri in tris:
        if not polygon_in_polygon(tri, P, mode):
            return False
    for k, t1 in enumerate(tris):
        for t2 in tris[k + 1:]:
            if convex_polygons_overlap(t1, t2, mode):
                return False
    scrap = _scrap_vertices(collars)
    return is_simple(scrap, mode) and mode.sign(signed_area(scrap)) > 0


def _piece(pid, vertices, original, motion, mode) -> Piece:
    verts, flags = facet_flags_from_original(vertices, original, mode)
    return Piece(pid, verts, flags, motion)


def dissect_generic(P: Sequence, t_start: int = 2, mode: Optional[NumericMode] = None,
                    verify_result: bool = True) -> Dissection:
    """Collar-pair dissection of any simple polygon into ``2n + 1`` pieces."""
    from .verify import verify

    if mode is None:
        mode = EXACT if all(not isinstance(x, float) for p in P for x in p) else approx()
    P = validate_polygon([mode.point(p) for p in P], mode)
    n = len(P)
    ident = RigidMotion.identity(2, mode.coerce(1))
    t = t_start
    for _ in range(MAX_DOUBLINGS):
        collars = [collar_pair(P, i, t, mode) for i in range(n)]
        if _collars_feasible(P, collars, mode):
            pieces = []
            for cp in collars:
                pieces.append(_piece(len(pieces), cp.u, P, cp.swap, mode))
                pieces.append(_piece(len(pieces), cp.v, P, cp.swap.inverse(), mode))
            pieces.append(_piece(len(pieces), _scrap_vertices(collars), P, ident, mode))
            d = Dissection(2, mode, P, ident, pieces,
                           {"construction": "generic", "t": t})
            if not verify_result or verify(d).passed:
                return d
        t *= 2
    raise FeasibilitySearchExhausted("no feasible stiffness after %d doublings" % MAX_DOUBLINGS)


# -- regular polygons ------------------------------------------------------------

def regular_polygon(n: int, circumradius=1, mode: Optional[NumericMode] = None) -> tuple:
    """CCW vertices ``r (cos 2 pi k/n, sin 2 pi k/n)``; floats (approx mode)."""
    if n < 3:
        raise UnsupportedN("a polygon needs n >= 3")
    r = float(circumradius)
    return tuple((r * math.cos(2 * math.pi * k / n), r * math.sin(2 * math.pi * k / n))
                 for k in range(n))


def perimeter_point(P: Sequence, s) -> tuple:
    """Point at perimeter position ``s`` measured in edges from vertex 0."""
    n = len(P)
    k = math.floor(s)
    f = s - k
    a, b = P[k % n], P[(k + 1) % n]
    if f == 0:
        return a
    return add(a, scale(sub(b, a), f))


@dataclass(frozen=True)
class ChainPiece:
    start: object  # perimeter position of the first chain point
    stop: object
    outer: tuple  # boundary chain x, v1, ..., vm, y
    center: tuple
    vertices: tuple
    motion: RigidMotion


def chain_piece(P: Sequence, start, stop, mode: NumericMode = EXACT) -> ChainPiece:
    """Centrally symmetric piece over the boundary arc from ``start`` to ``stop``.

    The centre is the midpoint of the chord, so the arc's mirror image through
    it ends exactly at the arc's endpoints and the piece is the arc's cap
    glued to its own half-turned copy.
    """
    P = [mode.point(p) for p in P]
    n = len(P)
    x = perimeter_point(P, start)
    y = perimeter_point(P, stop)
    first = math.floor(start) + 1
    last = math.ceil(stop) - 1
    inner = [P[k % n] for k in range(first, last + 1)]
    if not inner:
        raise DegeneratePiece("arc %s..%s holds no polygon vertex" % (start, stop))
    z = midpoint(x, y)
    mirrored = [sub(scale(z, 2), v) for v in inner]
    verts = [x] + inner + [y] + mirrored
    clean = []
    for v in verts:
        if not clean or not mode.points_equal(clean[-1], v):
            clean.append(v)
    while len(clean) > 1 and mode.points_equal(clean[0], clean[-1]):
        clean.pop()
    if len(clean) < 3:
        raise DegeneratePiece("chain piece collapsed to %d vertices" % len(clean))
    return ChainPiece(start, stop, tuple([x] + inner + [y]), z, tuple(clean),
                      point_reflection(z))


def _chain_scrap(pieces: Sequence[ChainPiece], mode: NumericMode) -> tuple:
    out = []
    for cp in pieces:
        x, y = cp.outer[0], cp.outer[-1]
        out.append(x)
        for v in reversed(cp.outer[1:-1]):
            out.append(add(x, sub(y, v)))
    clean = []
    for v in out:
        if not clean or not mode.points_equal(clean[-1], v):
            clean.append(v)
    while len(clean) > 1 and mode.points_equal(clean[0], clean[-1]):
        clean.pop()
    return tuple(clean)


def _chains_feasible(P, chains, mode) -> bool:
    for cp in chains:
        if not (is_simple(cp.vertices, mode) and is_convex(cp.vertices, mode)):
            return False
        if not polygon_in_polygon(cp.vertices, P, mode):
            return False
        _, flags = facet_flags_from_original(cp.vertices, P, mode)
        if sum(f == BOUNDARY for f in flags) != len(cp.outer) - 1:
            return False
    for k, c1 in enumerate(chains):
        for c2 in chains[k + 1:]:
            if convex_polygons_overlap(c1.vertices, c2.vertices, mode):
                return False
    return True


def dissect_chains(P: Sequence, positions: Sequence, mode: Optional[NumericMode] = None,
                   verify_result: bool = True) -> Optional[Dissection]:
    """Chain-piece dissection of a convex polygon with arcs split at ``positions``.

    Returns ``None`` when the pieces do not fit (overlap, leave ``P``, or an
    inner chain touches the boundary) or the result fails verification.
    """
    from .verify import verify

    if mode is None:
        mode = EXACT if all(not isinstance(x, float) for p in P for x in p) else approx()
    P = validate_polygon([mode.point(p) for p in P], mode)
    n = len(P)
    pos = list(positions)
    try:
        chains = [chain_piece(P, s, pos[(j + 1) % len(pos)] + (n if j + 1 == len(pos) else 0), mode)
                  for j, s in enumerate(pos)]
    except DegeneratePiece:
        return None
    if not _chains_feasible(P, chains, mode):
        return None
    pieces = [_piece(j, cp.vertices, P, cp.motion, mode) for j, cp in enumerate(chains)]
    residual = polygon_area(P) - sum(polygon_area(cp.vertices) for cp in chains)
    if mode.sign(residual) != 0:
        scrap = _chain_scrap(chains, mode)
        if not is_simple(scrap, mode):
            return None
        ident = RigidMotion.identity(2, mode.coerce(1))
        pieces.append(_piece(len(pieces), scrap, P, ident, mode))
    ident = RigidMotion.identity(2, mode.coerce(1))
    d = Dissection(2, mode, P, ident, pieces, {
        "construction": "chains",
        "positions": [str(Fraction(s)) for s in pos],
        "fallback": False,
    })
    if verify_result and not verify(d).passed:
        return None
    return d


def candidate_plans(n: int):
    """Evenly spaced split positions, fewest arcs first, vertex phase before mid-edge."""
    for k in (3, 4, 5):
        for phase in (Fraction(0), Fraction(1, 2)):
            yield k, [phase + Fraction(j * n, k) for j in range(k)]


def plan_chains(n: int, circumradius=1) -> list:
    """Arc lengths (in edges) of the first plan that yields a valid dissection."""
    if n < 5:
        raise UnsupportedN("chain plans need n >= 5")
    d = dissect_regular(n, circumradius)
    pos = [Fraction(s) for s in d.metadata["positions"]]
    return [(pos[(j + 1) % len(pos)] - pos[j]) % n for j in range(len(pos))]


def dissect_regular(n: int, circumradius=1, mode: Optional[NumericMode] = None) -> Dissection:
    """At most 6 pieces for n >= 5; n = 3, 4 fall back to the generic construction."""
    if n < 3:
        raise UnsupportedN("a polygon needs n >= 3")
    if mode is None:
        mode = approx()
    P = regular_polygon(n, circumradius)
    if n < 5:
        d = dissect_generic(P, mode=mode)
        meta = dict(d.metadata, fallback=True, n=n)
        return Dissection(d.space, d.mode, d.original, d.witness_motion, d.pieces, meta)
    for k, positions in candidate_plans(n):
        d = dissect_chains(P, positions, mode)
        if d is not None:
            meta = dict(d.metadata, n=n, arcs=k)
            return Dissection(d.space, d.mode, d.original, d.witness_motion, d.pieces, meta)
    raise FeasibilitySearchExhausted("no chain plan fits the regular %d-gon" % n)
