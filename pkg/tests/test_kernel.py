import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from insideout.kernel import (
    EXACT,
    FacetOutsideShape,
    ConvexPolyhedron,
    InvalidPolygon,
    NormMismatch,
    RigidMotion,
    ZeroVector,
    approx,
    boundary_overlap,
    convex_hull_polyhedron,
    convex_polygons_overlap,
    format_scalar,
    interiors_intersect,
    is_convex,
    is_simple,
    motion_apply,
    motion_compose,
    motion_invert,
    orient2d,
    point_in_polygon,
    polygon_area,
    polyhedron_volume,
    rotation2d,
    rotation_between,
    signed_area,
    triangulate,
    validate_polygon,
    validate_polyhedron,
)

SQUARE = ((0, 0), (1, 0), (1, 1), (0, 1))
V1, V2, V3 = (1, 1, 0), (1, 0, 1), (0, 1, 1)
H = F(1, 2)
W1, W2, W3 = (H, H, 0), (H, 0, H), (0, H, H)


def _add(p, q):
    return tuple(a + b for a, b in zip(p, q))


def hull(points):
    return convex_hull_polyhedron([tuple(F(x) for x in p) for p in points])


# -- numeric mode ------------------------------------------------------------------

def test_approx_comparison_is_relative():
    m = approx(1e-9)
    assert m.eq(1e12, 1e12 + 100)
    assert not m.eq(1.0, 1.0 + 1e-6)
    assert m.eq(0.0, 1e-10)


def test_exact_mode_has_no_tolerance():
    assert not EXACT.eq(F(1), F(1) + F(1, 10**30))
    assert EXACT.sign(F(-1, 10**40)) == -1


def test_format_scalar():
    assert format_scalar(F(3, 7)) == "3/7"
    assert format_scalar(F(4)) == "4"
    assert format_scalar(0.25) == 0.25


# -- motions -----------------------------------------------------------------------

def test_half_turn_about_origin():
    g = RigidMotion(rotation2d(-1, 0), (0, 0))
    assert motion_apply(g, (1, 2)) == (-1, -2)


def test_identity_on_rational_point():
    assert motion_apply(RigidMotion.identity(2), (F(3, 7), 2)) == (F(3, 7), 2)


def test_signed_permutation_on_v1():
    g = RigidMotion(((0, 1, 0), (-1, 0, 0), (0, 0, 1)), (0, 0, 0))
    assert motion_apply(g, V1) == (1, -1, 0)


def test_invert_identity():
    assert motion_invert(RigidMotion.identity(2)).equals(RigidMotion.identity(2))


def test_compose_with_inverse_is_identity():
    g = RigidMotion(rotation2d(F(3, 5), F(4, 5)), (1, 0))
    assert motion_compose(g, motion_invert(g)).equals(RigidMotion.identity(2))


def test_compose_rational_rotations():
    g = RigidMotion(rotation2d(F(3, 5), F(4, 5)), (0, 0))
    h = RigidMotion(rotation2d(F(5, 13), F(12, 13)), (0, 0))
    assert motion_compose(g, h).rotation == rotation2d(F(-33, 65), F(56, 65))


@pytest.mark.parametrize("u,v,c,s", [
    ((1, 0), (0, 1), 0, 1),
    ((1, 0), (-1, 0), -1, 0),
    ((3, 4), (5, 0), F(3, 5), F(-4, 5)),
])
def test_rotation_between(u, v, c, s):
    rot = rotation_between(u, v)
    assert rot == rotation2d(c, s)
    assert motion_apply(RigidMotion(rot, (0, 0)), u) == tuple(F(x) for x in v)


def test_rotation_between_errors():
    with pytest.raises(ZeroVector):
        rotation_between((0, 0), (1, 0))
    with pytest.raises(NormMismatch):
        rotation_between((1, 0), (2, 0))


def test_reflection_is_not_proper():
    g = RigidMotion(((1, 0), (0, -1)), (0, 0))
    assert g.determinant() == -1
    assert not g.is_proper()


# -- polygons ----------------------------------------------------------------------

def test_areas():
    assert polygon_area(SQUARE) == 1
    assert polygon_area(((0, 0), (1, 0), (0, 1))) == F(1, 2)
    hexagon = [(math.cos(k * math.pi / 3), math.sin(k * math.pi / 3)) for k in range(6)]
    assert approx().eq(polygon_area(hexagon), 3 * math.sqrt(3) / 2)


def test_validate_polygon_reorients_and_rejects():
    cw = tuple(reversed(SQUARE))
    assert signed_area(validate_polygon(cw)) > 0
    with pytest.raises(InvalidPolygon):
        validate_polygon(((0, 0), (1, 1), (1, 0), (0, 1)))  # bow tie
    with pytest.raises(InvalidPolygon):
        validate_polygon(((0, 0), (1, 0)))


def test_is_simple():
    assert is_simple(SQUARE)
    assert not is_simple(((0, 0), (2, 0), (1, 0), (1, 1)))


def test_point_in_polygon():
    assert point_in_polygon((F(1, 2), F(1, 2)), SQUARE) == "inside"
    assert point_in_polygon((1, F(1, 2)), SQUARE) == "boundary"
    assert point_in_polygon((2, 0), SQUARE) == "outside"


def test_boundary_overlap_segments():
    assert boundary_overlap(((0, 0), (1, 0)), SQUARE) == "on_boundary"
    assert boundary_overlap(((F(1, 4), H), (F(3, 4), H)), SQUARE) == "interior"
    assert boundary_overlap(((0, 0), (1, 1)), SQUARE) == "interior"
    with pytest.raises(FacetOutsideShape):
        boundary_overlap(((-1, 0), (1, 0)), SQUARE)
    ell = ((0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2))
    assert boundary_overlap(((0, 1), (2, 1)), ell) == "mixed"


def test_overlap_of_squares():
    assert convex_polygons_overlap(SQUARE, SQUARE, EXACT)
    shifted = tuple((x + 2, y) for x, y in SQUARE)
    assert not convex_polygons_overlap(SQUARE, shifted, EXACT)
    touching = tuple((x + 1, y) for x, y in SQUARE)
    assert not convex_polygons_overlap(SQUARE, touching, EXACT)
    assert interiors_intersect(SQUARE, SQUARE)


def test_triangulate_reflex_pentagon():
    poly = ((0, 0), (4, 0), (4, 4), (2, 1), (0, 4))
    assert not is_convex(poly)
    tris = triangulate(poly)
    assert len(tris) == 3
    assert sum(polygon_area(t) for t in tris) == polygon_area(poly)


def test_orient2d_sign():
    assert orient2d((0, 0), (1, 0), (0, 1)) > 0
    assert orient2d((0, 0), (1, 0), (2, 0)) == 0


# -- polyhedra ---------------------------------------------------------------------

def test_volumes():
    tet = hull([(0, 0, 0), V1, V2, V3])
    octa = hull([V1, V2, V3, _add(V1, V2), _add(V1, V3), _add(V2, V3)])
    child = hull([(0, 0, 0), W1, W2, W3])
    assert polyhedron_volume(tet) == F(1, 3)
    assert polyhedron_volume(octa) == F(4, 3)
    assert polyhedron_volume(child) == F(1, 24)
    for q in (tet, octa, child):
        validate_polyhedron(q)


def test_cells_sharing_a_face_do_not_overlap():
    t1 = hull([(0, 0, 0), W1, W2, W3])
    octa = hull([W1, W2, W3, _add(W1, W2), _add(W1, W3), _add(W2, W3)])
    assert not interiors_intersect(t1, octa)
    assert interiors_intersect(octa, octa)


def test_child_face_is_interior_to_tet():
    tet = hull([(0, 0, 0), V1, V2, V3])
    assert boundary_overlap((W1, W2, W3), tet) == "interior"
    assert boundary_overlap(((0, 0, 0), W1, W2), tet) == "on_boundary"


def test_hull_drops_interior_points():
    q = hull([(0, 0, 0), V1, V2, V3, (H, H, H)])
    assert len(q.vertices) == 4 and len(q.faces) == 4
    assert isinstance(q, ConvexPolyhedron)


# -- properties --------------------------------------------------------------------

small = st.integers(min_value=-20, max_value=20)
rationals = st.fractions(min_value=-10, max_value=10, max_denominator=50)


@st.composite
def rational_rotations(draw):
    t = draw(st.integers(min_value=-30, max_value=30))
    c, s = F(t * t - 1, t * t + 1), F(2 * t, t * t + 1)
    if draw(st.booleans()):
        c, s = s, c
    return rotation2d(c, s)


@st.composite
def motions(draw):
    return RigidMotion(draw(rational_rotations()), (draw(rationals), draw(rationals)))


@st.composite
def triangles(draw):
    pts = [(draw(small), draw(small)) for _ in range(3)]
    if orient2d(*pts) == 0:
        pts = [(0, 0), (1, 0), (0, 1)]
    return pts


@settings(max_examples=60, deadline=None)
@given(triangles(), motions())
def test_area_invariant_under_motion(tri, g):
    assert polygon_area(g.apply_all(tri)) == polygon_area(tri)


@settings(max_examples=60, deadline=None)
@given(motions())
def test_motion_inverse_roundtrip(g):
    assert g.compose(g.inverse()).equals(RigidMotion.identity(2))
    assert g.is_proper()


@settings(max_examples=60, deadline=None)
@given(st.tuples(small, small), rational_rotations())
def test_rotation_between_recovers_rotation(u, rot):
    if u == (0, 0):
        return
    v = RigidMotion(rot, (0, 0)).apply(u)
    assert rotation_between(u, v) == tuple(tuple(F(x) for x in row) for row in rot)


@settings(max_examples=60, deadline=None)
@given(triangles(), motions())
def test_overlap_is_symmetric(tri, g):
    a = validate_polygon(tri)
    b = validate_polygon(g.apply_all(tri))
    assert convex_polygons_overlap(a, b, EXACT) == convex_polygons_overlap(b, a, EXACT)
