import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from insideout.dissect2d import (
    UnsupportedN,
    chain_piece,
    collar_pair,
    dissect_chains,
    dissect_generic,
    dissect_regular,
    plan_chains,
    regular_polygon,
    stiffness_rotation,
)
from insideout.kernel import EXACT, approx, polygon_area, sqnorm, sub
from insideout.model import BOUNDARY
from insideout.verify import verify

TRIANGLE = ((0, 0), (1, 0), (0, 1))
SQUARE = ((0, 0), (1, 0), (1, 1), (0, 1))
HEXAGON = ((2, 0), (1, 1), (-1, 1), (-2, 0), (-1, -1), (1, -1))


def _edge_multiset(tri):
    return sorted(sqnorm(sub(tri[i], tri[(i + 1) % 3])) for i in range(3))


def test_stiffness_rotation_is_on_unit_circle():
    for t in range(2, 20):
        c, s = stiffness_rotation(t)
        assert c * c + s * s == 1


def test_collar_pair_closed_form():
    P = ((-1, 0), (1, 0), (0, 5))
    cp = collar_pair(P, 0, t=2)
    assert stiffness_rotation(2) == (F(3, 5), F(4, 5))
    a, m, p = cp.u
    assert m == (0, 0)
    assert p == (F(-2, 5), F(4, 5))
    assert cp.v[2] == (F(2, 5), F(4, 5))
    assert cp.swap.apply((-1, 0)) == (1, 0)
    assert cp.swap.apply((0, 0)) == (F(2, 5), F(4, 5))
    assert cp.swap.apply((F(-2, 5), F(4, 5))) == (0, 0)
    assert cp.swap.determinant() == 1


def test_collar_flattens_for_large_t():
    P = ((-1, 0), (1, 0), (0, 5))
    cp = collar_pair(P, 0, t=100)
    assert cp.u[2][1] < F(2, 50)  # height below |e|/50


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=2, max_value=200))
def test_collar_halves_are_congruent(t):
    P = ((0, 0), (3, 1), (1, 4))
    cp = collar_pair(P, 1, t=t)
    assert _edge_multiset(cp.u) == _edge_multiset(cp.v)
    a, m, p = cp.u
    assert sqnorm(sub(p, a)) == sqnorm(sub(m, a))


@pytest.mark.parametrize("poly,t_min", [
    (TRIANGLE, 2),
    (SQUARE, 2),
    (((0, 0), (10, 0), (5, F(1, 10))), 16),
])
def test_generic_counts_and_verifies(poly, t_min):
    d = dissect_generic(poly)
    assert d.piece_count == 2 * len(poly) + 1
    assert d.mode.exact
    assert d.metadata["t"] >= t_min
    assert verify(d).passed


def test_generic_reflex_pentagon():
    d = dissect_generic(((0, 0), (4, 0), (4, 4), (2, 1), (0, 4)))
    assert d.piece_count == 11 and verify(d).passed


def test_thin_triangle_needs_stiffer_collar():
    fat = dissect_generic(TRIANGLE).metadata["t"]
    thin = dissect_generic(((0, 0), (10, 0), (5, F(1, 10)))).metadata["t"]
    assert thin > fat


def test_chain_piece_hexagon_rhombus():
    cp = chain_piece(HEXAGON, 0, 2, EXACT)
    assert cp.center == (F(1, 2), F(1, 2))
    assert cp.vertices == ((2, 0), (1, 1), (-1, 1), (0, 0))
    for v in cp.vertices:
        assert cp.motion.apply(v) in cp.vertices


def test_exact_affine_hexagon_three_parallelograms():
    d = dissect_chains(HEXAGON, [0, 2, 4], EXACT)
    assert d.piece_count == 3
    for p in d.pieces:
        v = p.vertices
        assert len(v) == 4
        assert sub(v[1], v[0]) == sub(v[2], v[3])
    assert verify(d).passed


def test_square_four_chain_pieces():
    d = dissect_chains(SQUARE, [F(1, 2), F(3, 2), F(5, 2), F(7, 2)], EXACT)
    assert d.piece_count == 4 and verify(d).passed


def test_infeasible_chain_plan_returns_none():
    assert dissect_chains(regular_polygon(9), [0, 3, 6]) is None


def test_regular_hexagon():
    d = dissect_regular(6)
    assert d.piece_count == 3
    assert plan_chains(6) == [2, 2, 2]
    m = approx(1e-9)
    for p in d.pieces:
        sides = [sqnorm(sub(p.vertices[i], p.vertices[(i + 1) % 4])) for i in range(4)]
        assert all(m.eq(s, sides[0]) for s in sides)
    assert m.eq(sum(polygon_area(p.vertices) for p in d.pieces), polygon_area(d.original))


@pytest.mark.parametrize("n", [5, 7, 8, 9, 10, 12, 17, 30])
def test_regular_at_most_six(n):
    d = dissect_regular(n)
    assert d.piece_count <= 6
    assert not d.metadata["fallback"]
    assert verify(d).passed


@pytest.mark.parametrize("n,count", [(3, 7), (4, 9)])
def test_small_regular_falls_back(n, count):
    d = dissect_regular(n)
    assert d.piece_count == count and d.metadata["fallback"]
    assert verify(d).passed


def test_regular_rejects_tiny_n():
    with pytest.raises(UnsupportedN):
        dissect_regular(2)


def test_regular_polygon_circumradius():
    P = regular_polygon(8, 2.5)
    assert all(math.isclose(math.hypot(*p), 2.5) for p in P)


def test_collar_boundary_flags():
    d = dissect_generic(TRIANGLE)
    for p in d.pieces[:-1]:
        assert list(p.facet_origin).count(BOUNDARY) == 1
