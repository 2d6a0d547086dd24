from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orchard.exact_geom import (Point, circle_point_near, collinear_triple, integer_coords,
                                is_convex_position, is_general_position, orientation, point,
                                point_in_polygon, rational_circle_point, strictly_separates)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=60)
points = st.builds(Point, rationals, rationals)


def test_orientation_signs():
    o, a, b = point(0, 0), point(1, 0), point(0, 1)
    assert orientation(o, a, b) == 1
    assert orientation(o, b, a) == -1
    assert orientation(o, a, point(5, 0)) == 0


def test_orientation_exact_near_degenerate():
    # a float determinant would round this to zero
    eps = Fraction(1, 10**30)
    assert orientation(point(0, 0), point(1, 1), point(2, 2 + eps)) == 1


def test_strict_separation_excludes_endpoints():
    u, v = point(0, -1), point(0, 1)
    assert strictly_separates(u, v, point(-1, 5), point(1, 7))
    assert not strictly_separates(u, v, point(0, 5), point(1, 7))
    assert not strictly_separates(u, v, point(1, 5), point(2, 7))


def test_point_accepts_strings():
    assert point("1/3", 2) == Point(Fraction(1, 3), Fraction(2))


def test_integer_coords_scales_by_lcm():
    assert integer_coords([point("1/2", "1/3"), point(1, "1/6")]) == [(3, 2), (6, 1)]


def test_collinear_triple_and_duplicates():
    assert collinear_triple([point(0, 0), point(1, 1), point(3, 0), point(2, 2)]) == (0, 1, 3)
    assert collinear_triple([point(0, 0), point(1, 0), point(0, 0)]) is not None
    assert collinear_triple([point(0, 0), point(1, 0), point(0, 1)]) is None
    assert not is_general_position([point(0, 0), point(0, 0)])


def test_point_in_polygon():
    square = [point(0, 0), point(2, 0), point(2, 2), point(0, 2)]
    assert point_in_polygon(point(1, 1), square)
    assert not point_in_polygon(point(3, 1), square)
    with pytest.raises(ValueError):
        point_in_polygon(point(1, 0), square)


def test_convex_position():
    square = [point(0, 0), point(2, 0), point(2, 2), point(0, 2)]
    assert is_convex_position(square)
    assert not is_convex_position(square[:3] + [point(1, 1)])


def test_circle_point_near_is_on_circle():
    for k in range(12):
        p = circle_point_near(k * 0.5236)
        assert p.x * p.x + p.y * p.y == 1


@given(points, points, points)
def test_orientation_antisymmetric(p, q, r):
    assert orientation(p, q, r) == -orientation(q, p, r)
    assert orientation(p, q, r) == orientation(q, r, p)


@given(points, points, points, points)
def test_separation_symmetric(u, v, s, t):
    assert strictly_separates(u, v, s, t) == strictly_separates(v, u, s, t)
    assert strictly_separates(u, v, s, t) == strictly_separates(u, v, t, s)


@given(rationals)
def test_rational_circle_points_on_circle(t):
    p = rational_circle_point(t)
    assert p.x * p.x + p.y * p.y == 1


@settings(max_examples=200)
@given(st.lists(points, min_size=4, max_size=4, unique=True))
def test_four_points_pairing(pts):
    # summed over the three ways to split four points into two pairs, lines
    # separate the opposite pair twice in convex position and three times
    # when one point lies inside the triangle of the others
    if not is_general_position(pts):
        return
    total = 0
    for (i, j), (k, l) in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
        a, b, c, d = pts[i], pts[j], pts[k], pts[l]
        total += strictly_separates(a, b, c, d) + strictly_separates(c, d, a, b)
    nested = any(point_in_polygon(pts[i], [pts[j] for j in range(4) if j != i])
                 for i in range(4))
    assert total == (3 if nested else 2)


@given(points, points, points, rationals, rationals, st.integers(1, 9))
def test_orientation_affine_invariant(p, q, r, dx, dy, k):
    def move(z):
        return Point(k * z.x + dx, k * z.y + dy)
    assert orientation(move(p), move(q), move(r)) == orientation(p, q, r)
