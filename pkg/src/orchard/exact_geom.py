"""Exact rational plane geometry.

Coordinates are :class:`fractions.Fraction` values, so every predicate is
decided with integer arithmetic and never misclassifies a sign.
"""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

Rational = Fraction


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def point(x, y) -> Point:
    """Build a point from anything ``Fraction`` accepts (ints, strings, fractions)."""
    return Point(Fraction(x), Fraction(y))


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of det(q - p, r - p): +1 counterclockwise, -1 clockwise, 0 collinear."""
    det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    return (det > 0) - (det < 0)


def strictly_separates(u: Point, v: Point, s: Point, t: Point) -> bool:
    """True iff the line through u and v meets the open segment (s, t).

    A point of the segment lying on the line does not count, so lines through
    an endpoint of the segment never separate it.
    """
    return orientation(u, v, s) * orientation(u, v, t) == -1


def integer_coords(points: Sequence[Point]) -> list[tuple[int, int]]:
    """Scale all points by the lcm of their denominators.

    Positive scaling preserves every orientation sign, so predicates may run
    on the returned integers instead of fractions.
    """
    den = 1
    for p in points:
        den = math.lcm(den, p.x.denominator, p.y.denominator)
    return [(int(p.x * den), int(p.y * den)) for p in points]


def collinear_triple(points: Sequence[Point]) -> tuple[int, int, int] | None:
    """Index triple of a degenerate configuration, or None.

    Duplicate points are reported as a triple too (the duplicate pair plus any
    third index), since they are collinear with everything.
    """
    pts = integer_coords(points)
    seen: dict[tuple[int, int], int] = {}
    for i, p in enumerate(pts):
        if p in seen:
            j = seen[p]
            k = next((k for k in range(len(pts)) if k not in (i, j)), j)
            return (j, i, k)
        seen[p] = i
    for i, j, k in combinations(range(len(pts)), 3):
        (ax, ay), (bx, by), (cx, cy) = pts[i], pts[j], pts[k]
        if (bx - ax) * (cy - ay) == (by - ay) * (cx - ax):
            return (i, j, k)
    return None


def is_general_position(points: Sequence[Point]) -> bool:
    """Pairwise distinct and no three collinear."""
    if len(set(points)) != len(points):
        return False
    return collinear_triple(points) is None


def rational_circle_point(t) -> Point:
    """Point ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)) on the unit circle.

    Increasing t walks the circle counterclockwise starting at (1, 0) and
    approaching (-1, 0) from both ends.
    """
    t = Fraction(t)
    d = 1 + t * t
    return Point((1 - t * t) / d, 2 * t / d)


def circle_point_near(angle: float, max_denominator: int = 10**6) -> Point:
    """Exact rational point on the unit circle close to the given angle (radians)."""
    angle = math.remainder(angle, 2 * math.pi)
    if abs(abs(angle) - math.pi) < 1e-12:
        angle = math.copysign(math.pi - 1e-6, angle)
    t = Fraction(math.tan(angle / 2)).limit_denominator(max_denominator)
    return rational_circle_point(t)


def point_in_polygon(p: Point, polygon: Sequence[Point]) -> bool:
    """Even-odd rule membership of p in the (possibly self-intersecting) polygon.

    Raises ValueError if p lies on the boundary.
    """
    inside = False
    n = len(polygon)
    for i in range(n):
        a, b = polygon[i], polygon[(i + 1) % n]
        if orientation(a, b, p) == 0 and min(a.x, b.x) <= p.x <= max(a.x, b.x) \
                and min(a.y, b.y) <= p.y <= max(a.y, b.y):
            raise ValueError(f"point {p} lies on polygon edge {a}-{b}")
        # half-open rule on y avoids double counting vertices
        if (a.y > p.y) != (b.y > p.y):
            x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y)
            if p.x < x_cross:
                inside = not inside
    return inside


def is_convex_position(points: Iterable[Point]) -> bool:
    """True iff the points, in the given cyclic order, form a strictly convex polygon."""
    pts = list(points)
    n = len(pts)
    if n < 3:
        return True
    signs = {orientation(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]) for i in range(n)}
    if 0 in signs or len(signs) != 1:
        return False
    # turning the same way at every vertex still allows winding twice
    turn = signs.pop()
    return all(orientation(pts[0], pts[i], pts[i + 1]) == turn for i in range(1, n - 1))
