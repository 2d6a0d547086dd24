"""Explicit drawings for the cycle-based families.

All points are exact rationals on the unit circle (plus the origin for the
central-star families). Angles only guide where those rationals are picked;
what matters for the count is the resulting circular order and, for central
stars, on which side of each line through the origin every point falls.
"""
from __future__ import annotations

import math

from .crossings import Drawing, circle_drawing, total_crossings
from .exact_geom import Point, circle_point_near, point
from .graphs import Family, FamilySpec, Graph, ParameterError, generate


class ConstructionError(ValueError):
    """No construction is available for the requested parameters."""


def _ring(angles: list[float]) -> list[Point]:
    return [circle_point_near(a) for a in angles]


def regular_polygon(m: int, offset: float = 0.0) -> list[Point]:
    return _ring([offset + 2 * math.pi * k / m for k in range(m)])


def convex_blocks(spec: FamilySpec) -> Drawing:
    """Every cycle on a contiguous arc of a convex polygon.

    Canonical numbering already lists each cycle as a contiguous run of labels,
    so the polygon order is the identity; each cycle keeps a single interior
    chord, the one joining the ends of its run.
    """
    if spec.family not in (Family.DISJOINT_CYCLES, Family.CLOSED_CHAIN, Family.OPEN_CHAIN):
        raise ConstructionError(f"convex_blocks does not handle {spec.family.value}")
    g = generate(spec)
    return Drawing(g, tuple(regular_polygon(g.vertex_count)))


def _antipodal_ring(m: int, even_x_split: bool) -> list[Point]:
    """m points near a regular m-gon (m even), no two exactly opposite.

    Point j is nudged by +delta or -delta. Whatever the signs, every open
    half-plane through the center holds m/2 - 1 or m/2 points, which is what
    an optimal star K_{m,1} needs. The signs only decide which wedges
    between neighbours receive the antipode of another point.
    """
    delta = math.pi / (4 * m)
    half = m // 2
    angles = []
    for j in range(m):
        if even_x_split:
            sign = 1 if j < half else -1
        else:
            sign = 1 if j % 2 == 0 else -1
        angles.append(2 * math.pi * j / m + sign * delta)
    return _ring(angles)


def central_star(spec: FamilySpec) -> Drawing:
    """Common vertex at the origin, the other vertices on the unit circle.

    Triangle bouquet: the 2x outer points sit near a regular 2x-gon and each
    triangle takes two neighbouring positions. For odd x the nudges alternate,
    which leaves the double wedge of every triangle free of other points, so
    the triangle edges on the hull carry no crossings. For even x the
    antipode of position j is position j + x of the same parity and one of
    every antipodal pair must land inside a neighbouring wedge; this layout
    pays exactly one extra crossing per pair and per colour, x in total.

    Three n-cycles: three blocks of n-1 points centred 120 degrees apart, each
    narrow enough that its double wedge holds no other point.

    K_{n,1}: n points near a regular n-gon with antipodes split as above.
    """
    g = generate(spec)
    origin = point(0, 0)
    if spec.family is Family.TRIANGLE_BOUQUET:
        outer = _antipodal_ring(2 * spec.x, even_x_split=spec.x % 2 == 0)
    elif spec.family is Family.STAR_K_N1:
        n = spec.n
        outer = _antipodal_ring(n, True) if n % 2 == 0 else regular_polygon(n, math.pi / (2 * n))
    elif spec.family is Family.THREE_CYCLES_COMMON_VERTEX:
        k = spec.n - 1
        half_width = math.pi / 12
        outer = []
        for i in range(3):
            centre = 2 * math.pi * i / 3
            outer += _ring([centre - half_width + 2 * half_width * j / (k - 1) for j in range(k)])
    else:
        raise ConstructionError(f"central_star does not handle {spec.family.value}")
    return Drawing(g, (origin,) + tuple(outer))


def _two_color_positions(n: int) -> tuple[list[int], list[int]]:
    """Positions 0..2n-1 of white and black vertices around the 2n-gon.

    Pattern W W B B W W B B ...; for odd n the last two positions are one
    white then one black.
    """
    white, black = [], []
    for p in range(2 * n):
        (white if p % 4 < 2 else black).append(p)
    if n % 2 == 1:
        # positions 2n-2, 2n-1 came out W W; make the last one black
        white.remove(2 * n - 1)
        black.append(2 * n - 1)
    return white, black


def _prism_layout(n: int) -> list[int]:
    """Label -> position map for the two-colour prism drawing.

    Whites in increasing position get labels 0..n-1 (each joined to the next
    white along the polygon). Every white has exactly one black neighbour on
    the polygon that is not excluded; that black gets label n + its white's
    label. For odd n the polygon edge between the lone white and black pair
    (positions 2n-2 and 2n-1) is skipped, so the last white is matched
    backwards and position 2n-1 is matched to position 0 across the wrap.
    """
    m = 2 * n
    white, black = _two_color_positions(n)
    black_set = set(black)
    color_at = {p: "W" for p in white} | {p: "B" for p in black}
    lone = (m - 2, m - 1) if n % 2 == 1 else None
    label_at = {}
    for i, p in enumerate(white):
        label_at[p] = i
    for i, p in enumerate(white):
        candidates = [(p - 1) % m, (p + 1) % m]
        partners = [q for q in candidates if q in black_set and
                    not (lone and {p, q} == set(lone))]
        # exactly one polygon neighbour remains a valid partner
        assert len(partners) == 1, (n, p, partners)
        label_at[partners[0]] = n + i
    assert len(label_at) == m and set(color_at) == set(label_at)
    pos = [0] * m
    for p, label in label_at.items():
        pos[label] = p
    return pos


def _place(g: Graph, pos: list[int]) -> Drawing:
    ring = regular_polygon(len(pos))
    return Drawing(g, tuple(ring[p] for p in pos))


def prism_two_color(n: int) -> Drawing:
    """Prism on a regular 2n-gon coloured in pairs, n > 4.

    Same-colour neighbours are joined cyclically and rungs are the polygon
    edges between colours. Even n: n interior chords, each with 2(2n-4)
    crossings. Odd n: the lone white/black pair is not joined by a rung; the
    chords skipping one point carry 2n-3 crossings each.
    """
    if n <= 4:
        raise ConstructionError("two-colour prism needs n > 4; use small_case")
    g = generate(FamilySpec(Family.PRISM, n))
    return _place(g, _prism_layout(n))


def ladder_two_color(n: int) -> Drawing:
    """Two-colour prism layout with the closing square's two rails removed, n > 5.

    The removed rails are (n-1, 0) and (2n-1, n): for even n this square has
    one rail on the hull and one interior chord; for odd n both are the chords
    that skip a single point of the other colour.
    """
    if n <= 5:
        raise ConstructionError("two-colour ladder needs n > 5; use small_case")
    g = generate(FamilySpec(Family.LADDER, n))
    return _place(g, _prism_layout(n))


# Circular orders found by exhaustive convex search (`orchard search --mode convex`),
# each the lexicographically first optimum; counts are asserted by the test suite.
SMALL_CASES: dict[str, tuple[Family, int, tuple[int, ...], int]] = {
    "P3": (Family.PRISM, 3, (0, 1, 2, 5, 4, 3), 10),
    "P4": (Family.PRISM, 4, (0, 1, 2, 3, 7, 6, 5, 4), 32),
    "L3": (Family.LADDER, 3, (0, 1, 2, 5, 4, 3), 4),
    "L4": (Family.LADDER, 4, (0, 1, 2, 3, 7, 6, 5, 4), 16),
    "L5": (Family.LADDER, 5, (0, 1, 2, 3, 4, 9, 8, 7, 6, 5), 40),
}


def small_case(name: str) -> Drawing:
    try:
        family, n, order, _ = SMALL_CASES[name.upper()]
    except KeyError:
        raise ConstructionError(f"unknown small case {name!r}") from None
    g = generate(FamilySpec(family, n))
    ring = regular_polygon(len(order))
    placement: list[Point | None] = [None] * len(order)
    for i, v in enumerate(order):
        placement[v] = ring[i]
    return Drawing(g, tuple(placement))


def ladder_rails_side_by_side(n: int) -> Drawing:
    """Convex drawing with one rail in order and the other reversed beside it.

    This is the shape of the small-case optima and also gives 4(n-1)(n-2)
    crossings at n = 6.
    """
    g = generate(FamilySpec(Family.LADDER, n))
    order = list(range(n)) + list(range(2 * n - 1, n - 1, -1))
    return circle_drawing(g, order)


def construct(spec: FamilySpec) -> Drawing:
    """Best available construction for the family."""
    f, n = spec.family, spec.n
    if f is Family.CYCLE:
        return Drawing(generate(spec), tuple(regular_polygon(n)))
    if f in (Family.DISJOINT_CYCLES, Family.CLOSED_CHAIN, Family.OPEN_CHAIN):
        return convex_blocks(spec)
    if f in (Family.TRIANGLE_BOUQUET, Family.THREE_CYCLES_COMMON_VERTEX, Family.STAR_K_N1):
        return central_star(spec)
    if f is Family.PRISM:
        return small_case(f"P{n}") if n <= 4 else prism_two_color(n)
    if f is Family.LADDER:
        return small_case(f"L{n}") if n <= 5 else ladder_two_color(n)
    raise ParameterError(f"no construction for {f.value}")  # pragma: no cover


def construction_count(spec: FamilySpec) -> int:
    return total_crossings(construct(spec))
