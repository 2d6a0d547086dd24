"""Orchard crossing counts of rectilinear drawings.

An edge (s, t) is crossed once for every pair of drawing points {u, v} whose
line meets the open segment (s, t). Lines through s or t never count, so the
pair {s, t} itself and pairs sharing an endpoint drop out without special
cases.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .exact_geom import (Point, collinear_triple, integer_coords, point_in_polygon,
                         rational_circle_point, strictly_separates)
from .graphs import Edge, Graph, cycle_edges


class UsageError(ValueError):
    """Caller violated an operation precondition."""


class GeneralPositionError(ValueError):
    """Placement is not injective or has a collinear triple."""

    def __init__(self, triple: tuple[int, int, int]):
        super().__init__(f"vertices {triple} are collinear or coincide")
        self.triple = triple


@dataclass(frozen=True)
class Drawing:
    graph: Graph
    placement: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple(Point(Fraction(p[0]), Fraction(p[1])) for p in self.placement)
        object.__setattr__(self, "placement", pts)
        if len(pts) != self.graph.vertex_count:
            raise UsageError(f"{len(pts)} points for {self.graph.vertex_count} vertices")
        bad = collinear_triple(pts)
        if bad is not None:
            raise GeneralPositionError(bad)

    def to_json(self) -> dict:
        return {
            "graph": self.graph.to_json(),
            "points": [[[p.x.numerator, p.x.denominator], [p.y.numerator, p.y.denominator]]
                       for p in self.placement],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Drawing":
        pts = [Point(Fraction(int(x[0]), int(x[1])), Fraction(int(y[0]), int(y[1])))
               for x, y in data["points"]]
        return cls(Graph.from_json(data["graph"]), tuple(pts))

    def dumps(self, indent: int | None = None) -> str:
        return json.dumps(self.to_json(), indent=indent)

    @classmethod
    def loads(cls, text: str) -> "Drawing":
        return cls.from_json(json.loads(text))


@dataclass(frozen=True)
class CircularOrder:
    """Cyclic vertex order of a convex-position drawing, stored canonically.

    Canonical form starts at the smallest label and runs in the direction whose
    second element is smaller than the last, so rotations and reflections of
    the same order compare equal.
    """
    order: tuple[int, ...]

    def __post_init__(self):
        order = tuple(self.order)
        if sorted(order) != list(range(len(order))):
            raise UsageError(f"{order} is not a permutation of 0..{len(order) - 1}")
        object.__setattr__(self, "order", canonical_order(order))

    def positions(self) -> list[int]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos


def canonical_order(order: Sequence[int]) -> tuple[int, ...]:
    m = len(order)
    if m < 3:
        return tuple(sorted(order))
    k = order.index(min(order))
    rot = tuple(order[k:]) + tuple(order[:k])
    if rot[1] > rot[-1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


def edge_crossings(d: Drawing, edge: Edge) -> int:
    """Number of point-pair lines meeting the open segment of the edge."""
    s, t = edge
    if not d.graph.has_edge(s, t):
        raise UsageError(f"{edge} is not an edge of the graph")
    P = d.placement
    return sum(strictly_separates(P[u], P[v], P[s], P[t])
               for u, v in combinations(range(len(P)), 2))


def total_crossings_naive(d: Drawing) -> int:
    """Reference count: every edge against every pair, with fraction arithmetic."""
    P = d.placement
    pairs = list(combinations(range(len(P)), 2))
    return sum(strictly_separates(P[u], P[v], P[s], P[t])
               for s, t in d.graph.edges for u, v in pairs)


def _line_crossings(pts: list[tuple[int, int]], edges: Sequence[Edge], u: int, v: int) -> int:
    (ux, uy), (vx, vy) = pts[u], pts[v]
    dx, dy = vx - ux, vy - uy
    side = [(dx * (y - uy) > dy * (x - ux)) - (dx * (y - uy) < dy * (x - ux)) for x, y in pts]
    return sum(side[s] * side[t] < 0 for s, t in edges)


def total_crossings(d: Drawing, threads: int = 1) -> int:
    """Sum of edge crossings over all edges.

    Works line by line: the side of every point is computed once per line on
    integer-scaled coordinates, then each edge is tested by a sign product.
    With ``threads > 1`` the lines are split across worker processes; the sum
    is the same as the sequential one.
    """
    pts = integer_coords(d.placement)
    edges = d.graph.edges
    pairs = list(combinations(range(len(pts)), 2))
    if threads > 1 and len(pairs) > 2000:
        from concurrent.futures import ProcessPoolExecutor
        chunks = [pairs[i::threads] for i in range(threads)]
        with ProcessPoolExecutor(threads) as pool:
            return sum(pool.map(_chunk_crossings, [(pts, edges, c) for c in chunks]))
    return sum(_line_crossings(pts, edges, u, v) for u, v in pairs)


def _chunk_crossings(args) -> int:
    pts, edges, pairs = args
    return sum(_line_crossings(pts, edges, u, v) for u, v in pairs)


def per_edge_crossings(d: Drawing) -> dict[Edge, int]:
    pts = integer_coords(d.placement)
    counts = {e: 0 for e in d.graph.edges}
    for u, v in combinations(range(len(pts)), 2):
        (ux, uy), (vx, vy) = pts[u], pts[v]
        dx, dy = vx - ux, vy - uy
        side = [(dx * (y - uy) > dy * (x - ux)) - (dx * (y - uy) < dy * (x - ux)) for x, y in pts]
        for e in d.graph.edges:
            if side[e[0]] * side[e[1]] < 0:
                counts[e] += 1
    return counts


def point_cycle_contribution(d: Drawing, cycle: Sequence[int], p: int) -> int:
    """Crossings on the cycle's edges made by lines through p and a cycle vertex."""
    if p in cycle:
        raise UsageError(f"vertex {p} lies on the cycle")
    edges = cycle_edges(cycle)
    for e in edges:
        if not d.graph.has_edge(*e):
            raise UsageError(f"cycle edge {e} is not in the graph")
    P = d.placement
    return sum(strictly_separates(P[p], P[v], P[s], P[t])
               for v in cycle for s, t in edges)


def point_inside_cycle(d: Drawing, cycle: Sequence[int], p: int) -> bool:
    """Even-odd membership of vertex p in the polygon traced by the cycle."""
    return point_in_polygon(d.placement[p], [d.placement[v] for v in cycle])


def convex_edge_crossings(m: int, pos: Sequence[int], edge: Edge) -> int:
    """Crossings of a chord whose endpoints sit at the given circle positions.

    Pair {u, v} crosses chord (s, t) iff u and v lie on different open arcs
    cut off by s and t, so the count is k * (m - 2 - k) with k points on one arc.
    """
    k = (pos[edge[1]] - pos[edge[0]] - 1) % m
    return k * (m - 2 - k)


def convex_crossings(g: Graph, order: CircularOrder | Sequence[int]) -> int:
    """Total crossings of any drawing with the vertices on a circle in this order."""
    seq = order.order if isinstance(order, CircularOrder) else tuple(order)
    m = g.vertex_count
    if sorted(seq) != list(range(m)):
        raise UsageError("order must permute the graph's vertices")
    pos = [0] * m
    for i, v in enumerate(seq):
        pos[v] = i
    return sum(convex_edge_crossings(m, pos, e) for e in g.edges)


def convex_crossings_by_arcs(g: Graph, order: Sequence[int]) -> int:
    """Pair-by-pair version of :func:`convex_crossings`, kept as a cross-check."""
    m = len(order)
    pos = [0] * m
    for i, v in enumerate(order):
        pos[v] = i

    def on_open_arc(w, a, b):
        # arc from a to b in the order's direction, endpoints excluded
        return 0 < (pos[w] - pos[a]) % m < (pos[b] - pos[a]) % m

    total = 0
    for s, t in g.edges:
        for u, v in combinations(range(m), 2):
            if {u, v} & {s, t}:
                continue
            total += on_open_arc(s, u, v) != on_open_arc(t, u, v)
    return total


def circle_drawing(g: Graph, order: CircularOrder | Sequence[int]) -> Drawing:
    """Realize a circular order on rational unit-circle points."""
    seq = order.order if isinstance(order, CircularOrder) else tuple(order)
    m = len(seq)
    placement: list[Point | None] = [None] * m
    for i, v in enumerate(seq):
        placement[v] = rational_circle_point(Fraction(2 * i - m + 1, 2))
    return Drawing(g, tuple(placement))
