"""Claim-by-claim reproduction table used by ``orchard verify``.

Each check returns rows of (criterion, claim, expected, actual, passed).
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from typing import Callable, Iterator

from .bounds import (double_cover_bound, formula_value, ladder_lower, ladder_upper,
                     overcount_corrected_bound, prism_lower, prism_upper)
from .constructions import (construct, ladder_two_color, prism_two_color, small_case)
from .crossings import (Drawing, circle_drawing, convex_crossings,
                        per_edge_crossings, point_cycle_contribution, point_inside_cycle,
                        total_crossings, total_crossings_naive)
from .exact_geom import Point, is_general_position, orientation, rational_circle_point
from .graphs import Family, FamilySpec, Graph, generate, ladder_cover, prism_cover
from .search import AnnealParams, anneal_restarts, convex_exhaustive


@dataclass
class Row:
    criterion: int
    claim: str
    expected: str
    actual: str
    passed: bool
    seconds: float = 0.0


# -- random cases -------------------------------------------------------------

def random_rational(rng: random.Random, lo: int = -4, hi: int = 4, den: int = 97) -> Fraction:
    d = rng.randint(1, den)
    return Fraction(rng.randint(lo * d, hi * d), d)


def random_general_position(rng: random.Random, m: int) -> list[Point]:
    while True:
        pts = [Point(random_rational(rng), random_rational(rng)) for _ in range(m)]
        if is_general_position(pts):
            return pts


def random_graph(rng: random.Random, m: int, max_edges: int) -> Graph:
    pairs = list(combinations(range(m), 2))
    k = rng.randint(0, min(max_edges, len(pairs)))
    return Graph(m, tuple(rng.sample(pairs, k)))


def _angle_cmp(c: Point):
    def half(p):
        dx, dy = p.x - c.x, p.y - c.y
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp(p, q):
        hp, hq = half(p), half(q)
        if hp != hq:
            return hp - hq
        return -orientation(c, p, q)
    return cmp


def random_convex_cycle_case(rng: random.Random, n: int, inside: bool) -> tuple[Drawing, list[int], int]:
    """C_n on random unit-circle points plus one extra vertex inside or outside."""
    g = Graph(n + 1, tuple((i, (i + 1) % n) for i in range(n)))
    while True:
        ts = sorted({random_rational(rng, -6, 6, 50) for _ in range(n)})
        if len(ts) < n:
            continue
        ring = [rational_circle_point(t) for t in ts]
        if inside:
            w = [Fraction(rng.randint(1, 20)) for _ in range(n)]
            total = sum(w)
            p = Point(sum(wi * q.x for wi, q in zip(w, ring)) / total,
                      sum(wi * q.y for wi, q in zip(w, ring)) / total)
        else:
            p = Point(random_rational(rng, -3, 3), random_rational(rng, -3, 3))
            if p.x * p.x + p.y * p.y <= 1:
                continue
        pts = ring + [p]
        if is_general_position(pts):
            d = Drawing(g, tuple(pts))
            if point_inside_cycle(d, list(range(n)), n) == inside:
                return d, list(range(n)), n


def random_simple_cycle_case(rng: random.Random, n: int) -> tuple[Drawing, list[int], int, bool]:
    """C_n on a random simple (star-shaped) polygon plus one random extra vertex."""
    g = Graph(n + 1, tuple((i, (i + 1) % n) for i in range(n)))
    while True:
        pts = random_general_position(rng, n + 1)
        poly, p = pts[:n], pts[n]
        c = Point(sum(q.x for q in poly) / n, sum(q.y for q in poly) / n)
        if any(orientation(c, a, b) == 0 for a, b in combinations(poly, 2)) or c in poly:
            continue
        poly.sort(key=cmp_to_key(_angle_cmp(c)))
        d = Drawing(g, tuple(poly + [p]))
        try:
            inside = point_inside_cycle(d, list(range(n)), n)
        except ValueError:
            continue
        return d, list(range(n)), n, inside


def random_order(rng: random.Random, m: int) -> list[int]:
    order = list(range(m))
    rng.shuffle(order)
    return order


# -- checks -------------------------------------------------------------------

def _row(criterion, claim, expected, actual) -> Row:
    return Row(criterion, claim, str(expected), str(actual), expected == actual)


def check_formulas() -> Iterator[Row]:
    specs = [FamilySpec(Family.DISJOINT_CYCLES, n, x) for n in range(3, 7) for x in range(2, 5)]
    specs += [FamilySpec(Family.CLOSED_CHAIN, 4, 3), FamilySpec(Family.OPEN_CHAIN, 4, 3)]
    specs += [FamilySpec(Family.TRIANGLE_BOUQUET, x=x) for x in (2, 3, 4)]
    specs += [FamilySpec(Family.THREE_CYCLES_COMMON_VERTEX, 4)]
    specs += [FamilySpec(Family.STAR_K_N1, n) for n in (4, 6, 8)]
    for spec in specs:
        yield _row(1, f"{spec} construction", formula_value(spec).exact,
                   total_crossings(construct(spec)))


def check_prisms() -> Iterator[Row]:
    for n in (5, 6, 7, 8):
        d = prism_two_color(n)
        expected = 4 * n * (n - 2) + (2 if n % 2 else 0)
        yield _row(2, f"P_{n} two-colour construction", expected, total_crossings(d))
        counts = per_edge_crossings(d)
        hull = [c for (s, t), c in counts.items() if _hull_edge(d, s, t)]
        yield _row(2, f"P_{n} hull edges crossing-free", 0, sum(hull))
        if n % 2 == 0:
            inner = sorted(c for (s, t), c in counts.items() if not _hull_edge(d, s, t))
            yield _row(2, f"P_{n} interior edges each 2(2n-4)", [2 * (2 * n - 4)] * n, inner)


def _hull_edge(d: Drawing, s: int, t: int) -> bool:
    P = d.placement
    sides = {orientation(P[s], P[t], P[k]) for k in range(len(P)) if k not in (s, t)}
    return len(sides) == 1


def check_ladders() -> Iterator[Row]:
    for name, value in (("L3", 4), ("L4", 16), ("L5", 40)):
        yield _row(3, f"{name} drawing", value, total_crossings(small_case(name)))
    for n in (6, 7):
        yield _row(3, f"L_{n} two-colour construction", 4 * (n - 1) * (n - 2),
                   total_crossings(ladder_two_color(n)))


def check_engines() -> Iterator[Row]:
    dc, oc = [], []
    for n in range(5, 21):
        g = generate(FamilySpec(Family.PRISM, n))
        dc.append(double_cover_bound(g, prism_cover(n)) == 3 * n * (n - 2))
        oc.append(overcount_corrected_bound(g, g.tagged_cycles[:n], n) == 4 * n * (n - 3))
    yield Row(4, "prism double cover = 3n(n-2), 5<=n<=20", "all", str(sum(dc)) + "/16", all(dc))
    yield Row(4, "prism overcount = 4n(n-3), 5<=n<=20", "all", str(sum(oc)) + "/16", all(oc))
    lad_dc, lad_oc = [], []
    for n in range(5, 21):
        g = generate(FamilySpec(Family.LADDER, n))
        target = 3 * n * n - 10 * n + (8 if n % 2 == 0 else 7)
        lad_dc.append(double_cover_bound(g, ladder_cover(n)) == target)
        lad_oc.append(overcount_corrected_bound(g, g.tagged_cycles, n - 2) == 4 * (n - 2) * (n - 3))
    yield Row(4, "ladder double cover = 3n^2-10n+8/+7, 5<=n<=20", "all",
              str(sum(lad_dc)) + "/16", all(lad_dc))
    yield Row(4, "ladder overcount = 4(n-2)(n-3), 5<=n<=20", "all",
              str(sum(lad_oc)) + "/16", all(lad_oc))
    yield _row(4, "prism crossover: 3n(n-2) >= 4n(n-3) iff n <= 6", True,
               all((3 * n * (n - 2) >= 4 * n * (n - 3)) == (n <= 6) for n in range(3, 40)))
    yield _row(4, "ladder crossover: 3n^2-10n+8 >= 4(n-2)(n-3) iff n <= 8 (even n)", True,
               all((3 * n * n - 10 * n + 8 >= 4 * (n - 2) * (n - 3)) == (n <= 8)
                   for n in range(4, 40, 2)))


def check_observation(samples: int, seed: int = 2024) -> Iterator[Row]:
    rng = random.Random(seed)
    exact_ok = 0
    for i in range(samples):
        n = rng.randint(3, 8)
        inside = i % 2 == 0
        d, cyc, p = random_convex_cycle_case(rng, n, inside)
        exact_ok += point_cycle_contribution(d, cyc, p) == (n if inside else n - 2)
    yield Row(5, "convex C_n: contribution exactly n / n-2", str(samples), str(exact_ok),
              exact_ok == samples)
    bound_ok = 0
    for _ in range(samples):
        n = rng.randint(3, 8)
        d, cyc, p, inside = random_simple_cycle_case(rng, n)
        bound_ok += point_cycle_contribution(d, cyc, p) >= (n if inside else n - 2)
    yield Row(5, "simple C_n: contribution >= n / n-2", str(samples), str(bound_ok),
              bound_ok == samples)


def check_oracles(drawings: int, convex_cases: int, seed: int = 7) -> Iterator[Row]:
    rng = random.Random(seed)
    agree = 0
    for _ in range(drawings):
        m = rng.randint(3, 12)
        g = random_graph(rng, m, 20)
        d = Drawing(g, tuple(random_general_position(rng, m)))
        agree += total_crossings(d) == total_crossings_naive(d)
    yield Row(6, "naive = optimized total", str(drawings), str(agree), agree == drawings)
    agree = 0
    for _ in range(convex_cases):
        m = rng.randint(3, 10)
        g = random_graph(rng, m, 20)
        order = random_order(rng, m)
        agree += convex_crossings(g, order) == total_crossings_naive(circle_drawing(g, order))
    yield Row(6, "convex_crossings = realized circle count", str(convex_cases), str(agree),
              agree == convex_cases)


def check_exhaustive() -> Iterator[Row]:
    cases = [("two disjoint triangles", FamilySpec(Family.DISJOINT_CYCLES, 3, 2), 6),
             ("closed chain n=3 x=3", FamilySpec(Family.CLOSED_CHAIN, 3, 3), 9),
             ("open chain n=3 x=2", FamilySpec(Family.OPEN_CHAIN, 3, 2), 4),
             ("L_3", FamilySpec(Family.LADDER, 3), 4)]
    for label, spec, value in cases:
        yield _row(7, f"convex exhaustive {label}", value,
                   convex_exhaustive(generate(spec)).best_count)


def check_search(runs: int, steps: int) -> Iterator[Row]:
    for n, floor, target in (("P5", 45, 62), ("L5", 32, 40)):
        family = Family.PRISM if n[0] == "P" else Family.LADDER
        g = generate(FamilySpec(family, 5))
        params = AnnealParams(max_steps=steps, steps_per_temperature=max(1, steps // 200), seed=1)
        results = [r.best_count for r in anneal_restarts(g, runs, params)]
        yield Row(8, f"{n} anneal never below {floor}", f">= {floor}", str(min(results)),
                  min(results) >= floor)
        yield Row(8, f"{n} anneal reaches {target}", f"<= {target}", str(min(results)),
                  min(results) <= target)


def check_asymptotics() -> Iterator[Row]:
    n = 200
    ratios = {"prism": prism_upper(n) / prism_lower(n), "ladder": ladder_upper(n) / ladder_lower(n)}
    for name, ratio in ratios.items():
        yield Row(9, f"{name} upper/lower at n=200 < 1.05", "< 1.05", f"{ratio:.4f}", ratio < 1.05)


def check_determinism() -> Iterator[Row]:
    g = generate(FamilySpec(Family.LADDER, 4))
    params = AnnealParams(max_steps=2000, steps_per_temperature=20, seed=11)
    a, b = anneal_restarts(g, 2, params), anneal_restarts(g, 2, params)
    same = [x.to_json() for x in a] == [y.to_json() for y in b]
    yield _row(10, "seeded anneal reproducible", True, same)
    d = construct(FamilySpec(Family.PRISM, 7))
    yield _row(10, "JSON round trip bit-exact", True, Drawing.loads(d.dumps()) == d)


def run_all(full: bool = False) -> list[Row]:
    checks: list[Callable[[], Iterator[Row]]] = [
        check_formulas, check_prisms, check_ladders, check_engines,
        lambda: check_observation(1000 if full else 100),
        lambda: check_oracles(500 if full else 60, 200 if full else 40),
        check_exhaustive,
        lambda: check_search(20 if full else 8, 20_000),
        check_asymptotics, check_determinism,
    ]
    rows: list[Row] = []
    for check in checks:
        start = time.perf_counter()
        produced = list(check())
        elapsed = time.perf_counter() - start
        for r in produced:
            r.seconds = elapsed / len(produced)
        rows.extend(produced)
    return rows

