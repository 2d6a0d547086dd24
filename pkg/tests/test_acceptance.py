"""Acceptance criteria, one test per criterion.

Every test records a single PASS/FAIL line (printed live and repeated in the
terminal summary) before asserting. Values are exact integers; runtime limits
are asserted alongside the values.
"""
from __future__ import annotations

import random
import time

import pytest

from conftest import ACCEPTANCE_LINES
from orchard.bounds import (double_cover_bound, formula_value, ladder_lower, ladder_upper,
                            overcount_corrected_bound, prism_lower, prism_upper)
from orchard.constructions import construct, ladder_two_color, prism_two_color, small_case
from orchard.crossings import (Drawing, circle_drawing, convex_crossings, per_edge_crossings,
                               point_cycle_contribution, total_crossings, total_crossings_naive)
from orchard.exact_geom import orientation, point_in_polygon
from orchard.graphs import Family, FamilySpec, generate, ladder_cover, prism_cover
from orchard.reproduction import (random_convex_cycle_case, random_general_position,
                                  random_graph, random_order, random_simple_cycle_case)
from orchard.search import AnnealParams, anneal_restarts, convex_exhaustive


def record(criterion: int, title: str, failures: list[str], elapsed: float, limit: float | None):
    if limit is not None and elapsed >= limit:
        failures = failures + [f"runtime {elapsed:.1f}s >= {limit:g}s"]
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {criterion:>2} {status}  {title} ({elapsed:.2f}s)"
    if failures:
        line += ": " + "; ".join(failures)
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert not failures, line


def expect(failures: list[str], label: str, expected, actual) -> None:
    if expected != actual:
        failures.append(f"{label}: expected {expected}, got {actual}")


@pytest.mark.xfail(strict=True, reason=(
    "two triangles at a vertex need at least 4 crossings (each triangle has two outside "
    "points, each forcing one), so the stated 2 is unattainable; x=4 reaches 40, not 36"))
def test_criterion_01_formula_reproduction():
    start = time.perf_counter()
    failures: list[str] = []
    cases = [(FamilySpec(Family.DISJOINT_CYCLES, n, x), n * (n - 2) * x * (x - 1))
             for n in range(3, 7) for x in range(2, 5)]
    cases += [
        (FamilySpec(Family.CLOSED_CHAIN, 4, 3), 30),
        (FamilySpec(Family.OPEN_CHAIN, 4, 3), 36),
        (FamilySpec(Family.TRIANGLE_BOUQUET, x=2), 2),
        (FamilySpec(Family.TRIANGLE_BOUQUET, x=3), 12),
        (FamilySpec(Family.TRIANGLE_BOUQUET, x=4), 36),
        (FamilySpec(Family.THREE_CYCLES_COMMON_VERTEX, 4), 36),
        (FamilySpec(Family.STAR_K_N1, 4), 2),
        (FamilySpec(Family.STAR_K_N1, 6), 12),
        (FamilySpec(Family.STAR_K_N1, 8), 36),
    ]
    expect(failures, "disjoint_cycles n=4 x=3 example", 48,
           total_crossings(construct(FamilySpec(Family.DISJOINT_CYCLES, 4, 3))))
    for spec, value in cases:
        expect(failures, f"{spec} formula", value, formula_value(spec).exact)
        expect(failures, f"{spec} construction", value, total_crossings(construct(spec)))
    record(1, "formula reproduction", failures, time.perf_counter() - start, 5)


def _hull_edge(d: Drawing, s: int, t: int) -> bool:
    P = d.placement
    return len({orientation(P[s], P[t], P[k]) for k in range(len(P)) if k not in (s, t)}) == 1


def test_criterion_02_prism_constructions():
    start = time.perf_counter()
    failures: list[str] = []
    # n = 8 is checked against 4n(n-2) = 192
    for n, value in ((5, 62), (6, 96), (7, 142), (8, 192)):
        d = prism_two_color(n)
        expect(failures, f"P_{n}", value, total_crossings(d))
        counts = per_edge_crossings(d)
        hull = {e: c for e, c in counts.items() if _hull_edge(d, *e)}
        if not hull:
            failures.append(f"P_{n} has no hull edges")
        expect(failures, f"P_{n} hull crossings", 0, sum(hull.values()))
        if n % 2 == 0:
            inner = [c for e, c in counts.items() if e not in hull]
            expect(failures, f"P_{n} internal edges", [2 * (2 * n - 4)] * len(inner), inner)
    record(2, "prism constructions", failures, time.perf_counter() - start, 5)


def test_criterion_03_ladder_constructions():
    start = time.perf_counter()
    failures: list[str] = []
    for name, value in (("L3", 4), ("L4", 16), ("L5", 40)):
        expect(failures, name, value, total_crossings(small_case(name)))
        expect(failures, f"{name} via construct", value,
               total_crossings(construct(FamilySpec(Family.LADDER, int(name[1])))))
    for n, value in ((6, 80), (7, 120)):
        expect(failures, f"L_{n}", value, total_crossings(ladder_two_color(n)))
    record(3, "ladder constructions and exact cases", failures, time.perf_counter() - start, 5)


@pytest.mark.xfail(strict=True, reason=(
    "the ladder has n-1 squares sharing n-2 rungs; the engine then gives 4(n-2)^2, and no "
    "valid square family yields the stated 4(n-2)(n-3)"))
def test_criterion_04_lower_bound_engines():
    start = time.perf_counter()
    failures: list[str] = []
    for n in range(5, 21):
        g = generate(FamilySpec(Family.PRISM, n))
        expect(failures, f"prism double cover n={n}", 3 * n * (n - 2),
               double_cover_bound(g, prism_cover(n)))
        expect(failures, f"prism overcount n={n}", 4 * n * (n - 3),
               overcount_corrected_bound(g, g.tagged_cycles[:n], n))
    for n in range(5, 21):
        g = generate(FamilySpec(Family.LADDER, n))
        expect(failures, f"ladder double cover n={n}",
               3 * n * n - 10 * n + (8 if n % 2 == 0 else 7),
               double_cover_bound(g, ladder_cover(n)))
        # all n - 1 squares of the ladder, consecutive ones sharing a rung
        expect(failures, f"ladder overcount n={n}", 4 * (n - 2) * (n - 3),
               overcount_corrected_bound(g, g.tagged_cycles, n - 2))
    prism_switch = [n for n in range(3, 40) if 3 * n * (n - 2) >= 4 * n * (n - 3)]
    expect(failures, "prism double cover dominates up to", 6, max(prism_switch))
    ladder_switch = [n for n in range(4, 40, 2)
                     if 3 * n * n - 10 * n + 8 >= 4 * (n - 2) * (n - 3)]
    expect(failures, "ladder double cover dominates up to", 8, max(ladder_switch))
    record(4, "lower-bound engines", failures, time.perf_counter() - start, 1)


def test_criterion_05_separated_point_contribution():
    start = time.perf_counter()
    failures: list[str] = []
    rng = random.Random(2024)
    bad = 0
    for i in range(1000):
        n = rng.randint(3, 8)
        inside = i % 2 == 0
        d, cycle, p = random_convex_cycle_case(rng, n, inside)
        poly = [d.placement[v] for v in cycle]
        assert point_in_polygon(d.placement[p], poly) == inside
        bad += point_cycle_contribution(d, cycle, p) != (n if inside else n - 2)
    expect(failures, "convex placements off the exact value", 0, bad)
    bad = inside_seen = 0
    for _ in range(1000):
        n = rng.randint(3, 8)
        d, cycle, p, inside = random_simple_cycle_case(rng, n)
        inside_seen += inside
        bad += point_cycle_contribution(d, cycle, p) < (n if inside else n - 2)
    expect(failures, "simple polygons below the bound", 0, bad)
    if not 0 < inside_seen < 1000:
        failures.append(f"simple-polygon sample is one-sided ({inside_seen} inside)")
    record(5, "separated-point contribution", failures, time.perf_counter() - start, 30)


def test_criterion_06_oracle_equivalence():
    start = time.perf_counter()
    failures: list[str] = []
    rng = random.Random(7)
    bad = 0
    for _ in range(500):
        m = rng.randint(3, 12)
        d = Drawing(random_graph(rng, m, 20), tuple(random_general_position(rng, m)))
        bad += total_crossings(d) != total_crossings_naive(d)
    expect(failures, "naive vs optimized disagreements", 0, bad)
    bad = 0
    for _ in range(200):
        m = rng.randint(3, 10)
        g = random_graph(rng, m, 20)
        order = random_order(rng, m)
        bad += convex_crossings(g, order) != total_crossings(circle_drawing(g, order))
    expect(failures, "convex formula vs realized circle disagreements", 0, bad)
    record(6, "oracle equivalence", failures, time.perf_counter() - start, 60)


def test_criterion_07_exhaustive_small_cases():
    start = time.perf_counter()
    failures: list[str] = []
    for label, spec, value in (
            ("two disjoint triangles", FamilySpec(Family.DISJOINT_CYCLES, 3, 2), 6),
            ("closed chain n=3 x=3", FamilySpec(Family.CLOSED_CHAIN, 3, 3), 9),
            ("open chain n=3 x=2", FamilySpec(Family.OPEN_CHAIN, 3, 2), 4),
            ("L_3", FamilySpec(Family.LADDER, 3), 4)):
        result = convex_exhaustive(generate(spec))
        expect(failures, label, value, result.best_count)
        expect(failures, f"{label} realized", value, total_crossings_naive(result.drawing()))
    record(7, "exhaustive convex search", failures, time.perf_counter() - start, 120)


def test_criterion_08_search_vs_bounds():
    start = time.perf_counter()
    failures: list[str] = []
    for family, floor, target in ((Family.PRISM, 45, 62), (Family.LADDER, 32, 40)):
        g = generate(FamilySpec(family, 5))
        params = AnnealParams(max_steps=20_000, steps_per_temperature=100, seed=1)
        counts = [r.best_count for r in anneal_restarts(g, 20, params)]
        if min(counts) < floor:
            failures.append(f"{family.value} 5: run below certified bound {floor}: {min(counts)}")
        if min(counts) > target:
            failures.append(f"{family.value} 5: best {min(counts)} never reached {target}")
    record(8, "search vs bounds", failures, time.perf_counter() - start, 300)


def test_criterion_09_asymptotic_ratio():
    start = time.perf_counter()
    failures: list[str] = []
    n = 200
    for name, ratio in (("prism", prism_upper(n) / prism_lower(n)),
                        ("ladder", ladder_upper(n) / ladder_lower(n))):
        if not ratio < 1.05:
            failures.append(f"{name} ratio {ratio:.4f}")
    record(9, "asymptotic upper/lower ratio", failures, time.perf_counter() - start, 1)


def test_criterion_10_determinism_and_round_trip():
    start = time.perf_counter()
    failures: list[str] = []
    g = generate(FamilySpec(Family.LADDER, 4))
    params = AnnealParams(max_steps=3000, steps_per_temperature=30, seed=11)
    first = [r.to_json() for r in anneal_restarts(g, 3, params)]
    again = [r.to_json() for r in anneal_restarts(g, 3, params)]
    expect(failures, "seeded search results identical", first, again)
    exhaustive = [convex_exhaustive(g).to_json() for _ in range(2)]
    expect(failures, "exhaustive results identical", exhaustive[0], exhaustive[1])
    for spec in (FamilySpec(Family.PRISM, 7), FamilySpec(Family.TRIANGLE_BOUQUET, x=3)):
        d = construct(spec)
        back = Drawing.loads(d.dumps())
        expect(failures, f"{spec} round trip", d, back)
        expect(failures, f"{spec} text round trip", d.dumps(), back.dumps())
    record(10, "determinism and round trip", failures, time.perf_counter() - start, None)


@pytest.mark.parametrize("n", [5, 6])
def test_ladder_overcount_on_tagged_squares_is_valid(n):
    # companion to criterion 4: the engine's value on the real squares never
    # exceeds the best known drawing, so it is a valid bound
    g = generate(FamilySpec(Family.LADDER, n))
    value = overcount_corrected_bound(g, g.tagged_cycles, n - 2)
    assert value == 4 * (n - 2) ** 2
    assert value <= total_crossings(construct(FamilySpec(Family.LADDER, n)))
