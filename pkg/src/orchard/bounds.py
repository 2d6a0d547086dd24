"""Closed-form values and lower-bound engines.

The engines turn per-cycle guarantees into bounds on a whole drawing: every
vertex off a k-cycle puts at least k - 2 crossings on that cycle's edges. A
family of cycles that covers every edge exactly twice therefore certifies
half the summed guarantees; a family of cycles that overlap on single edges
certifies the sum minus what the overlaps can double count.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Sequence

from .graphs import (Family, FamilySpec, Graph, ParameterError, cycle_edges, generate,
                     ladder_cover, prism_cover, shared_edges, validate_double_cover)


class NotADoubleCover(ValueError):
    pass


def cycle_lower_term(total_vertices: int, cycle_order: int) -> int:
    """Crossings forced on a cycle's edges by all vertices off the cycle."""
    if not total_vertices >= cycle_order >= 3:
        raise ValueError("need total_vertices >= cycle_order >= 3")
    return (total_vertices - cycle_order) * (cycle_order - 2)


def double_cover_bound(g: Graph, cycles: Sequence[Sequence[int]]) -> int:
    if not validate_double_cover(g, cycles):
        raise NotADoubleCover("cycles do not cover every edge exactly twice")
    total = sum(cycle_lower_term(g.vertex_count, len(c)) for c in cycles)
    return -(-total // 2)


def overcount_corrected_bound(g: Graph, cycles: Sequence[Sequence[int]],
                              shared: int | None = None) -> int:
    """Sum of per-cycle guarantees minus the possible double counts.

    Two cycles of orders k1, k2 sharing an edge can both claim a crossing on it
    only through a line joining one non-shared vertex from each, so at most
    (k1 - 2)(k2 - 2) crossings per shared edge are counted twice. Passing
    ``shared`` uses the square-only correction of 4 per shared edge.
    """
    m = g.vertex_count
    total = sum(cycle_lower_term(m, len(c)) for c in cycles)
    if shared is not None:
        if any(len(c) != 4 for c in cycles):
            raise ValueError("an explicit shared-edge count assumes 4-cycles")
        return total - 4 * shared
    correction = 0
    for _, ids in shared_edges(cycles):
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                correction += (len(cycles[ids[a]]) - 2) * (len(cycles[ids[b]]) - 2)
    return total - correction


def disjoint_cycles_bound(g: Graph, cycles: Sequence[Sequence[int]]) -> int:
    """Sum of per-cycle guarantees for cycles with pairwise disjoint edge sets."""
    seen: set = set()
    for c in cycles:
        es = set(cycle_edges(c))
        if es & seen:
            raise ValueError("cycles share an edge")
        seen |= es
    return sum(cycle_lower_term(g.vertex_count, len(c)) for c in cycles)


@dataclass
class BoundReport:
    family: str
    n: int
    x: int
    lower: int
    upper: int
    exact: int | None = None
    method: dict[str, str] = field(default_factory=dict)
    certified_lower: int | None = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return asdict(self)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def table(self) -> str:
        rows = [("family", self.family), ("n", self.n), ("x", self.x),
                ("exact", "-" if self.exact is None else self.exact),
                ("lower", self.lower), ("upper", self.upper)]
        if self.certified_lower is not None:
            rows.append(("certified lower", self.certified_lower))
        width = max(len(k) for k, _ in rows)
        lines = [f"{k:<{width}}  {v}" for k, v in rows]
        for key, src in self.method.items():
            lines.append(f"{'source':<{width}}  {key}: {src}")
        lines += [f"{'note':<{width}}  {note}" for note in self.notes]
        return "\n".join(lines)


def prism_lower(n: int) -> int:
    return max(3 * n * (n - 2), 4 * n * (n - 3))


def prism_upper(n: int) -> int:
    if n == 3:
        return 10
    if n == 4:
        return 32
    return 4 * n * (n - 2) + (2 if n % 2 else 0)


def ladder_lower(n: int) -> int:
    first = 3 * n * n - 10 * n + (8 if n % 2 == 0 else 7)
    return max(first, 4 * (n - 2) * (n - 3))


def ladder_upper(n: int) -> int:
    return 4 * (n - 1) * (n - 2)


def certified_lower_bound(spec: FamilySpec) -> int:
    """Best bound this module derives itself from the family's cycle structure."""
    g = generate(spec)
    f = spec.family
    if f is Family.PRISM:
        n = spec.n
        squares = list(g.tagged_cycles[:n])
        return max(double_cover_bound(g, prism_cover(n)),
                   overcount_corrected_bound(g, squares))
    if f is Family.LADDER:
        squares = list(g.tagged_cycles)
        return max(double_cover_bound(g, ladder_cover(spec.n)),
                   overcount_corrected_bound(g, squares))
    if f is Family.STAR_K_N1:
        return 0
    # the remaining families are edge-disjoint unions of their tagged cycles
    return disjoint_cycles_bound(g, g.tagged_cycles)


def formula_value(spec: FamilySpec) -> BoundReport:
    """Stated value or bounds of the Orchard crossing number for a family."""
    f, n, x = spec.family, spec.n, spec.x

    def exact(value: int, source: str) -> BoundReport:
        return BoundReport(f.value, n, x, value, value, value, {"exact": source})

    if f is Family.CYCLE:
        report = exact(0, "convex position: no point separates any edge")
    elif f is Family.DISJOINT_CYCLES:
        report = exact(n * (n - 2) * x * (x - 1), "disjoint cycles: n(n-2)x(x-1)")
    elif f is Family.CLOSED_CHAIN:
        report = exact(x * (n - 2) * (x * n - x - n), "closed chain: x(n-2)(xn-x-n)")
    elif f is Family.OPEN_CHAIN:
        report = exact(x * (x - 1) * (n - 1) * (n - 2), "open chain: x(x-1)(n-1)(n-2)")
    elif f is Family.TRIANGLE_BOUQUET:
        report = exact(x * (x - 1) ** 2, "triangle bouquet: x(x-1)^2 = OCN(K_{2x,1})")
    elif f is Family.THREE_CYCLES_COMMON_VERTEX:
        report = exact(6 * (n - 1) * (n - 2), "three n-cycles at a vertex: 6(n-1)(n-2)")
    elif f is Family.STAR_K_N1:
        if n % 2:
            raise ParameterError("the K_{n,1} value is stated for even n only")
        report = exact(n * (n - 2) ** 2 // 8, "star: n(n-2)^2/8")
    elif f is Family.PRISM:
        report = BoundReport(f.value, n, x, prism_lower(n), prism_upper(n), method={
            "lower": "max{3n(n-2) double cover, 4n(n-3) overcount}",
            "upper": {3: "P_3 drawing", 4: "P_4 drawing"}.get(
                n, "two-colour 2n-gon: 4n(n-2)" + (" + 2" if n % 2 else "")),
        })
    elif f is Family.LADDER:
        if n in (3, 4):
            report = exact({3: 4, 4: 16}[n], f"L_{n} exact value")
        else:
            report = BoundReport(f.value, n, x, ladder_lower(n),
                                 40 if n == 5 else ladder_upper(n), method={
                "lower": "max{3n^2-10n+" + ("8" if n % 2 == 0 else "7")
                         + " double cover, 4(n-2)(n-3) overcount}",
                "upper": "L_5 drawing" if n == 5 else "two-colour 2n-gon: 4(n-1)(n-2)",
            })
    else:  # pragma: no cover
        raise ParameterError(f"no formula for {f.value}")

    report.certified_lower = certified_lower_bound(spec)
    if report.certified_lower > report.upper:
        report.notes.append(
            f"stated value {report.upper} is below the certified lower bound "
            f"{report.certified_lower}")
    return report
