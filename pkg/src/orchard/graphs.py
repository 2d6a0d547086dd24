"""Graph model and generators for the cycle-based families.

Canonical vertex numbering per family (drawings and constructions rely on it):

* ``cycle``: 0..n-1 around the cycle.
* ``disjoint_cycles``, ``closed_chain``, ``open_chain``: every constituent
  cycle is a contiguous run of n labels, so labels listed in increasing order
  are exactly the convex block layout. Cycle i starts at label i*n
  (disjoint) or i*(n-1) (chains); in chains the last label of cycle i is the
  first label of cycle i+1 (taken mod the vertex count for the closed chain).
  Consequently the two shared vertices of a chain cycle are adjacent along it.
* ``triangle_bouquet``: common vertex 0, triangle i is (0, 2i+1, 2i+2).
* ``three_cycles_common_vertex``: common vertex 0, cycle i is
  0, 1+i(n-1), ..., (i+1)(n-1).
* ``star_k_n1``: center 0, leaves 1..n.
* ``prism``: outer cycle 0..n-1, inner cycle n..2n-1, rung i -- n+i.
* ``ladder``: rails 0..n-1 and n..2n-1, rung i -- n+i.
"""
from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

Edge = tuple[int, int]
Cycle = tuple[int, ...]


class ParameterError(ValueError):
    """Family parameters outside the valid range."""


class Family(str, enum.Enum):
    CYCLE = "cycle"
    DISJOINT_CYCLES = "disjoint_cycles"
    CLOSED_CHAIN = "closed_chain"
    OPEN_CHAIN = "open_chain"
    TRIANGLE_BOUQUET = "triangle_bouquet"
    THREE_CYCLES_COMMON_VERTEX = "three_cycles_common_vertex"
    STAR_K_N1 = "star_k_n1"
    PRISM = "prism"
    LADDER = "ladder"

    @classmethod
    def parse(cls, name: str) -> "Family":
        key = name.strip().lower().replace("-", "_")
        key = _ALIASES.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise ParameterError(f"unknown family {name!r}") from None


_ALIASES = {
    "bouquet": "triangle_bouquet",
    "three_cycles": "three_cycles_common_vertex",
    "star": "star_k_n1",
    "disjoint": "disjoint_cycles",
}


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def cycle_edges(cycle: Sequence[int]) -> list[Edge]:
    k = len(cycle)
    return [norm_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[Edge, ...]
    tagged_cycles: tuple[Cycle, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        norm = tuple(norm_edge(u, v) for u, v in self.edges)
        object.__setattr__(self, "edges", norm)
        object.__setattr__(self, "tagged_cycles", tuple(tuple(c) for c in self.tagged_cycles))
        if self.vertex_count < 0:
            raise ValueError("negative vertex count")
        if len(set(norm)) != len(norm):
            raise ValueError("duplicate edge")
        for u, v in norm:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge {(u, v)} out of range")
        edge_set = set(norm)
        for c in self.tagged_cycles:
            if len(c) < 3 or len(set(c)) != len(c):
                raise ValueError(f"tagged cycle {c} is not a simple cycle")
            missing = [e for e in cycle_edges(c) if e not in edge_set]
            if missing:
                raise ValueError(f"tagged cycle {c} uses non-edges {missing}")

    @property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edge_set

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)

    def without_edges(self, removed: Sequence[Edge]) -> "Graph":
        drop = {norm_edge(*e) for e in removed}
        return Graph(self.vertex_count, tuple(e for e in self.edges if e not in drop))

    def to_json(self) -> dict:
        out = {"vertex_count": self.vertex_count, "edges": [list(e) for e in self.edges]}
        if self.tagged_cycles:
            out["cycles"] = [list(c) for c in self.tagged_cycles]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        return cls(
            int(data["vertex_count"]),
            tuple((int(u), int(v)) for u, v in data["edges"]),
            tuple(tuple(int(i) for i in c) for c in data.get("cycles", ())),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json())


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int = 3
    x: int = 1

    def __post_init__(self):
        object.__setattr__(self, "family", Family.parse(self.family)
                           if isinstance(self.family, str) else self.family)
        validate_spec(self)

    def __str__(self) -> str:
        if self.family is Family.TRIANGLE_BOUQUET:
            return f"{self.family.value}(x={self.x})"
        if self.family in (Family.DISJOINT_CYCLES, Family.CLOSED_CHAIN, Family.OPEN_CHAIN):
            return f"{self.family.value}(n={self.n}, x={self.x})"
        return f"{self.family.value}(n={self.n})"


def validate_spec(spec: FamilySpec) -> None:
    f, n, x = spec.family, spec.n, spec.x
    if f is Family.STAR_K_N1:
        if n < 1:
            raise ParameterError("star_k_n1 needs n >= 1 leaves")
        return
    if f is not Family.TRIANGLE_BOUQUET and n < 3:
        raise ParameterError(f"{f.value} needs n >= 3, got {n}")
    if x < 1:
        raise ParameterError(f"x must be >= 1, got {x}")
    if f is Family.CLOSED_CHAIN and x < 3:
        # x = 2 would join the same two shared vertices twice
        raise ParameterError("closed_chain needs x >= 3")


def _blocks(x: int, n: int, stride: int, total: int) -> list[Cycle]:
    return [tuple((i * stride + j) % total for j in range(n)) for i in range(x)]


def _from_cycles(vertex_count: int, cycles: list[Cycle], extra: Sequence[Edge] = (),
                 tagged: list[Cycle] | None = None, name: str = "") -> Graph:
    edges: dict[Edge, None] = {}
    for c in cycles:
        for e in cycle_edges(c):
            edges[e] = None
    for e in extra:
        edges[norm_edge(*e)] = None
    return Graph(vertex_count, tuple(edges), tuple(cycles if tagged is None else tagged), name)


def generate(spec: FamilySpec) -> Graph:
    """Graph of the given family with canonical numbering and tagged cycles."""
    f, n, x = spec.family, spec.n, spec.x
    name = str(spec)
    if f is Family.CYCLE:
        return _from_cycles(n, [tuple(range(n))], name=name)
    if f is Family.DISJOINT_CYCLES:
        return _from_cycles(n * x, _blocks(x, n, n, n * x), name=name)
    if f is Family.CLOSED_CHAIN:
        total = x * (n - 1)
        return _from_cycles(total, _blocks(x, n, n - 1, total), name=name)
    if f is Family.OPEN_CHAIN:
        total = x * (n - 1) + 1
        return _from_cycles(total, _blocks(x, n, n - 1, total), name=name)
    if f is Family.TRIANGLE_BOUQUET:
        return _from_cycles(2 * x + 1, [(0, 2 * i + 1, 2 * i + 2) for i in range(x)], name=name)
    if f is Family.THREE_CYCLES_COMMON_VERTEX:
        cycles = [(0,) + tuple(1 + i * (n - 1) + j for j in range(n - 1)) for i in range(3)]
        return _from_cycles(3 * (n - 1) + 1, cycles, name=name)
    if f is Family.STAR_K_N1:
        return Graph(n + 1, tuple((0, i) for i in range(1, n + 1)), name=name)
    if f is Family.PRISM:
        squares = [(i, (i + 1) % n, n + (i + 1) % n, n + i) for i in range(n)]
        outer, inner = tuple(range(n)), tuple(range(n, 2 * n))
        return _from_cycles(2 * n, [outer, inner], [(i, n + i) for i in range(n)],
                            tagged=squares + [outer, inner], name=name)
    if f is Family.LADDER:
        squares = [(i, i + 1, n + i + 1, n + i) for i in range(n - 1)]
        return _from_cycles(2 * n, squares, tagged=squares, name=name)
    raise ParameterError(f"no generator for {f}")  # pragma: no cover


def ladder_cover(n: int) -> list[Cycle]:
    """Cycle double cover of the n-ladder: n-2 squares plus an upper and a lower cycle.

    The square between rungs j and j+1 is left out, with j = n//2 for even n
    (two cycles of order n+2) and j = (n-1)//2 for odd n (orders n+3 and n+1).
    Labels are 0-based: rung i joins i and n+i.
    """
    if n < 3:
        raise ParameterError("ladder needs n >= 3")
    j = (n // 2 if n % 2 == 0 else (n - 1) // 2) - 1
    squares = [(i, i + 1, n + i + 1, n + i) for i in range(n - 1) if i != j]
    upper = tuple(range(j, n)) + tuple(n + i for i in range(n - 1, j - 1, -1))
    lower = tuple(range(0, j + 2)) + tuple(n + i for i in range(j + 1, -1, -1))
    return squares + [upper, lower]


def prism_cover(n: int) -> list[Cycle]:
    """The n squares and both n-cycles of the prism; every edge lies on exactly two."""
    return list(generate(FamilySpec(Family.PRISM, n)).tagged_cycles)


def edge_multiplicity(cycles: Sequence[Sequence[int]]) -> Counter:
    return Counter(e for c in cycles for e in cycle_edges(c))


def validate_double_cover(g: Graph, cycles: Sequence[Sequence[int]]) -> bool:
    """True iff every edge of g lies on exactly two of the cycles (and they use only g's edges)."""
    mult = edge_multiplicity(cycles)
    if not set(mult) <= g.edge_set:
        return False
    return all(mult[e] == 2 for e in g.edges)


def shared_edges(cycles: Sequence[Sequence[int]]) -> list[tuple[Edge, list[int]]]:
    """Edges lying on two or more of the cycles, with the indices of those cycles."""
    where: dict[Edge, list[int]] = {}
    for idx, c in enumerate(cycles):
        for e in cycle_edges(c):
            where.setdefault(e, []).append(idx)
    return [(e, ids) for e, ids in where.items() if len(ids) > 1]
