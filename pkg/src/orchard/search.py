"""Minimizing Orchard crossings over drawings.

Three strategies: exhaustive enumeration of circular orders (convex position),
random sampling of circular orders for larger graphs, and simulated annealing
over general-position placements.

Annealing runs on a lattice of points with coordinates k / 2**16. On that
lattice, orientation determinants fit comfortably in int64, so a full recount
is a handful of exact numpy integer operations.
"""
from __future__ import annotations

import logging
import math
import os
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations, permutations

import numpy as np

from .crossings import (CircularOrder, Drawing, circle_drawing, convex_crossings,
                        total_crossings_naive)
from .exact_geom import Point
from .graphs import FamilySpec, Graph, generate

log = logging.getLogger(__name__)

DEFAULT_CONVEX_CAP = 10
DENOMINATOR = 2**16
# lattice coordinates stay within +-BOX units, keeping determinants below 2**45
BOX = 16 * DENOMINATOR


class SearchRefused(ValueError):
    """The requested search is larger than the configured cap."""


def resolve_threads(threads: int | None = None) -> int:
    if threads:
        return max(1, int(threads))
    env = os.environ.get("ORCHARD_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass
class SearchResult:
    best_count: int
    best_drawing: Drawing | CircularOrder
    evaluations: int
    mode: str
    seed: int = 0
    stage: str = ""
    graph: Graph | None = field(default=None, repr=False)

    def drawing(self) -> Drawing:
        if isinstance(self.best_drawing, Drawing):
            return self.best_drawing
        return circle_drawing(self.graph, self.best_drawing)

    def to_json(self) -> dict:
        out = {
            "best_count": self.best_count,
            "evaluations": self.evaluations,
            "mode": self.mode,
            "seed": self.seed,
            "stage": self.stage,
        }
        if isinstance(self.best_drawing, CircularOrder):
            out["circular_order"] = list(self.best_drawing.order)
            if self.graph is not None:
                out["graph"] = self.graph.to_json()
        else:
            out["drawing"] = self.best_drawing.to_json()
        return out


def _verified(result: SearchResult) -> SearchResult:
    recount = total_crossings_naive(result.drawing())
    if recount != result.best_count:
        raise AssertionError(f"search reported {result.best_count}, oracle says {recount}")
    return result


# -- convex position ---------------------------------------------------------

def canonical_order_count(m: int) -> int:
    return math.factorial(m - 1) // 2 if m >= 3 else 1


def _edge_arrays(g: Graph):
    e = np.array(g.edges, dtype=np.int64).reshape(-1, 2)
    return e[:, 0], e[:, 1]


def _scan_orders(args):
    """Best canonical order among those starting (0, first, ...)."""
    g, first, objective = args
    m = g.vertex_count
    S, T = _edge_arrays(g)
    rest = [v for v in range(1, m) if v != first]
    best, best_order, count = None, None, 0
    sign = 1 if objective == "min" else -1
    for tail in permutations(rest):
        if first > tail[-1]:
            continue
        order = (0, first) + tail
        count += 1
        pos = np.empty(m, dtype=np.int64)
        pos[list(order)] = np.arange(m)
        k = (pos[T] - pos[S] - 1) % m
        value = int((k * (m - 2 - k)).sum())
        if best is None or sign * value < sign * best:
            best, best_order = value, order
    return best, best_order, count


def convex_exhaustive(g: Graph, objective: str = "min", cap: int = DEFAULT_CONVEX_CAP,
                      threads: int = 1) -> SearchResult:
    """Optimize over every canonical circular order.

    Ties go to the lexicographically smallest canonical order. Work is split by
    the second element of the order and reduced in that fixed order, so the
    answer does not depend on ``threads``.
    """
    if objective not in ("min", "max"):
        raise ValueError("objective must be 'min' or 'max'")
    m = g.vertex_count
    if m > cap:
        raise SearchRefused(
            f"{m} vertices exceeds the exhaustive cap of {cap} "
            f"({canonical_order_count(m)} orders); use convex_sampled or raise the cap")
    if m < 3:
        order = CircularOrder(tuple(range(m)))
        return _verified(SearchResult(convex_crossings(g, order), order, 1,
                                      "convex_exhaustive", graph=g, stage="convex_exhaustive"))
    tasks = [(g, first, objective) for first in range(1, m)]
    if threads > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(threads) as pool:
            parts = list(pool.map(_scan_orders, tasks))
    else:
        parts = [_scan_orders(t) for t in tasks]
    sign = 1 if objective == "min" else -1
    best, best_order, total = None, None, 0
    for value, order, count in parts:
        total += count
        if value is not None and (best is None or sign * value < sign * best):
            best, best_order = value, order
    return _verified(SearchResult(best, CircularOrder(best_order), total,
                                  "convex_exhaustive", graph=g, stage="convex_exhaustive"))


def convex_sampled(g: Graph, samples: int, seed: int = 0, objective: str = "min") -> SearchResult:
    """Best of uniformly random circular orders."""
    rng = np.random.default_rng(seed)
    m = g.vertex_count
    sign = 1 if objective == "min" else -1
    best, best_order = None, None
    for _ in range(samples):
        order = CircularOrder(tuple(int(v) for v in rng.permutation(m)))
        value = convex_crossings(g, order)
        if best is None or sign * value < sign * best or (value == best and order.order < best_order.order):
            best, best_order = value, order
    return _verified(SearchResult(best, best_order, samples, "convex_sampled", seed,
                                  graph=g, stage="convex_sampled"))


# -- annealing ---------------------------------------------------------------

@dataclass(frozen=True)
class AnnealParams:
    initial_temperature: Fraction | None = None  # None: mean |delta| over probe moves
    cooling_factor: Fraction = Fraction(98, 100)
    steps_per_temperature: int = 200
    max_steps: int = 200_000
    move_scale: Fraction = Fraction(1, 2)
    seed: int = 0
    probe_moves: int = 100

    def __post_init__(self):
        if not 0 < self.cooling_factor < 1:
            raise ValueError("cooling_factor must lie in (0, 1)")
        if self.steps_per_temperature <= 0 or self.max_steps <= 0 or self.move_scale <= 0:
            raise ValueError("annealing parameters must be positive")
        if self.initial_temperature is not None and self.initial_temperature <= 0:
            raise ValueError("initial_temperature must be positive")


class LatticeCounter:
    """Exact crossing counter for lattice placements (int64, vectorized)."""

    def __init__(self, g: Graph):
        self.graph = g
        m = g.vertex_count
        pairs = np.array(list(combinations(range(m), 2)), dtype=np.int64).reshape(-1, 2)
        self.I, self.J = pairs[:, 0], pairs[:, 1]
        self.S, self.T = _edge_arrays(g)
        # entries (line, k) with k outside the line: these must never vanish
        self.offline = np.ones((len(pairs), m), dtype=bool)
        self.offline[np.arange(len(pairs)), self.I] = False
        self.offline[np.arange(len(pairs)), self.J] = False

    def sides(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        dx = (X[self.J] - X[self.I])[:, None]
        dy = (Y[self.J] - Y[self.I])[:, None]
        det = dx * (Y[None, :] - Y[self.I][:, None]) - dy * (X[None, :] - X[self.I][:, None])
        return np.sign(det)

    def count(self, X: np.ndarray, Y: np.ndarray) -> int | None:
        """Crossing total, or None if the placement is degenerate."""
        side = self.sides(X, Y)
        if not np.all(side[self.offline]):
            return None
        return int((side[:, self.S] * side[:, self.T] < 0).sum())


def _random_lattice(rng, m: int, counter: LatticeCounter, half_width: int = DENOMINATOR):
    while True:
        X = rng.integers(-half_width, half_width + 1, size=m, dtype=np.int64)
        Y = rng.integers(-half_width, half_width + 1, size=m, dtype=np.int64)
        value = counter.count(X, Y)
        if value is not None:
            return X, Y, value


def random_drawing(g: Graph, seed: int = 0) -> Drawing:
    """General-position placement on uniform lattice points of [-1, 1]^2."""
    rng = np.random.default_rng(seed)
    X, Y, _ = _random_lattice(rng, g.vertex_count, LatticeCounter(g))
    return _lattice_drawing(g, X, Y)


def _lattice_drawing(g: Graph, X, Y) -> Drawing:
    return Drawing(g, tuple(Point(Fraction(int(x), DENOMINATOR), Fraction(int(y), DENOMINATOR))
                            for x, y in zip(X, Y)))


def _snap(d: Drawing, counter: LatticeCounter, rng):
    """Lattice copy of d, nudged until it is in general position."""
    X = np.array([round(p.x * DENOMINATOR) for p in d.placement], dtype=np.int64)
    Y = np.array([round(p.y * DENOMINATOR) for p in d.placement], dtype=np.int64)
    span = max(1, int(np.abs(np.concatenate([X, Y])).max()))
    if span > BOX // 2:
        factor = -(-span // (BOX // 2))
        X, Y = X // factor, Y // factor
    value = counter.count(X, Y)
    while value is None:
        X = X + rng.integers(-2, 3, size=len(X))
        Y = Y + rng.integers(-2, 3, size=len(Y))
        value = counter.count(X, Y)
    return X, Y, value


def anneal(d0: Drawing, params: AnnealParams = AnnealParams()) -> SearchResult:
    """Simulated annealing from d0, moving one vertex per step.

    Moves that break general position or leave the box are rejected before
    evaluation. Acceptance uses the exact integer change in crossings. The
    best drawing seen (d0 included) is returned after an oracle recount.
    """
    g = d0.graph
    m = g.vertex_count
    rng = np.random.default_rng(params.seed)
    counter = LatticeCounter(g)
    best_count = total_crossings_naive(d0)
    best_drawing: Drawing = d0
    evaluations = 1
    if m < 3 or not g.edges:
        return SearchResult(best_count, best_drawing, evaluations, "anneal", params.seed,
                            stage="anneal", graph=g)

    X, Y, current = _snap(d0, counter, rng)
    evaluations += 1
    if current < best_count:
        best_count, best_drawing = current, _lattice_drawing(g, X, Y)
    best_X, best_Y, lattice_best = X.copy(), Y.copy(), current
    reach = max(1, int(params.move_scale * DENOMINATOR))

    def propose():
        v = int(rng.integers(m))
        nx = X[v] + int(rng.integers(-reach, reach + 1))
        ny = Y[v] + int(rng.integers(-reach, reach + 1))
        if abs(nx) > BOX or abs(ny) > BOX:
            return None
        old = X[v], Y[v]
        X[v], Y[v] = nx, ny
        value = counter.count(X, Y)
        X[v], Y[v] = old
        return (v, nx, ny, value) if value is not None else None

    if params.initial_temperature is None:
        deltas = []
        for _ in range(params.probe_moves):
            move = propose()
            evaluations += 1
            if move is not None:
                deltas.append(abs(move[3] - current))
        temperature = max(float(np.mean(deltas)) if deltas else 1.0, 0.5)
    else:
        temperature = float(params.initial_temperature)
    cooling = float(params.cooling_factor)

    for step in range(params.max_steps):
        if step and step % params.steps_per_temperature == 0:
            temperature *= cooling
        move = propose()
        evaluations += 1
        if move is None:
            continue
        v, nx, ny, value = move
        delta = value - current
        if delta <= 0 or rng.random() < math.exp(-delta / temperature):
            X[v], Y[v], current = nx, ny, value
            if current < lattice_best:
                best_X, best_Y, lattice_best = X.copy(), Y.copy(), current

    if lattice_best < best_count:
        best_count, best_drawing = lattice_best, _lattice_drawing(g, best_X, best_Y)
    return _verified(SearchResult(best_count, best_drawing, evaluations, "anneal",
                                  params.seed, stage="anneal", graph=g))


def anneal_restarts(g: Graph, runs: int, params: AnnealParams = AnnealParams(),
                    threads: int = 1) -> list[SearchResult]:
    """Independent annealing runs from random starts, seeds params.seed + i."""
    tasks = [(g, replace(params, seed=params.seed + i)) for i in range(runs)]
    if threads > 1 and runs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(threads) as pool:
            return list(pool.map(_anneal_task, tasks))
    return [_anneal_task(t) for t in tasks]


def _anneal_task(task) -> SearchResult:
    g, params = task
    return anneal(random_drawing(g, seed=params.seed), params)


# -- portfolio ---------------------------------------------------------------

def estimate_ocn(spec: FamilySpec, budget: int = 50_000, mode: str = "auto", seed: int = 0,
                 cap: int = DEFAULT_CONVEX_CAP, threads: int = 1) -> SearchResult:
    """Best drawing found by construction, convex search and annealing restarts.

    ``budget`` bounds the annealing evaluations; the convex stage is exhaustive
    when the vertex count is within ``cap`` and sampled otherwise.
    """
    from .constructions import ConstructionError, construct

    g = generate(spec)
    candidates: list[SearchResult] = []
    if mode == "auto":
        try:
            d = construct(spec)
        except ConstructionError:
            d = None
        if d is not None:
            candidates.append(SearchResult(total_crossings_naive(d), d, 1, "construction",
                                           seed, stage="construction", graph=g))
    if mode in ("auto", "convex"):
        if g.vertex_count <= cap:
            candidates.append(convex_exhaustive(g, cap=cap, threads=threads))
        else:
            candidates.append(convex_sampled(g, min(budget, 20_000), seed))
    if mode in ("auto", "anneal"):
        per_run = 20_000
        runs = max(1, budget // per_run)
        params = AnnealParams(seed=seed, max_steps=min(per_run, budget),
                              steps_per_temperature=max(1, min(per_run, budget) // 200))
        candidates.extend(anneal_restarts(g, runs, params, threads))
    if not candidates:
        raise ValueError(f"unknown search mode {mode!r}")
    evaluations = sum(c.evaluations for c in candidates)
    best = min(candidates, key=lambda c: c.best_count)
    for c in candidates:
        log.info("stage %s: %d", c.stage, c.best_count)
    return replace(best, evaluations=evaluations, seed=seed)
