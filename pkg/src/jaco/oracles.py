"""Brute-force ground truth for every invariant.

Nothing here imports the domination engine or the closed forms.  The
searches work on Python ``set`` neighbourhoods rather than the packed masks
used elsewhere, and make no attempt to be clever: ascending-cardinality
subset scans, plain backtracking.  Each call is bounded by an
:class:`OracleBudget`; exceeding it raises :class:`BudgetExceeded` rather than
returning a partial answer.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import SimpleGraph
from .results import BondageResult, GammaMinusResult, MurtageResult


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    alpha: int = 30
    gamma: int = 30
    chi: int = 18
    cover: int = 20
    murtage: int = 20
    bondage: int = 13
    gamma_minus: int = 13
    seconds: float | None = None     # wall-clock ceiling per call

    def check(self, kind: str, g: SimpleGraph) -> "_Deadline":
        limit = getattr(self, kind)
        if g.n > limit:
            raise BudgetExceeded(f"{kind} oracle budget is {limit} vertices, graph has {g.n}")
        return _Deadline(kind, self.seconds)


DEFAULT_BUDGET = OracleBudget()


class _Deadline:
    def __init__(self, kind: str, seconds: float | None):
        self.kind = kind
        self.stop = None if seconds is None else time.monotonic() + seconds

    def tick(self) -> None:
        if self.stop is not None and time.monotonic() > self.stop:
            raise BudgetExceeded(f"{self.kind} oracle ran past its time ceiling")


def _closed_sets(n: int, edges: Iterable[tuple[int, int]]) -> dict[int, set[int]]:
    closed = {v: {v} for v in range(1, n + 1)}
    for u, v in edges:
        closed[u].add(v)
        closed[v].add(u)
    return closed


def _dominating_set_of_size(closed: dict[int, set[int]], k: int, clock: _Deadline) -> tuple[int, ...] | None:
    everyone = set(closed)
    for cand in combinations(sorted(closed), k):
        clock.tick()
        covered = set()
        for v in cand:
            covered |= closed[v]
        if covered == everyone:
            return cand
    return None


def _gamma(closed: dict[int, set[int]], clock: _Deadline) -> int:
    for k in range(1, len(closed) + 1):
        if _dominating_set_of_size(closed, k, clock) is not None:
            return k
    raise AssertionError("the full vertex set always dominates")


def gamma_oracle(g: SimpleGraph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    clock = budget.check("gamma", g)
    return _gamma(_closed_sets(g.n, g.edges), clock)


def alpha_oracle(g: SimpleGraph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Maximum independent set size by include/exclude branching on the lowest vertex."""
    clock = budget.check("alpha", g)
    nbrs = {v: frozenset(g.neighbors(v)) for v in g.vertices}
    memo: dict[frozenset[int], int] = {}

    def best(rest: frozenset[int]) -> int:
        if not rest:
            return 0
        if rest in memo:
            return memo[rest]
        clock.tick()
        v = min(rest)
        without = best(rest - {v})
        with_v = 1 + best(rest - {v} - nbrs[v])
        memo[rest] = max(without, with_v)
        return memo[rest]

    return best(frozenset(g.vertices))


def cover_oracle(g: SimpleGraph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Minimum vertex cover size by ascending subset scan."""
    clock = budget.check("cover", g)
    edges = list(g.edges)
    for k in range(0, g.n + 1):
        for cand in combinations(g.vertices, k):
            clock.tick()
            s = set(cand)
            if all(u in s or v in s for u, v in edges):
                return k
    raise AssertionError("the full vertex set always covers")


def clique_oracle(g: SimpleGraph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Clique number by growing cliques in increasing vertex order."""
    clock = budget.check("chi", g)
    nbrs = {v: set(g.neighbors(v)) for v in g.vertices}
    best = 1

    def grow(size: int, candidates: list[int]) -> None:
        nonlocal best
        clock.tick()
        best = max(best, size)
        for idx, v in enumerate(candidates):
            grow(size + 1, [w for w in candidates[idx + 1:] if w in nbrs[v]])

    grow(0, list(g.vertices))
    return best


def chi_oracle(g: SimpleGraph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Chromatic number: try c = clique number, c + 1, ... with plain backtracking."""
    clock = budget.check("chi", g)
    order = list(g.vertices)
    nbrs = {v: g.neighbors(v) for v in order}

    def colourable(c: int) -> bool:
        colour: dict[int, int] = {}

        def place(idx: int, used: int) -> bool:
            if idx == len(order):
                return True
            clock.tick()
            v = order[idx]
            taken = {colour[w] for w in nbrs[v] if w in colour}
            # a fresh colour is only ever tried once (colour symmetry)
            for col in range(min(c, used + 1)):
                if col in taken:
                    continue
                colour[v] = col
                if place(idx + 1, max(used, col + 1)):
                    return True
                del colour[v]
            return False

        return place(0, 0)

    c = clique_oracle(g, budget)
    while not colourable(c):
        c += 1
    return c


def murtage_oracle(g: SimpleGraph, budget: OracleBudget = DEFAULT_BUDGET) -> MurtageResult:
    """Fewest added edges that strictly lower the domination number.

    Tries every k-subset of absent pairs for k = 0, 1, 2, ...
    """
    clock = budget.check("murtage", g)
    closed = _closed_sets(g.n, g.edges)
    gam = _gamma(closed, clock)
    if gam == 1:
        return MurtageResult(0, "oracle")
    absent = g.non_edges()
    for k in range(1, len(absent) + 1):
        for added in combinations(absent, k):
            trial = _closed_sets(g.n, list(g.edges) + list(added))
            if _dominating_set_of_size(trial, gam - 1, clock) is not None:
                return MurtageResult(k, "oracle", tuple(added))
    raise AssertionError("adding every absent edge yields gamma = 1")


def bondage_oracle(g: SimpleGraph, budget: OracleBudget = DEFAULT_BUDGET) -> BondageResult:
    """Fewest removed edges that strictly raise the domination number."""
    if not g.edges:
        raise ValueError("bondage number is undefined for an edgeless graph")
    clock = budget.check("bondage", g)
    gam = _gamma(_closed_sets(g.n, g.edges), clock)
    edges = g.sorted_edges()
    for k in range(1, len(edges) + 1):
        for removed in combinations(edges, k):
            gone = set(removed)
            trial = _closed_sets(g.n, [e for e in edges if e not in gone])
            if _dominating_set_of_size(trial, gam, clock) is None:
                return BondageResult(k, tuple(removed))
    raise AssertionError("removing every edge raises gamma when any edge exists")


def gamma_minus_oracle(g: SimpleGraph, budget: OracleBudget = DEFAULT_BUDGET) -> GammaMinusResult:
    """Fewest removed vertices that strictly lower the domination number.

    The remainder may be disconnected; its domination number is taken over the
    whole remainder, which is the sum over its components.
    """
    clock = budget.check("gamma_minus", g)
    gam = _gamma(_closed_sets(g.n, g.edges), clock)
    if gam == 1:
        return GammaMinusResult(0, (), defined_as_zero=True)
    for k in range(1, g.n):
        for removed in combinations(g.vertices, k):
            gone = set(removed)
            keep = [v for v in g.vertices if v not in gone]
            trial = {v: {w for w in _closed_of(g, v) if w not in gone} for v in keep}
            if _dominating_set_of_size(trial, gam - 1, clock) is not None:
                return GammaMinusResult(k, tuple(removed))
    raise AssertionError("removing all but one vertex leaves gamma = 1")


def _closed_of(g: SimpleGraph, v: int) -> list[int]:
    return [v, *g.neighbors(v)]
