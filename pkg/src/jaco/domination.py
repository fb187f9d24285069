"""Exact domination machinery: gamma, gamma-sets, d_om-sequences, murtage
partitions, the murtage number, gamma^-, the bondage number and the
parameter-preserving spanning tree.

Dominating sets are found by branching on the lowest undominated vertex:
some member of its closed neighbourhood must be chosen.  All vertex sets
are packed into integers (see :mod:`jaco.graph`).
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .graph import (
    Edge,
    GraphError,
    SimpleGraph,
    disjoint_union,
    distance,
    is_connected,
    make_graph,
    mask_of,
    members,
    popcount,
)
from .results import BondageResult, GammaMinusResult, MurtageResult


# --- core search ----------------------------------------------------------


def _closed_masks(g: SimpleGraph) -> list[int]:
    return [0] + [g.closed_mask(v) for v in g.vertices]


def _can_dominate(closed: Sequence[int], undominated: int, k: int, allowed: int, widest: int) -> bool:
    if not undominated:
        return True
    if k == 0 or k * widest < popcount(undominated):
        return False
    low = undominated & -undominated
    u = low.bit_length()
    for w in members(closed[u] & allowed):
        if _can_dominate(closed, undominated & ~closed[w], k - 1, allowed, widest):
            return True
    return False


def _gamma_masks(closed: Sequence[int], target: int, allowed: int) -> int:
    widest = max((popcount(c & target) for c in closed[1:]), default=1) or 1
    k = 1
    while not _can_dominate(closed, target, k, allowed, widest):
        k += 1
    return k


def _has_dominating_set(closed: Sequence[int], target: int, k: int, allowed: int) -> bool:
    widest = max((popcount(c & target) for c in closed[1:]), default=1) or 1
    return _can_dominate(closed, target, k, allowed, widest)


def gamma(g: SimpleGraph) -> int:
    """Domination number; disconnected graphs are fine."""
    return _gamma_masks(_closed_masks(g), g.full_mask, g.full_mask)


def _collect(closed: Sequence[int], undominated: int, k: int, chosen: int, out: set[int]) -> None:
    if not undominated:
        out.add(chosen)
        return
    if k == 0:
        return
    low = undominated & -undominated
    for w in members(closed[low.bit_length()]):
        _collect(closed, undominated & ~closed[w], k - 1, chosen | (1 << (w - 1)), out)


def all_gamma_sets(g: SimpleGraph) -> list[tuple[int, ...]]:
    """Every minimum dominating set, in lexicographic order."""
    closed = _closed_masks(g)
    k = gamma(g)
    found: set[int] = set()
    _collect(closed, g.full_mask, k, 0, found)
    return sorted(tuple(members(m)) for m in found if popcount(m) == k)


# --- d_om-sequences and compactness ---------------------------------------


@dataclass(frozen=True)
class DomAnalysis:
    gamma_set: tuple[int, ...]
    theta: int
    designated: int
    dom_sequence: tuple[int, ...]
    partition: tuple[tuple[int, ...], ...]
    distance_score: int | None

    def dominator_of(self, cell: Sequence[int]) -> int:
        (d,) = set(cell) & set(self.gamma_set)
        return d

    def to_dict(self) -> dict:
        d = asdict(self)
        d["gamma_set"] = list(self.gamma_set)
        d["dom_sequence"] = list(self.dom_sequence)
        d["partition"] = [list(c) for c in self.partition]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "DomAnalysis":
        return cls(
            gamma_set=tuple(d["gamma_set"]),
            theta=d["theta"],
            designated=d["designated"],
            dom_sequence=tuple(d["dom_sequence"]),
            partition=tuple(tuple(c) for c in d["partition"]),
            distance_score=d["distance_score"],
        )


def private_neighbors(g: SimpleGraph, x: Iterable[int], v: int) -> list[int]:
    """Vertices outside ``x`` adjacent to ``v`` and to no other member of ``x``."""
    xs = set(x)
    others = 0
    for w in xs - {v}:
        others |= g.adj_mask(w)
    return members(g.adj_mask(v) & ~mask_of(xs) & ~others)


def analyze_gamma_set(g: SimpleGraph, x: Iterable[int]) -> DomAnalysis:
    xs = tuple(sorted(set(x)))
    if not g.dominates(xs):
        raise ValueError(f"{list(xs)} does not dominate the graph")
    if len(xs) != gamma(g):
        raise ValueError(f"{list(xs)} is dominating but not minimum (gamma = {gamma(g)})")

    priv = {v: private_neighbors(g, xs, v) for v in xs}
    theta = min(1 + len(p) for p in priv.values())
    designated = min(v for v in xs if 1 + len(priv[v]) == theta)

    cells = {v: {v, *priv[v]} for v in xs}
    placed = set().union(*cells.values())
    for u in g.vertices:
        if u in placed:
            continue
        hosts = [w for w in xs if w != designated and g.has_edge(u, w)]
        # most private neighbours first, then highest index
        host = max(hosts, key=lambda w: (len(priv[w]), w))
        cells[host].add(u)

    ordered = sorted(cells.items(), key=lambda kv: (len(kv[1]), kv[0]))
    partition = tuple(tuple(sorted(c)) for _, c in ordered)

    # distance from the designated vertex to the nearest other member
    score: int | None = 0
    others = [distance(g, designated, v) for v in xs if v != designated]
    if others:
        score = None if None in others else min(others)

    return DomAnalysis(
        gamma_set=xs,
        theta=theta,
        designated=designated,
        dom_sequence=tuple(len(c) for c in partition),
        partition=partition,
        distance_score=score,
    )


def compact_gamma_sets(g: SimpleGraph) -> list[DomAnalysis]:
    """Gamma-sets of least theta; among those, the designated vertex lies
closest to another member of its set."""
    if not is_connected(g):
        raise GraphError("compact gamma-sets need a connected graph")
    analyses = [analyze_gamma_set(g, x) for x in all_gamma_sets(g)]
    theta = min(a.theta for a in analyses)
    primary = [a for a in analyses if a.theta == theta]
    best = min(a.distance_score for a in primary)
    return [a for a in primary if a.distance_score == best]


def murtage_partition(g: SimpleGraph) -> DomAnalysis:
    """Analysis of the first (lexicographic) compact gamma-set."""
    return compact_gamma_sets(g)[0]


# --- murtage number, gamma^-, bondage -------------------------------------


def murtage_via_theorem(g: SimpleGraph) -> MurtageResult:
    """Murtage number read off a compact gamma-set.

    ``theta`` if the designated vertex has no neighbour in the set, else
    ``theta - 1``.  The witness joins every vertex of the designated cell that
    is not yet dominated by the rest of the set to another set member.
    """
    if not is_connected(g):
        raise GraphError("the murtage theorem applies to connected graphs")
    if gamma(g) == 1:
        return MurtageResult(0, "theorem")
    a = murtage_partition(g)
    v1 = a.designated
    rest = [w for w in a.gamma_set if w != v1]
    adjacent = any(g.has_edge(v1, w) for w in rest)
    target = rest[0]
    cell = a.partition[0]
    stranded = [u for u in cell if u != v1] if adjacent else list(cell)
    witness = tuple(sorted((min(u, target), max(u, target)) for u in stranded))
    return MurtageResult(a.theta - 1 if adjacent else a.theta, "theorem", witness)


def murtage_exact(g: SimpleGraph) -> MurtageResult:
    """Exact murtage number of any graph, connected or not.

    An added edge can newly dominate at most one vertex, so the answer is the
    least number of vertices left undominated by a (gamma - 1)-subset; the
    witness joins each of them to that subset.
    """
    k = gamma(g)
    if k == 1:
        return MurtageResult(0, "exact")
    best = None
    for s in combinations(g.vertices, k - 1):
        covered = 0
        for v in s:
            covered |= g.closed_mask(v)
        left = members(g.full_mask & ~covered)
        if best is None or len(left) < len(best[1]):
            best = (s, left)
    s, left = best
    witness = tuple(sorted((min(u, s[0]), max(u, s[0])) for u in left))
    return MurtageResult(len(left), "exact", witness)


def gamma_minus(g: SimpleGraph) -> GammaMinusResult:
    k = gamma(g)
    if k == 1:
        return GammaMinusResult(0, (), defined_as_zero=True)
    closed = _closed_masks(g)
    for size in range(1, g.n):
        for removed in combinations(g.vertices, size):
            keep = g.full_mask & ~mask_of(removed)
            if _has_dominating_set(closed, keep, k - 1, keep):
                return GammaMinusResult(size, removed)
    raise AssertionError("a single remaining vertex always has gamma 1")


def bondage(g: SimpleGraph) -> BondageResult:
    if not g.edges:
        raise GraphError("bondage number is undefined for an edgeless graph")
    k = gamma(g)
    base = _closed_masks(g)
    edges = g.sorted_edges()
    for size in range(1, len(edges) + 1):
        for removed in combinations(edges, size):
            closed = list(base)
            for u, v in removed:
                closed[u] &= ~(1 << (v - 1))
                closed[v] &= ~(1 << (u - 1))
            if not _has_dominating_set(closed, g.full_mask, k, g.full_mask):
                return BondageResult(size, removed)
    raise AssertionError("removing every edge raises gamma")


# --- spanning tree --------------------------------------------------------


@dataclass(frozen=True)
class SpanningTreeReport:
    tree: SimpleGraph
    analysis: DomAnalysis
    branch: str                          # "hub-at-max-degree" | "join-at-hub"
    host_max_degree: int
    tree_max_degree: int
    host_gamma: int
    tree_gamma: int
    host_murtage: int
    tree_murtage: int

    @property
    def preserved(self) -> bool:
        return (
            self.host_max_degree == self.tree_max_degree
            and self.host_gamma == self.tree_gamma
            and self.host_murtage == self.tree_murtage
        )


def spanning_tree_preserving(g: SimpleGraph) -> SpanningTreeReport:
    """Spanning tree built from the stars of a murtage partition.

    Each cell becomes a star on its dominator.  The stars are then glued to the
    star of the largest cell: through any host edge if that star's centre
    already has maximum degree, otherwise through edges at that centre.  Stars
    still loose are glued to the growing tree by any host edge.
    """
    if not is_connected(g):
        raise GraphError("spanning tree needs a connected graph")
    a = murtage_partition(g)
    dominators = [a.dominator_of(c) for c in a.partition]
    tree_edges = {
        (min(d, u), max(d, u)) for d, cell in zip(dominators, a.partition) for u in cell if u != d
    }
    hub_cell = set(a.partition[-1])
    hub = dominators[-1]
    hub_max = len(hub_cell) - 1 == g.max_degree
    branch = "hub-at-max-degree" if hub_max else "join-at-hub"

    attached = set(hub_cell)
    loose = [(d, set(c)) for d, c in zip(dominators[:-1], a.partition[:-1])]
    still = []
    for d, cell in loose:
        if hub_max:
            link = next(
                ((u, v) for u in sorted(hub_cell) for v in sorted(cell) if g.has_edge(u, v)), None
            )
        else:
            # prefer gluing through the cell's own dominator
            ends = sorted(cell, key=lambda u: (u != d, u))
            link = next(((hub, u) for u in ends if g.has_edge(hub, u)), None)
        if link is None:
            still.append((d, cell))
            continue
        tree_edges.add((min(link), max(link)))
        attached |= cell

    while still:
        progress = []
        for d, cell in still:
            link = next(
                ((u, v) for u in sorted(attached) for v in sorted(cell) if g.has_edge(u, v)), None
            )
            if link is None:
                progress.append((d, cell))
                continue
            tree_edges.add((min(link), max(link)))
            attached |= cell
        if len(progress) == len(still):
            raise GraphError("could not attach every star; graph is not connected")
        still = progress

    tree = make_graph(g.n, tree_edges)
    return SpanningTreeReport(
        tree=tree,
        analysis=a,
        branch=branch,
        host_max_degree=g.max_degree,
        tree_max_degree=tree.max_degree,
        host_gamma=gamma(g),
        tree_gamma=gamma(tree),
        host_murtage=murtage_exact(g).value,
        tree_murtage=murtage_exact(tree).value,
    )


# --- disjoint unions ------------------------------------------------------


@dataclass(frozen=True)
class UnionCheck:
    gamma_union: int
    gamma_sum: int
    murtage_union: int
    murtage_sum: int
    murtage_witness: tuple[Edge, ...]

    @property
    def gamma_additive(self) -> bool:
        return self.gamma_union == self.gamma_sum

    @property
    def murtage_additive(self) -> bool:
        return self.murtage_union == self.murtage_sum

    @property
    def holds(self) -> bool:
        return self.gamma_additive and self.murtage_additive


def disjoint_union_check(gs: Sequence[SimpleGraph]) -> UnionCheck:
    """Compare gamma and m of a disjoint union with the sums over its parts."""
    for h in gs:
        if not is_connected(h):
            raise GraphError("each part of the union must be connected")
    union = disjoint_union(gs)
    mu = murtage_exact(union)
    return UnionCheck(
        gamma_union=gamma(union),
        gamma_sum=sum(gamma(h) for h in gs),
        murtage_union=mu.value,
        murtage_sum=sum(murtage_exact(h).value for h in gs),
        murtage_witness=mu.witness_edges,
    )
