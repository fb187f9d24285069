"""Undirected simple graphs on vertices ``1..n`` backed by integer bitmasks.

Vertex ``v`` occupies bit ``v - 1`` of every packed vertex set, so a
neighbourhood union or a domination test is a handful of integer ``|``/``&``
operations.  Every public function speaks 1-indexed vertex labels.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

MAX_VERTICES = 64

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graphs or invalid graph transformations."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def members(mask: int) -> list[int]:
    """Vertices (ascending) whose bits are set in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    """Immutable undirected simple graph on vertices ``1..n``."""

    n: int
    edges: frozenset[Edge]
    _adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        adj = [0] * (self.n + 1)
        for u, v in self.edges:
            adj[u] |= 1 << (v - 1)
            adj[v] |= 1 << (u - 1)
        object.__setattr__(self, "_adj", tuple(adj))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def adj_mask(self, v: int) -> int:
        return self._adj[v]

    def closed_mask(self, v: int) -> int:
        return self._adj[v] | (1 << (v - 1))

    def neighbors(self, v: int) -> list[int]:
        return members(self._adj[v])

    def degree(self, v: int) -> int:
        return popcount(self._adj[v])

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in self.vertices]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self._adj[u] >> (v - 1) & 1)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def non_edges(self) -> list[Edge]:
        """Absent vertex pairs, lexicographically sorted."""
        return [(u, v) for u, v in combinations(self.vertices, 2) if not self.has_edge(u, v)]

    def dominates(self, vertices: Iterable[int]) -> bool:
        covered = 0
        for v in vertices:
            covered |= self.closed_mask(v)
        return covered == self.full_mask

    def __len__(self) -> int:
        return self.n


def make_graph(n: int, edge_list: Iterable[Sequence[int]] = ()) -> SimpleGraph:
    if n < 1:
        raise GraphError(f"graph needs at least one vertex, got n={n}")
    if n > MAX_VERTICES:
        raise GraphError(f"n={n} exceeds the supported maximum of {MAX_VERTICES} vertices")
    edges = set()
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u} is not allowed")
        edges.add(_norm(u, v))
    return SimpleGraph(n, frozenset(edges))


def path_graph(n: int) -> SimpleGraph:
    return make_graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got n={n}")
    return make_graph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def complete_graph(n: int) -> SimpleGraph:
    return make_graph(n, combinations(range(1, n + 1), 2))


def star_graph(leaves: int) -> SimpleGraph:
    """K_{1,leaves} with centre 1."""
    return make_graph(leaves + 1, [(1, j) for j in range(2, leaves + 2)])


def distance(g: SimpleGraph, u: int, v: int) -> int | None:
    """Shortest-path length between ``u`` and ``v``; ``None`` if unreachable."""
    if u == v:
        return 0
    seen = 1 << (u - 1)
    frontier = 1 << (u - 1)
    target = 1 << (v - 1)
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for w in members(frontier):
            nxt |= g.adj_mask(w)
        nxt &= ~seen
        if nxt & target:
            return d
        seen |= nxt
        frontier = nxt
    return None


def components(g: SimpleGraph) -> list[list[int]]:
    """Connected components as ascending vertex lists, ordered by smallest member."""
    seen = set()
    out = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: SimpleGraph) -> bool:
    return len(components(g)) == 1


def induced_subgraph(g: SimpleGraph, keep: Iterable[int]) -> tuple[SimpleGraph, list[int]]:
    """Subgraph induced by ``keep``, relabelled ``1..m``.

    Returns ``(subgraph, labels)`` where ``labels[k - 1]`` is the original
    label of new vertex ``k``.
    """
    labels = sorted(set(keep))
    if not labels:
        raise GraphError("induced subgraph would have no vertices")
    for v in labels:
        if not 1 <= v <= g.n:
            raise GraphError(f"vertex {v} is not in the graph")
    index = {v: k for k, v in enumerate(labels, start=1)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return make_graph(len(labels), edges), labels


def remove_vertices(g: SimpleGraph, removed: Iterable[int]) -> tuple[SimpleGraph, list[int]]:
    gone = set(removed)
    if gone >= set(g.vertices):
        raise GraphError("removing every vertex leaves an empty graph")
    return induced_subgraph(g, [v for v in g.vertices if v not in gone])


def add_edge(g: SimpleGraph, u: int, v: int) -> SimpleGraph:
    if g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) already present")
    return make_graph(g.n, [*g.edges, (u, v)])


def add_edges(g: SimpleGraph, new: Iterable[Edge]) -> SimpleGraph:
    out = g
    for u, v in new:
        out = add_edge(out, u, v)
    return out


def remove_edge(g: SimpleGraph, u: int, v: int) -> SimpleGraph:
    e = _norm(u, v)
    if e not in g.edges:
        raise GraphError(f"edge ({u}, {v}) not present")
    return SimpleGraph(g.n, g.edges - {e})


def remove_edges(g: SimpleGraph, gone: Iterable[Edge]) -> SimpleGraph:
    drop = {_norm(u, v) for u, v in gone}
    missing = drop - g.edges
    if missing:
        raise GraphError(f"edges not present: {sorted(missing)}")
    return SimpleGraph(g.n, g.edges - drop)


def disjoint_union(graphs: Sequence[SimpleGraph]) -> SimpleGraph:
    """Place the graphs side by side, shifting labels in list order."""
    offset = 0
    edges = []
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return make_graph(offset, edges)


def relabel(g: SimpleGraph, perm: Sequence[int]) -> SimpleGraph:
    """Image of ``g`` under ``v -> perm[v - 1]`` (``perm`` a permutation of 1..n)."""
    if sorted(perm) != list(g.vertices):
        raise GraphError("perm must be a permutation of 1..n")
    return make_graph(g.n, [(perm[u - 1], perm[v - 1]) for u, v in g.edges])


def is_tree(g: SimpleGraph) -> bool:
    return len(g.edges) == g.n - 1 and is_connected(g)


# --- text formats ---------------------------------------------------------


def parse_edge_list(text: str) -> SimpleGraph:
    """Parse ``n`` on the first non-blank line, then one ``i j`` pair per line."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty edge-list input")
    try:
        n = int(lines[0])
        pairs = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise GraphError(f"expected 'i j', got {ln!r}")
            pairs.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"malformed edge list: {exc}") from None
    return make_graph(n, pairs)


def format_edge_list(g: SimpleGraph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges()])


def to_dot(g: SimpleGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  v{v};" for v in g.vertices]
    lines += [f"  v{u} -- v{v};" for u, v in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines)
