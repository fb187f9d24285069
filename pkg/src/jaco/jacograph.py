"""Finite Jaco graphs J_n(1).

The arc ``(i, j)``, ``i < j``, is present iff ``j <= 2i - indeg(i)``.  Because
every arc points from a lower to a higher index, ``indeg(i)`` is settled
before vertex ``i`` emits its own arcs, and it does not depend on ``n``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .graph import GraphError, SimpleGraph, induced_subgraph, make_graph, to_dot

Arc = tuple[int, int]


class HopeGraphError(GraphError):
    """The vertices after the prime Jaconian vertex do not induce a clique."""


@dataclass(frozen=True)
class JacoGraph:
    n: int
    arcs: tuple[Arc, ...]
    in_degree: tuple[int, ...]   # index 0 unused; in_degree[i] for vertex i
    out_degree: tuple[int, ...]
    underlying: SimpleGraph = field(repr=False, compare=False)

    def indeg(self, i: int) -> int:
        return self.in_degree[i]

    def outdeg(self, i: int) -> int:
        return self.out_degree[i]

    def out_neighbors(self, i: int) -> list[int]:
        return list(range(i + 1, i + 1 + self.out_degree[i]))

    def degree(self, i: int) -> int:
        return self.underlying.degree(i)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "arcs": [list(a) for a in self.arcs],
            "in_degree": list(self.in_degree[1:]),
            "out_degree": list(self.out_degree[1:]),
            "prime_jaconian": prime_jaconian(self),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    def to_dot(self, directed: bool = False) -> str:
        if not directed:
            return to_dot(self.underlying, name=f"J{self.n}")
        lines = [f"digraph J{self.n} {{"]
        lines += [f"  v{v};" for v in range(1, self.n + 1)]
        lines += [f"  v{i} -> v{j};" for i, j in self.arcs]
        lines.append("}")
        return "\n".join(lines)


def build_jaco(n: int) -> JacoGraph:
    if n < 1:
        raise GraphError(f"Jaco graph order must be >= 1, got {n}")
    indeg = [0] * (n + 1)
    outdeg = [0] * (n + 1)
    arcs = []
    for i in range(1, n + 1):
        reach = min(n, 2 * i - indeg[i])
        for j in range(i + 1, reach + 1):
            arcs.append((i, j))
            indeg[j] += 1
        outdeg[i] = max(0, reach - i)
    return JacoGraph(n, tuple(arcs), tuple(indeg), tuple(outdeg), make_graph(n, arcs))


def in_degrees(n: int) -> list[int]:
    """``in_degrees(n)[i]`` is d^-(v_i) for ``1 <= i <= n``; index 0 unused.

    Needs no graph, so ``n`` is not limited by the bitmask width.
    """
    if n < 1:
        raise GraphError(f"Jaco graph order must be >= 1, got {n}")
    indeg = [0] * (n + 1)
    diff = [0] * (n + 2)      # arcs into v_j start and stop as ranges
    running = 0
    for i in range(1, n + 1):
        running += diff[i]
        indeg[i] = running
        reach = min(n, 2 * i - running)
        if reach > i:
            diff[i + 1] += 1
            diff[reach + 1] -= 1
    return indeg


def prime_jaconian(jg: JacoGraph) -> int:
    """Smallest-indexed vertex of maximum degree in the underlying graph.

    Raises ``HopeGraphError`` if the vertices after it do not form a clique.
    """
    degs = jg.underlying.degrees()
    i = degs.index(max(degs)) + 1
    for u, v in combinations(range(i + 1, jg.n + 1), 2):
        if not jg.underlying.has_edge(u, v):
            raise HopeGraphError(
                f"J_{jg.n}: prime Jaconian candidate v{i} leaves edge v{u}v{v} missing "
                "from the Hope graph"
            )
    return i


def hope_graph(jg: JacoGraph) -> tuple[SimpleGraph, list[int]]:
    """Complete graph induced on the vertices after the prime Jaconian vertex.

    For ``J_1`` the vertex set after ``v_1`` is empty; the Hope graph is then
    reported as K_1 on ``{v_1}`` itself.
    """
    i = prime_jaconian(jg)
    keep = range(i + 1, jg.n + 1) if i < jg.n else [jg.n]
    return induced_subgraph(jg.underlying, keep)
