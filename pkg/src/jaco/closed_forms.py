"""Closed-form and recursive invariants of J_n(1)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .jacograph import JacoGraph, build_jaco, in_degrees, prime_jaconian


@dataclass(frozen=True)
class IndependenceTrace:
    chosen: tuple[int, ...]

    @property
    def alpha(self) -> int:
        return len(self.chosen)


def independence_trace(jg: JacoGraph) -> IndependenceTrace:
    """Greedy minimum-index independent set: start at v_1, jump to m + d^+(v_m) + 1."""
    chosen = []
    m = 1
    while m <= jg.n:
        chosen.append(m)
        m = m + jg.outdeg(m) + 1
    return IndependenceTrace(tuple(chosen))


def independence_number(jg: JacoGraph) -> int:
    return independence_trace(jg).alpha


def covering_number(jg: JacoGraph) -> int:
    return jg.n - independence_trace(jg).alpha


def chromatic_closed_form(jg: JacoGraph) -> int:
    if jg.n == 1:
        return 1
    i = prime_jaconian(jg)
    n = jg.n
    return (n - i) + 1 if jg.underlying.has_edge(i, n) else n - i


class GammaRecursionError(ArithmeticError):
    """The step-back index fell below 1 before reaching a base case."""


def gamma_recursion(n: int) -> int:
    """Domination number of J_n(1) via the step-back recursion.

    ``gamma(J_n) = gamma(J_k) + 1`` with ``k = n - d^-(v_n) - d^-(v_{n - d^-(v_n)}) - 1``,
    and ``gamma = 1`` for ``n <= 3``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return _gamma_rec(n, tuple(in_degrees(n)))


def recursion_index(n: int, indeg: tuple[int, ...]) -> int:
    step = n - indeg[n]
    return step - indeg[step] - 1


def _gamma_rec(n: int, indeg: tuple[int, ...]) -> int:
    depth = 0
    while n > 3:
        k = recursion_index(n, indeg)
        if k < 1:
            raise GammaRecursionError(f"recursion index {k} < 1 reached from n={n}")
        n = k
        depth += 1
    return depth + 1


@lru_cache(maxsize=None)
def gamma_sequence(upto: int) -> tuple[int, ...]:
    """``gamma_recursion(n)`` for ``n = 1..upto`` (index 0 unused)."""
    indeg = tuple(in_degrees(upto))
    return (0,) + tuple(_gamma_rec(n, indeg) for n in range(1, upto + 1))


def murtage_bound_check(n: int) -> tuple[bool, int]:
    """Whether the brute-force murtage number of J_n(1) lies in [0, 3].

    Returns ``(within_bounds, m)``.
    """
    from .oracles import murtage_oracle

    m = murtage_oracle(build_jaco(n).underlying).value
    return 0 <= m <= 3, m
