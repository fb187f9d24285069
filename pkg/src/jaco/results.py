"""Plain result records shared by the domination engine and the oracles."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Edge


@dataclass(frozen=True)
class MurtageResult:
    value: int
    method: str                      # "theorem" | "oracle"
    witness_edges: tuple[Edge, ...] = ()


@dataclass(frozen=True)
class GammaMinusResult:
    value: int
    witness: tuple[int, ...] = ()
    # gamma = 1 cannot decrease; value is then a conventional 0
    defined_as_zero: bool = False


@dataclass(frozen=True)
class BondageResult:
    value: int
    witness_edges: tuple[Edge, ...]
