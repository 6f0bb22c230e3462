"""Instrumentation counters shared by the core structure and pivot strategies."""

from dataclasses import dataclass, replace


@dataclass
class QueryStats:
    """Monotone counters for item comparisons, swaps, settled pivots and queries.

    One comparison is one item-vs-item probe (a three-way compare of the same
    pair counts once).
    """

    comparisons: int = 0
    swaps: int = 0
    pivots_settled: int = 0
    queries_answered: int = 0

    def copy(self) -> "QueryStats":
        return replace(self)
