"""Pluggable pivot placement rules.

A strategy's place_pivot(items, x, y, stats) chooses a pivot from
items[x..y] and leaves it swapped into items[y].  It may rearrange data
inside [x, y] but must never touch anything outside, and must preserve the
multiset of the interval.
"""

import random

from .stats import QueryStats


def _check_range(items, x, y):
    if not 0 <= x <= y < len(items):
        raise IndexError("invalid interval [%d, %d] for array of length %d"
                         % (x, y, len(items)))


def lomuto_partition(items, x, y, stats):
    """Partition items[x..y] around the pivot sitting at items[y].

    Returns the pivot's final position p: everything in [x, p) is smaller,
    everything in (p, y] is larger.  Performs exactly y - x comparisons.
    """
    pivot = items[y]
    i = x
    swaps = 0
    for j in range(x, y):
        if items[j] < pivot:
            if i != j:
                items[i], items[j] = items[j], items[i]
                swaps += 1
            i += 1
    if i != y:
        items[i], items[y] = items[y], items[i]
        swaps += 1
    stats.comparisons += y - x
    stats.swaps += swaps
    return i


def _insertion_sort(items, x, y, stats):
    # Swap-based so every exchange is counted; intervals here have <= 5 items.
    for i in range(x + 1, y + 1):
        j = i
        while j > x:
            stats.comparisons += 1
            if items[j] < items[j - 1]:
                items[j], items[j - 1] = items[j - 1], items[j]
                stats.swaps += 1
                j -= 1
            else:
                break


class LastElementPivot:
    """Keep whatever already sits at items[y]: the empty pivot function."""

    name = "last"

    def place_pivot(self, items, x, y, stats=None):
        _check_range(items, x, y)


class RandomizedPivot:
    """Swap a uniformly chosen index of [x, y] into items[y].

    Deterministic given the seed, so benchmark runs are reproducible.
    """

    name = "random"

    def __init__(self, seed=None, rng=None):
        self._rng = rng if rng is not None else random.Random(seed)

    def place_pivot(self, items, x, y, stats=None):
        _check_range(items, x, y)
        j = self._rng.randrange(x, y + 1)
        if j != y:
            items[j], items[y] = items[y], items[j]
            if stats is not None:
                stats.swaps += 1


class MedianOfMediansPivot:
    """BFPRT pivot: groups of 5, group medians, recursive median of those.

    Guarantees the chosen pivot splits the interval no worse than roughly
    30/70, giving worst-case linear selection.  All rearrangement stays
    inside [x, y].
    """

    name = "mom"

    def place_pivot(self, items, x, y, stats=None):
        _check_range(items, x, y)
        st = stats if stats is not None else QueryStats()
        idx = _mom_pivot_index(items, x, y, st)
        if idx != y:
            items[idx], items[y] = items[y], items[idx]
            st.swaps += 1


def _mom_pivot_index(items, x, y, stats):
    """Index of the median-of-medians of items[x..y] (after rearranging)."""
    size = y - x + 1
    if size <= 5:
        _insertion_sort(items, x, y, stats)
        return x + (size - 1) // 2
    g = 0
    for i in range(x, y + 1, 5):
        j = min(i + 4, y)
        _insertion_sort(items, i, j, stats)
        mid = (i + j) // 2
        if mid != x + g:
            items[x + g], items[mid] = items[mid], items[x + g]
            stats.swaps += 1
        g += 1
    # True median of the g group medians, now parked in the prefix.
    return _bfprt_select(items, x, x + g - 1, x + (g - 1) // 2, stats)


def _bfprt_select(items, lo, hi, k, stats):
    """Place the k-th smallest of items[lo..hi] at index k and return k."""
    while lo < hi:
        pidx = _mom_pivot_index(items, lo, hi, stats)
        if pidx != hi:
            items[pidx], items[hi] = items[hi], items[pidx]
            stats.swaps += 1
        p = lomuto_partition(items, lo, hi, stats)
        if p == k:
            return k
        if k < p:
            hi = p - 1
        else:
            lo = p + 1
    return lo


_STRATEGIES = {
    "last": LastElementPivot,
    "random": RandomizedPivot,
    "mom": MedianOfMediansPivot,
}


def make_strategy(name, seed=None):
    """Build a strategy by CLI name: "last", "random" or "mom"."""
    try:
        cls = _STRATEGIES[name]
    except KeyError:
        raise ValueError("unknown pivot strategy %r (choose from %s)"
                         % (name, ", ".join(sorted(_STRATEGIES))))
    if cls is RandomizedPivot:
        return cls(seed=seed)
    return cls()
