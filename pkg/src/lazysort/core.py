"""Lazily self-sorting array answering online rank-select and value-search.

The array A is paired with a marker bitvector B: bit i is set once A[i]
provably holds its final sorted value (everything left of i is smaller,
everything right is larger).  Each select/search query runs quickselect in
the single unsorted gap that contains its answer, settling every pivot it
places, so the array converges to fully sorted as queries arrive.

Items must be pairwise distinct; duplicates are a documented precondition
violation and are not detected at runtime.
"""

import struct
from collections import namedtuple

from .bits import MarkerBitVector
from .pivots import LastElementPivot, lomuto_partition
from .stats import QueryStats

SearchResult = namedtuple("SearchResult", ["found", "rank"])


def _binary_probe(items, low, high, a):
    return (low + high) // 2


def _interpolation_probe(items, low, high, a):
    lo_v = items[low]
    hi_v = items[high]
    if hi_v <= lo_v:
        return (low + high) // 2
    mid = low + int((a - lo_v) * (high - low) // (hi_v - lo_v))
    if mid < low:
        return low
    if mid > high:
        return high
    return mid


_PROBES = {"binary": _binary_probe, "interpolation": _interpolation_probe}


class LazySortedArray:

    def __init__(self, items, strategy=None, probe="binary"):
        """Preprocess: one linear pass swaps min to A[0] and max to A[n-1].

        Costs exactly 2(n-1) comparisons; afterwards B[0] and B[n-1] are set
        and the marker invariant holds.
        """
        items = list(items)
        n = len(items)
        if n == 0:
            raise ValueError("cannot build from an empty array")
        if probe not in _PROBES:
            raise ValueError("unknown probe rule %r" % (probe,))
        self.items = items
        self.markers = MarkerBitVector(n)
        self._strategy = strategy if strategy is not None else LastElementPivot()
        self._probe = _PROBES[probe]
        st = QueryStats()
        # One min pass plus one max pass, n-1 comparisons each.
        imin = items.index(min(items))
        imax = items.index(max(items))
        st.comparisons += 2 * (n - 1)
        if imin != 0:
            items[0], items[imin] = items[imin], items[0]
            st.swaps += 1
            if imax == 0:
                imax = imin
        if imax != n - 1:
            items[n - 1], items[imax] = items[imax], items[n - 1]
            st.swaps += 1
        self.markers.set(0)
        st.pivots_settled += 1
        if n > 1:
            self.markers.set(n - 1)
            st.pivots_settled += 1
        self._stats = st

    def __len__(self):
        return len(self.items)

    @property
    def n(self):
        return len(self.items)

    def stats(self):
        """Snapshot of the counters (a copy; mutating it changes nothing)."""
        return self._stats.copy()

    def select(self, k):
        """Return the item of 0-indexed rank k, settling it at items[k]."""
        n = len(self.items)
        if not 0 <= k < n:
            raise IndexError("rank %d out of range [0, %d)" % (k, n))
        st = self._stats
        st.queries_answered += 1
        markers = self.markers
        if markers.get(k):
            return self.items[k]
        items = self.items
        lo = markers.prev_one_before(k) + 1
        hi = markers.next_one_after(k) - 1
        strategy = self._strategy
        while True:
            strategy.place_pivot(items, lo, hi, st)
            p = lomuto_partition(items, lo, hi, st)
            markers.set(p)
            st.pivots_settled += 1
            if p == k:
                return items[k]
            if k < p:
                hi = p - 1
            else:
                lo = p + 1

    def search(self, a):
        """Locate value a by rank.

        Returns SearchResult(True, k) with a settled at items[k], or
        SearchResult(False, insertion_rank) with both positions bounding the
        insertion point settled.  Runs the binary-search step over the whole
        array (ignoring unsortedness), then quickselect in the landing gap,
        steering by a instead of a target rank.
        """
        st = self._stats
        st.queries_answered += 1
        items = self.items
        markers = self.markers
        n = len(items)
        low, high = 0, n - 1
        hit = -1
        probe = self._probe
        while low <= high:
            mid = probe(items, low, high, a)
            st.comparisons += 1
            v = items[mid]
            if a < v:
                high = mid - 1
            elif a > v:
                low = mid + 1
            else:
                hit = mid
                break
        if hit >= 0:
            if markers.get(hit):
                return SearchResult(True, hit)
            anchor = hit
        else:
            # Landing between positions low-1 and low; the probes that fixed
            # those bounds compared a against both, so items[low-1] < a < items[low].
            if low == 0:
                return SearchResult(False, 0)
            if low == n:
                return SearchResult(False, n)
            if not markers.get(low):
                anchor = low
            elif not markers.get(low - 1):
                anchor = low - 1
            else:
                # Adjacent settled pivots bracket a: it is absent.
                return SearchResult(False, low)
        lo = markers.prev_one_before(anchor) + 1
        hi = markers.next_one_after(anchor) - 1
        strategy = self._strategy
        while lo <= hi:
            strategy.place_pivot(items, lo, hi, st)
            p = lomuto_partition(items, lo, hi, st)
            markers.set(p)
            st.pivots_settled += 1
            st.comparisons += 1
            pv = items[p]
            if a < pv:
                hi = p - 1
            elif a > pv:
                lo = p + 1
            else:
                return SearchResult(True, p)
        return SearchResult(False, lo)

    def audit_invariant(self):
        """Brute-force check of the marker invariant (test helper, O(n * settled))."""
        items = self.items
        n = len(items)
        markers = self.markers
        for i in range(n):
            if not markers.get(i):
                continue
            v = items[i]
            for j in range(i):
                if items[j] >= v:
                    return False
            for j in range(i + 1, n):
                if items[j] <= v:
                    return False
        return True

    # Binary dump of (A, B): u64 length, then n little-endian i64 items,
    # then the marker words as little-endian u64.  Items must be integers
    # fitting in a signed 64-bit word.

    def to_bytes(self):
        n = len(self.items)
        out = [struct.pack("<Q", n)]
        out.append(struct.pack("<%dq" % n, *self.items))
        words = self.markers.words()
        out.append(struct.pack("<%dQ" % len(words), *words))
        return b"".join(out)

    @classmethod
    def from_bytes(cls, data, strategy=None, probe="binary"):
        (n,) = struct.unpack_from("<Q", data, 0)
        if n == 0:
            raise ValueError("dump contains an empty array")
        off = 8
        items = list(struct.unpack_from("<%dq" % n, data, off))
        off += 8 * n
        n_words = (n + 63) >> 6
        words = list(struct.unpack_from("<%dQ" % n_words, data, off))
        if off + 8 * n_words != len(data):
            raise ValueError("trailing bytes in dump")
        obj = cls.__new__(cls)
        obj.items = items
        obj.markers = MarkerBitVector.from_words(n, words)
        obj._strategy = strategy if strategy is not None else LastElementPivot()
        if probe not in _PROBES:
            raise ValueError("unknown probe rule %r" % (probe,))
        obj._probe = _PROBES[probe]
        obj._stats = QueryStats()
        return obj
