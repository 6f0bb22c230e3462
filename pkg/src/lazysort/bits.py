"""Fixed-length word-packed bitvector marking settled pivot positions.

Bits only ever transition 0 -> 1; there is deliberately no clear operation,
which makes the monotonicity guarantee structural.  Nearest-set-bit scans
walk whole 64-bit words at a time.
"""

_WORD = 64
_MASK = (1 << _WORD) - 1


class MarkerBitVector:

    __slots__ = ("_n", "_words")

    def __init__(self, n):
        if n < 1:
            raise ValueError("bitvector length must be at least 1, got %r" % (n,))
        self._n = n
        self._words = [0] * ((n + _WORD - 1) >> 6)

    def __len__(self):
        return self._n

    def _check(self, i):
        if not 0 <= i < self._n:
            raise IndexError("position %d out of range [0, %d)" % (i, self._n))

    def set(self, i):
        self._check(i)
        self._words[i >> 6] |= 1 << (i & 63)

    def get(self, i):
        self._check(i)
        return (self._words[i >> 6] >> (i & 63)) & 1 == 1

    def prev_one_before(self, k):
        """Greatest set position strictly left of k.  Requires one to exist."""
        if not 0 < k < self._n:
            raise IndexError("position %d out of range (0, %d)" % (k, self._n))
        w = k >> 6
        word = self._words[w] & ((1 << (k & 63)) - 1)
        while word == 0:
            w -= 1
            if w < 0:
                raise RuntimeError("no set bit left of position %d" % k)
            word = self._words[w]
        return (w << 6) + word.bit_length() - 1

    def next_one_after(self, k):
        """Least set position strictly right of k.  Requires one to exist."""
        if not 0 <= k < self._n - 1:
            raise IndexError("position %d out of range [0, %d)" % (k, self._n - 1))
        w = k >> 6
        word = self._words[w] & (_MASK ^ ((1 << ((k & 63) + 1)) - 1))
        while word == 0:
            w += 1
            if w >= len(self._words):
                raise RuntimeError("no set bit right of position %d" % k)
            word = self._words[w]
        pos = (w << 6) + (word & -word).bit_length() - 1
        if pos >= self._n:
            raise RuntimeError("no set bit right of position %d" % k)
        return pos

    def count_ones(self):
        return sum(w.bit_count() for w in self._words)

    def all_ones(self):
        return self.count_ones() == self._n

    def words(self):
        """Packed 64-bit words, low bit first (for serialization)."""
        return list(self._words)

    @classmethod
    def from_words(cls, n, words):
        bv = cls(n)
        if len(words) != len(bv._words):
            raise ValueError("expected %d words, got %d" % (len(bv._words), len(words)))
        bv._words = [w & _MASK for w in words]
        return bv
