"""Growable bit sequence with rank/select/insert/delete/flip.

Two-level layout: a list of blocks (small lists of 0/1) with a cached ones
count per block.  Every operation walks the block directory and touches one
block, so the cost is O(length / block + block).

Conventions: rank(b, i) counts b-bits in positions 0..i inclusive, with
rank(b, -1) == 0; select(b, j) is 1-indexed by occurrence and returns the
position p with bit p == b and rank(b, p) == j.
"""

_BLOCK = 256


class DynamicBitVector:

    __slots__ = ("_blocks", "_ones", "_len")

    def __init__(self, bits=None):
        self._blocks = []
        self._ones = []
        self._len = 0
        if bits:
            bits = [1 if b else 0 for b in bits]
            for i in range(0, len(bits), _BLOCK):
                chunk = bits[i:i + _BLOCK]
                self._blocks.append(chunk)
                self._ones.append(sum(chunk))
            self._len = len(bits)
        if not self._blocks:
            self._blocks.append([])
            self._ones.append(0)

    def __len__(self):
        return self._len

    def _locate(self, i):
        """Block index and offset for position i (0 <= i < len)."""
        for bi, block in enumerate(self._blocks):
            if i < len(block):
                return bi, i
            i -= len(block)
        raise IndexError("position out of range")

    def get(self, i):
        if not 0 <= i < self._len:
            raise IndexError("position %d out of range [0, %d)" % (i, self._len))
        bi, off = self._locate(i)
        return self._blocks[bi][off]

    def count(self, b):
        ones = sum(self._ones)
        return ones if b else self._len - ones

    def rank(self, b, i):
        """Number of b bits in positions 0..i inclusive; rank(b, -1) == 0."""
        if i == -1:
            return 0
        if not 0 <= i < self._len:
            raise IndexError("position %d out of range [-1, %d)" % (i, self._len))
        ones = 0
        pos = i
        for bi, block in enumerate(self._blocks):
            if pos < len(block):
                ones += sum(block[:pos + 1])
                break
            ones += self._ones[bi]
            pos -= len(block)
        return ones if b else (i + 1) - ones

    def select(self, b, j):
        """Position of the j-th b bit (1-indexed)."""
        if j < 1 or j > self.count(b):
            raise IndexError("occurrence %d out of range for bit %d" % (j, b))
        base = 0
        for bi, block in enumerate(self._blocks):
            here = self._ones[bi] if b else len(block) - self._ones[bi]
            if j <= here:
                for off, bit in enumerate(block):
                    if bit == b:
                        j -= 1
                        if j == 0:
                            return base + off
            j -= here
            base += len(block)
        raise AssertionError("unreachable: select miscounted")

    def insert(self, i, b):
        if not 0 <= i <= self._len:
            raise IndexError("position %d out of range [0, %d]" % (i, self._len))
        b = 1 if b else 0
        bi = 0
        for bi, block in enumerate(self._blocks):
            if i <= len(block):
                break
            i -= len(block)
        else:
            block = self._blocks[-1]
        block.insert(i, b)
        self._ones[bi] += b
        self._len += 1
        if len(block) > 2 * _BLOCK:
            half = len(block) // 2
            right = block[half:]
            del block[half:]
            self._ones[bi] = sum(block)
            self._blocks.insert(bi + 1, right)
            self._ones.insert(bi + 1, sum(right))

    def delete(self, i):
        if not 0 <= i < self._len:
            raise IndexError("position %d out of range [0, %d)" % (i, self._len))
        bi, off = self._locate(i)
        block = self._blocks[bi]
        self._ones[bi] -= block.pop(off)
        self._len -= 1
        if not block and len(self._blocks) > 1:
            del self._blocks[bi]
            del self._ones[bi]

    def flip(self, i):
        if not 0 <= i < self._len:
            raise IndexError("position %d out of range [0, %d)" % (i, self._len))
        bi, off = self._locate(i)
        bit = self._blocks[bi][off]
        self._blocks[bi][off] = bit ^ 1
        self._ones[bi] += 1 - 2 * bit

    def to_list(self):
        out = []
        for block in self._blocks:
            out.extend(block)
        return out
