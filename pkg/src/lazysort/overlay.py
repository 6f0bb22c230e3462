"""Dynamic insert/delete layer over a LazySortedArray.

The original items and the live inserted items form one conceptual
value-ordered sequence (deleted originals stay in it as ghosts, since they
physically remain in the base array).  Two dynamic bitvectors index that
sequence: I marks inserted items, D marks deleted originals.  A treap T
keeps (value, current rank) for every live inserted item; value order and
rank order always coincide, and bulk rank shifts are lazy per subtree.
"""

import random

from .core import LazySortedArray, SearchResult
from .dynbits import DynamicBitVector


class _Node:
    __slots__ = ("value", "pos", "prio", "size", "shift", "left", "right")

    def __init__(self, value, pos, prio):
        self.value = value
        self.pos = pos
        self.prio = prio
        self.size = 1
        self.shift = 0
        self.left = None
        self.right = None


def _size(node):
    return node.size if node is not None else 0


def _push(node):
    s = node.shift
    if s:
        node.pos += s
        if node.left is not None:
            node.left.shift += s
        if node.right is not None:
            node.right.shift += s
        node.shift = 0


def _pull(node):
    node.size = 1 + _size(node.left) + _size(node.right)


def _merge(a, b):
    if a is None:
        return b
    if b is None:
        return a
    if a.prio > b.prio:
        _push(a)
        a.right = _merge(a.right, b)
        _pull(a)
        return a
    _push(b)
    b.left = _merge(a, b.left)
    _pull(b)
    return b


def _split_by_index(node, k):
    """First k items in value order to the left tree, the rest to the right."""
    if node is None:
        return None, None
    _push(node)
    if _size(node.left) >= k:
        left, node.left = _split_by_index(node.left, k)
        _pull(node)
        return left, node
    left, right = _split_by_index(node.right, k - _size(node.left) - 1)
    node.right = left
    _pull(node)
    return node, right


class InsertedItemsTree:
    """Treap over the live inserted items, ordered by value.

    Stored positions are current ranks in the overall list; they stay
    strictly increasing in value order.
    """

    def __init__(self, seed=None):
        self._root = None
        self._rng = random.Random(seed)

    def __len__(self):
        return _size(self._root)

    def count_less(self, value):
        node = self._root
        count = 0
        while node is not None:
            _push(node)
            if node.value < value:
                count += _size(node.left) + 1
                node = node.right
            else:
                node = node.left
        return count

    def find(self, value):
        """Current rank of an inserted item with this value, or None."""
        node = self._root
        while node is not None:
            _push(node)
            if value < node.value:
                node = node.left
            elif value > node.value:
                node = node.right
            else:
                return node.pos
        return None

    def kth(self, t):
        """(value, position) of the t-th inserted item in value order, 1-indexed."""
        if not 1 <= t <= _size(self._root):
            raise IndexError("index %d out of range" % t)
        node = self._root
        while True:
            _push(node)
            ls = _size(node.left)
            if t <= ls:
                node = node.left
            elif t == ls + 1:
                return node.value, node.pos
            else:
                t -= ls + 1
                node = node.right

    def insert(self, value, pos):
        k = self.count_less(value)
        left, right = _split_by_index(self._root, k)
        node = _Node(value, pos, self._rng.random())
        self._root = _merge(_merge(left, node), right)

    def delete_kth(self, t):
        if not 1 <= t <= _size(self._root):
            raise IndexError("index %d out of range" % t)
        left, rest = _split_by_index(self._root, t - 1)
        mid, right = _split_by_index(rest, 1)
        self._root = _merge(left, right)

    def shift_positions_ge(self, threshold, delta):
        """Add delta to the position of every item with position >= threshold."""
        k = self._count_pos_less(threshold)
        left, right = _split_by_index(self._root, k)
        if right is not None:
            right.shift += delta
        self._root = _merge(left, right)

    def _count_pos_less(self, threshold):
        node = self._root
        count = 0
        while node is not None:
            _push(node)
            if node.pos < threshold:
                count += _size(node.left) + 1
                node = node.right
            else:
                node = node.left
        return count

    def pairs(self):
        """All (value, position) pairs in value order (test helper)."""
        out = []

        def walk(node):
            if node is None:
                return
            _push(node)
            walk(node.left)
            out.append((node.value, node.pos))
            walk(node.right)

        walk(self._root)
        return out


class DynamicOverlay:

    def __init__(self, items, strategy=None):
        self.base = LazySortedArray(items, strategy)
        n = len(self.base)
        self.ins_bits = DynamicBitVector([0] * n)
        self.del_bits = DynamicBitVector([0] * n)
        self.tree = InsertedItemsTree()

    def __len__(self):
        """Current logical length n' (originals minus deleted plus inserted)."""
        return len(self.ins_bits) - self.del_bits.count(1)

    def _check_rank(self, i):
        n = len(self)
        if not 0 <= i < n:
            raise IndexError("rank %d out of range [0, %d)" % (i, n))

    def select(self, i):
        """Item of current rank i."""
        self._check_rank(i)
        j = self.del_bits.select(0, i + 1)
        if self.ins_bits.get(j):
            t = self.ins_bits.rank(1, j)
            return self.tree.kth(t)[0]
        orig = j - self.ins_bits.rank(1, j)
        return self.base.select(orig)

    def insert(self, a):
        """Insert a new value; it must differ from every current item."""
        if self.tree.find(a) is not None:
            raise ValueError("duplicate value %r" % (a,))
        res = self.base.search(a)
        t = res.rank
        c = self.tree.count_less(a)
        if res.found and not self.del_bits.get(t + c):
            raise ValueError("duplicate value %r" % (a,))
        j = t + c
        self.ins_bits.insert(j, 1)
        self.del_bits.insert(j, 0)
        pos = j - self.del_bits.rank(1, j)
        self.tree.shift_positions_ge(pos, +1)
        self.tree.insert(a, pos)

    def delete(self, i):
        """Remove the item of current rank i."""
        self._check_rank(i)
        j = self.del_bits.select(0, i + 1)
        if self.ins_bits.get(j):
            t = self.ins_bits.rank(1, j)
            self.tree.delete_kth(t)
            self.ins_bits.delete(j)
            self.del_bits.delete(j)
        else:
            self.del_bits.flip(j)
        self.tree.shift_positions_ge(i + 1, -1)

    def search(self, a):
        """Current rank of value a, or not_found if absent or deleted."""
        pos = self.tree.find(a)
        if pos is not None:
            return SearchResult(True, pos)
        res = self.base.search(a)
        if not res.found:
            return SearchResult(False, None)
        j = res.rank + self.tree.count_less(a)
        if self.del_bits.get(j):
            return SearchResult(False, None)
        return SearchResult(True, j - self.del_bits.rank(1, j))
