"""Online rank-selection and value-search over a progressively sorting array."""

from .bits import MarkerBitVector
from .core import LazySortedArray, SearchResult
from .dynbits import DynamicBitVector
from .overlay import DynamicOverlay, InsertedItemsTree
from .pivots import (LastElementPivot, MedianOfMediansPivot, RandomizedPivot,
                     lomuto_partition, make_strategy)
from .stats import QueryStats

__all__ = [
    "DynamicBitVector",
    "DynamicOverlay",
    "InsertedItemsTree",
    "LastElementPivot",
    "LazySortedArray",
    "MarkerBitVector",
    "MedianOfMediansPivot",
    "QueryStats",
    "RandomizedPivot",
    "SearchResult",
    "lomuto_partition",
    "make_strategy",
]

__version__ = "0.1.0"
