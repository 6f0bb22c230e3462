"""Benchmark harness: timing/counter experiments and machine-readable tables.

Modes:
  select_sort        sort by selecting ranks 1,3,5,... (even ranks are forced)
  sqrt_selections    floor(sqrt(n)) distinct uniform-random rank selections
  quicksort_baseline plain in-place quicksort with the same pivot strategy
  search_old         full quicksort, then q value searches on the sorted array
  search_new         q online searches on the lazy structure
  theorem1           mean quickselect comparisons for q uniform distinct ranks

Every run ends with a correctness audit of the final structure (skipped with
--with-duplicates, whose inputs violate the distinctness precondition and
exist for timing comparability only).
"""

import argparse
import gc
import random
import sys
import time
from dataclasses import dataclass
from math import isqrt

from .core import LazySortedArray
from .pivots import lomuto_partition, make_strategy
from .stats import QueryStats

MODES = ("select_sort", "sqrt_selections", "quicksort_baseline",
         "search_old", "search_new", "theorem1")


class VerificationError(Exception):
    """A benchmark produced a structurally incorrect result."""


@dataclass
class BenchConfig:
    mode: str
    n: int
    q: int = 0
    pivot: str = "last"
    seed: int = 0
    trials: int = 5
    output: str = "csv"
    probe: str = "binary"
    with_duplicates: bool = False


@dataclass
class BenchRow:
    mode: str
    n: int
    q: int
    pivot: str
    trials: int
    mean_seconds: float
    mean_comparisons: float
    mean_swaps: float


def harmonic(q):
    return sum(1.0 / i for i in range(1, q + 1))


def _make_input(n, rng, with_duplicates):
    if with_duplicates:
        return [rng.randrange(n) for _ in range(n)]
    arr = list(range(n))
    rng.shuffle(arr)
    return arr


def quicksort(items, strategy, stats):
    """In-place quicksort driven by the same pivot contract as the queries."""
    stack = [(0, len(items) - 1)]
    while stack:
        x, y = stack.pop()
        if x >= y:
            continue
        strategy.place_pivot(items, x, y, stats)
        p = lomuto_partition(items, x, y, stats)
        stack.append((x, p - 1))
        stack.append((p + 1, y))


def _binary_search_sorted(items, a, stats):
    low, high = 0, len(items) - 1
    while low <= high:
        mid = (low + high) // 2
        stats.comparisons += 1
        v = items[mid]
        if a < v:
            high = mid - 1
        elif a > v:
            low = mid + 1
        else:
            return True, mid
    return False, low


def _interp_search_sorted(items, a, stats):
    low, high = 0, len(items) - 1
    while low <= high:
        lo_v = items[low]
        hi_v = items[high]
        if hi_v <= lo_v:
            mid = (low + high) // 2
        else:
            mid = low + int((a - lo_v) * (high - low) // (hi_v - lo_v))
            mid = min(max(mid, low), high)
        stats.comparisons += 1
        v = items[mid]
        if a < v:
            high = mid - 1
        elif a > v:
            low = mid + 1
        else:
            return True, mid
    return False, low


def _reference_rank(sorted_ref, a):
    """(present, rank) of a in a sorted list, by plain bisection."""
    import bisect
    i = bisect.bisect_left(sorted_ref, a)
    if i < len(sorted_ref) and sorted_ref[i] == a:
        return True, i
    return False, i


def _run_trial(config, trial):
    rng = random.Random(config.seed * 1_000_003 + trial)
    arr = _make_input(config.n, rng, config.with_duplicates)
    ref = sorted(arr)
    n = config.n
    verify = not config.with_duplicates
    mode = config.mode

    if mode == "select_sort":
        t0 = time.monotonic()
        lsa = LazySortedArray(arr, make_strategy(config.pivot, config.seed),
                              probe=config.probe)
        for k in range(1, n, 2):
            lsa.select(k)
        elapsed = time.monotonic() - t0
        snap = lsa.stats()
        if verify:
            # Remaining gaps all have width one; selecting them is free.
            for k in range(0, n, 2):
                lsa.select(k)
            if lsa.items != ref or not lsa.markers.all_ones():
                raise VerificationError("select_sort did not sort the array")
        return elapsed, snap

    if mode == "sqrt_selections":
        q = isqrt(n)
        ranks = rng.sample(range(n), q)
        t0 = time.monotonic()
        lsa = LazySortedArray(arr, make_strategy(config.pivot, config.seed),
                              probe=config.probe)
        answers = [lsa.select(k) for k in ranks]
        elapsed = time.monotonic() - t0
        snap = lsa.stats()
        if verify and any(a != ref[k] for a, k in zip(answers, ranks)):
            raise VerificationError("sqrt_selections returned a wrong answer")
        return elapsed, snap

    if mode == "quicksort_baseline":
        stats = QueryStats()
        strategy = make_strategy(config.pivot, config.seed)
        t0 = time.monotonic()
        quicksort(arr, strategy, stats)
        elapsed = time.monotonic() - t0
        if verify and arr != ref:
            raise VerificationError("quicksort produced an unsorted array")
        return elapsed, stats

    q = config.q or isqrt(n)
    keys = [rng.randrange(n) for _ in range(q)]
    searcher = (_interp_search_sorted if config.probe == "interpolation"
                else _binary_search_sorted)

    if mode == "search_old":
        stats = QueryStats()
        strategy = make_strategy(config.pivot, config.seed)
        t0 = time.monotonic()
        quicksort(arr, strategy, stats)
        results = [searcher(arr, a, stats) for a in keys]
        elapsed = time.monotonic() - t0
        stats.queries_answered += q
        if verify:
            for a, (found, rank) in zip(keys, results):
                if (found, rank) != _reference_rank(ref, a):
                    raise VerificationError("search_old returned a wrong answer")
        return elapsed, stats

    if mode == "search_new":
        t0 = time.monotonic()
        lsa = LazySortedArray(arr, make_strategy(config.pivot, config.seed),
                              probe=config.probe)
        results = [lsa.search(a) for a in keys]
        elapsed = time.monotonic() - t0
        snap = lsa.stats()
        if verify:
            for a, res in zip(keys, results):
                if (res.found, res.rank) != _reference_rank(ref, a):
                    raise VerificationError("search_new returned a wrong answer")
        return elapsed, snap

    if mode == "theorem1":
        q = config.q
        if not 1 <= q <= n:
            raise VerificationError("theorem1 requires 1 <= q <= n")
        ranks = rng.sample(range(n), q)
        t0 = time.monotonic()
        lsa = LazySortedArray(arr, make_strategy(config.pivot, config.seed),
                              probe=config.probe)
        baseline = lsa.stats().comparisons
        answers = [lsa.select(k) for k in ranks]
        elapsed = time.monotonic() - t0
        if verify and any(a != ref[k] for a, k in zip(answers, ranks)):
            raise VerificationError("theorem1 selection returned a wrong answer")
        snap = lsa.stats()
        # Report quickselect comparisons only: preprocessing excluded.
        snap.comparisons -= baseline
        return elapsed, snap

    raise VerificationError("unknown mode %r" % (mode,))


def run(config):
    """Execute the configured mode and return a single aggregated row."""
    if config.mode not in MODES:
        raise ValueError("unknown mode %r" % (config.mode,))
    if config.trials < 1:
        raise ValueError("trials must be >= 1")
    if config.q > config.n:
        raise ValueError("q must not exceed n")
    times = []
    comps = []
    swaps = []
    # Collector pauses are noise at these input sizes; nothing cyclic is
    # allocated inside the timed region.
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        for trial in range(config.trials):
            elapsed, stats = _run_trial(config, trial)
            times.append(elapsed)
            comps.append(stats.comparisons)
            swaps.append(stats.swaps)
    finally:
        if was_enabled:
            gc.enable()
    t = config.trials
    q = config.q
    if config.mode == "sqrt_selections" or (config.mode in ("search_old", "search_new") and not q):
        q = isqrt(config.n)
    return [BenchRow(config.mode, config.n, q, config.pivot, t,
                     sum(times) / t, sum(comps) / t, sum(swaps) / t)]


CSV_HEADER = "mode,n,q,pivot,trials,mean_seconds,mean_comparisons,mean_swaps"


def emit(rows, fmt="csv"):
    """Render rows deterministically as CSV or a markdown table."""
    if not rows:
        raise ValueError("no rows to emit")
    cells = [(r.mode, str(r.n), str(r.q), r.pivot, str(r.trials),
              "%.6f" % r.mean_seconds, "%.1f" % r.mean_comparisons,
              "%.1f" % r.mean_swaps) for r in rows]
    if fmt == "csv":
        lines = [CSV_HEADER]
        lines.extend(",".join(c) for c in cells)
        return "\n".join(lines) + "\n"
    if fmt == "markdown":
        header = CSV_HEADER.split(",")
        lines = ["| " + " | ".join(header) + " |",
                 "|" + "|".join(["---"] * len(header)) + "|"]
        lines.extend("| " + " | ".join(c) + " |" for c in cells)
        return "\n".join(lines) + "\n"
    raise ValueError("unknown format %r" % (fmt,))


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="lazysort-bench",
        description="Timing and comparison-count benchmarks for the lazy "
                    "sorted array.")
    parser.add_argument("--mode", required=True, choices=MODES)
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--q", type=int, default=0,
                        help="query count (search and theorem1 modes)")
    parser.add_argument("--pivot", choices=("last", "random", "mom"),
                        default="last")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=5)
    parser.add_argument("--format", choices=("csv", "markdown"), default="csv")
    parser.add_argument("--probe", choices=("binary", "interpolation"),
                        default="binary")
    parser.add_argument("--with-duplicates", action="store_true",
                        help="paper-style duplicate-bearing inputs; "
                             "disables correctness audits")
    args = parser.parse_args(argv)
    config = BenchConfig(mode=args.mode, n=args.n, q=args.q, pivot=args.pivot,
                         seed=args.seed, trials=args.trials,
                         output=args.format, probe=args.probe,
                         with_duplicates=args.with_duplicates)
    try:
        rows = run(config)
    except (ValueError, VerificationError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    sys.stdout.write(emit(rows, config.output))
    return 0


if __name__ == "__main__":
    sys.exit(main())
