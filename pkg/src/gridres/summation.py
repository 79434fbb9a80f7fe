"""Compensated summation over fixed base blocks with ordered reduction.

Every large reduction in the package is organized around a fixed partition
of the index space into base blocks of BASE_BLOCK items. Workers may
process blocks in any order or in parallel, but block contents and the
final fold order depend only on the index space, never on the worker
count, so results are bit-identical for any level of parallelism.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

import numpy as np

EPS = float(np.finfo(np.float64).eps)

# Fixed partition unit; changing it changes last-bit results, so it is a
# package constant rather than a tuning knob.
BASE_BLOCK = 65536
_LANES = 512

T = TypeVar("T")


class CompensatedSum:
    """Neumaier accumulator with a running rounding-error bound."""

    __slots__ = ("_sum", "_comp", "abs_sum", "count")

    def __init__(self) -> None:
        self._sum = 0.0
        self._comp = 0.0
        self.abs_sum = 0.0
        self.count = 0

    def add(self, x: float) -> None:
        self._accumulate(float(x))
        self.abs_sum += abs(x)
        self.count += 1

    def _accumulate(self, x: float) -> None:
        t = self._sum + x
        if abs(self._sum) >= abs(x):
            self._comp += (self._sum - t) + x
        else:
            self._comp += (x - t) + self._sum
        self._sum = t

    def combine(self, other: "CompensatedSum") -> None:
        """Fold another partial in; callers fix the combine order."""
        self._accumulate(other._sum)
        self._accumulate(other._comp)
        self.abs_sum += other.abs_sum
        self.count += other.count

    @property
    def value(self) -> float:
        return self._sum + self._comp

    @property
    def err_bound(self) -> float:
        # Standard compensated-summation bound: proportional to eps times
        # the total absolute mass, independent of the term count.
        return 2.0 * EPS * self.abs_sum


def block_sum(values: np.ndarray) -> CompensatedSum:
    """Compensated sum of one base block's values.

    Runs Kahan accumulation over _LANES independent lanes (vectorized),
    then folds the lanes in lane order. The result is a pure function of
    the value array.
    """
    acc = CompensatedSum()
    values = np.ascontiguousarray(values, dtype=np.float64).ravel()
    n = values.size
    if n == 0:
        return acc
    if n % _LANES:
        pad = _LANES - (n % _LANES)
        values = np.concatenate([values, np.zeros(pad)])
    rows = values.reshape(-1, _LANES)
    s = np.zeros(_LANES)
    c = np.zeros(_LANES)
    for row in rows:
        t = s + row
        big = np.abs(s) >= np.abs(row)
        c += np.where(big, (s - t) + row, (row - t) + s)
        s = t
    for lane in range(_LANES):
        acc._accumulate(float(s[lane]))
    for lane in range(_LANES):
        acc._accumulate(float(c[lane]))
    acc.abs_sum = float(np.abs(values).sum())
    acc.count = n
    return acc


def block_ranges(total: int, block: int = BASE_BLOCK) -> list[tuple[int, int]]:
    """Partition [0, total) into the fixed base-block ranges."""
    if total <= 0:
        return []
    return [(lo, min(lo + block, total)) for lo in range(0, total, block)]


def map_blocks(
    ranges: Sequence[tuple[int, int]],
    fn: Callable[[int, int], T],
    threads: int = 1,
) -> list[T]:
    """Apply fn to every block range, results in block order."""
    if threads <= 1 or len(ranges) <= 1:
        return [fn(lo, hi) for lo, hi in ranges]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda r: fn(r[0], r[1]), ranges))


def reduce_blocks(
    total: int,
    term_fn: Callable[[int, int], np.ndarray],
    threads: int = 1,
) -> CompensatedSum:
    """Sum term_fn(lo, hi) arrays over the fixed partition of [0, total)."""
    partials = map_blocks(block_ranges(total), lambda lo, hi: block_sum(term_fn(lo, hi)), threads)
    acc = CompensatedSum()
    for partial in partials:
        acc.combine(partial)
    return acc
