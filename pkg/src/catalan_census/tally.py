"""Vectorised counting over ranges of n, split into chunks.

The kernels mirror :func:`classify_two_adic` and :func:`catalan_mod3` on
numpy ``uint64`` arrays.  Chunks may be processed by a thread pool (numpy
releases the GIL); per-chunk tallies are integer arrays merged by
addition, so the result does not depend on the worker count.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Tuple

import numpy as np

CHUNK = 1 << 20
# Beyond this, n + 1 would not fit the uint64 kernels comfortably.
KERNEL_LIMIT = 1 << 62


def two_adic_valuations(lo: int, hi: int) -> np.ndarray:
    """popcount(alpha(n)) for n in [lo, hi), as uint8."""
    if not 0 <= lo <= hi <= KERNEL_LIMIT:
        raise OverflowError(f"range [{lo}, {hi}) outside kernel limit")
    m = np.arange(lo + 1, hi + 1, dtype=np.uint64)
    low_bit = m & (~m + np.uint64(1))
    tz = np.bitwise_count(low_bit - np.uint64(1))
    alpha = (m >> tz.astype(np.uint64)) >> np.uint64(1)
    return np.bitwise_count(alpha)


def mod3_residues(lo: int, hi: int) -> np.ndarray:
    """C_n mod 3 for n in [lo, hi), as uint8."""
    if not 0 <= lo <= hi <= KERNEL_LIMIT:
        raise OverflowError(f"range [{lo}, {hi}) outside kernel limit")
    q = np.arange(lo + 1, hi + 1, dtype=np.uint64) // np.uint64(3)
    bad = np.zeros(q.shape, dtype=bool)
    ones = np.zeros(q.shape, dtype=np.uint8)
    three = np.uint64(3)
    while q.size and q.any():
        r = q % three
        bad |= r == 2
        ones += (r == 1).astype(np.uint8)
        q //= three
    res = np.where(ones & 1, 2, 1).astype(np.uint8)
    res[bad] = 0
    return res


def split(lo: int, hi: int, chunk: int = CHUNK) -> List[Tuple[int, int]]:
    return [(a, min(a + chunk, hi)) for a in range(lo, hi, chunk)]


def map_chunks(
    func: Callable[[int, int], np.ndarray],
    chunks: Iterable[Tuple[int, int]],
    workers: int = 1,
) -> List[np.ndarray]:
    chunks = list(chunks)
    if workers <= 1 or len(chunks) <= 1:
        return [func(a, b) for a, b in chunks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda ab: func(*ab), chunks))


def valuation_histogram(lo: int, hi: int, workers: int = 1, chunk: int = CHUNK) -> List[int]:
    """hist[j] = #{lo <= n < hi : popcount(alpha(n)) == j}."""

    def one(a: int, b: int) -> np.ndarray:
        return np.bincount(two_adic_valuations(a, b), minlength=64).astype(np.int64)

    total = np.zeros(64, dtype=np.int64)
    for part in map_chunks(one, split(lo, hi, chunk), workers):
        total += part
    return [int(x) for x in total]


def count_divisible_2k(lo: int, hi: int, k: int, workers: int = 1, chunk: int = CHUNK) -> int:
    """#{lo <= n < hi : 2^k | C_n}."""
    return sum(valuation_histogram(lo, hi, workers, chunk)[k:])


def mod3_histogram(lo: int, hi: int, workers: int = 1, chunk: int = CHUNK) -> List[int]:
    """[#residue 0, #residue 1, #residue 2] over n in [lo, hi)."""

    def one(a: int, b: int) -> np.ndarray:
        return np.bincount(mod3_residues(a, b), minlength=3).astype(np.int64)

    total = np.zeros(3, dtype=np.int64)
    for part in map_chunks(one, split(lo, hi, chunk), workers):
        total += part
    return [int(x) for x in total]
