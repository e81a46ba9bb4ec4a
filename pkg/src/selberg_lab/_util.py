"""Small shared numerical helpers."""

from __future__ import annotations

import math

import numpy as np

INT64_MAX = np.iinfo(np.int64).max


def compensated_sum(values) -> float:
    """Error-compensated sum of a float array (exactly rounded)."""
    return math.fsum(np.asarray(values, dtype=np.float64))


def next_pow2(n: int) -> int:
    """Smallest power of two >= n."""
    if n <= 1:
        return 1
    return 1 << (int(n - 1).bit_length())


def primes_upto(n: int) -> np.ndarray:
    """All primes <= n, by Eratosthenes."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(n + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.nonzero(mask)[0].astype(np.int64)
