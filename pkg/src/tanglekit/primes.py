"""Incremental prime table.

nth(1) == 2.  The table grows on demand behind a lock, so concurrent
callers always see a fully consistent prefix; observable behavior is
identical to a precomputed table.  Index domain is capped at desk scale.
"""

from __future__ import annotations

import threading

MAX_INDEX = 10**6


class _PrimeTable:
    def __init__(self):
        self._primes: list[int] = [2, 3, 5, 7, 11, 13]
        self._lock = threading.Lock()

    def nth(self, n: int) -> int:
        if not 1 <= n <= MAX_INDEX:
            raise ValueError(f"prime index {n} outside 1..{MAX_INDEX}")
        primes = self._primes
        if n <= len(primes):
            return primes[n - 1]
        with self._lock:
            while n > len(self._primes):
                self._extend()
        return self._primes[n - 1]

    def _extend(self) -> None:
        # Sieve the next segment; segment length grows with the table.
        primes = self._primes
        lo = primes[-1] + 1
        hi = lo + max(1000, 4 * len(primes))
        seg = bytearray([1]) * (hi - lo)
        for p in primes:
            if p * p >= hi:
                break
            start = ((lo + p - 1) // p) * p
            for q in range(start, hi, p):
                seg[q - lo] = 0
        found = [lo + i for i, alive in enumerate(seg) if alive]
        # Candidates <= (last prime)^2 are certified by trial primes alone.
        limit = primes[-1] ** 2
        self._primes = primes + [q for q in found if q <= limit]


_TABLE = _PrimeTable()


def nth_prime(n: int) -> int:
    """The n-th prime, 1-based (nth_prime(1) == 2)."""
    return _TABLE.nth(n)
