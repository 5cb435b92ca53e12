"""Vectorized fallback kernels, used when the compiled extension is absent.

Shared contract with politenum._speedups:

* sieve_chunk(lo, hi): per-n decomposition statistics for lo..hi inclusive,
  as five int64 arrays (total, odd, even, longest, shortest_nontrivial),
  shortest encoded as 0 when n has no nontrivial decomposition.
* window_runs(n): the brute-force sliding-window oracle, a list of
  (start, length) pairs ascending by start. No divisor theory anywhere.
* witness_chunk(lo, hi, allowed, want): first n in lo..hi whose credited
  run lengths all lie in `allowed` and number exactly `want`, else 0.

The sieve iterates divisor/cofactor pairs (d, j) with m = d*j, d odd.
The run length credited to m is d when j >= (d+1)/2 (equivalently
d*d < 2m) and 2j otherwise. Splitting the pair loop at that boundary
keeps both passes bounded by sqrt(2*hi) outer iterations, so chunking
stays cheap even when chunks are small.
"""

from __future__ import annotations

import numpy as np

_NO_SHORTEST = 1 << 62  # sentinel above any realizable run length


def _odd_credit_slices(lo: int, hi: int):
    """Yield (slice, d) for odd-length credits: m = j*d, j >= (d+1)//2."""
    d = 3
    while d * (d + 1) // 2 <= hi:
        j0 = max((d + 1) // 2, -(-lo // d))
        m0 = j0 * d
        if m0 <= hi:
            yield slice(m0 - lo, hi - lo + 1, d), d
        d += 2


def _even_credit_slices(lo: int, hi: int):
    """Yield (slice, 2j) for even-length credits: m = j*d, odd d >= 2j+1."""
    j = 1
    while j * (2 * j + 1) <= hi:
        d0 = max(2 * j + 1, -(-lo // j))
        if d0 % 2 == 0:
            d0 += 1
        m0 = d0 * j
        if m0 <= hi:
            yield slice(m0 - lo, hi - lo + 1, 2 * j), 2 * j
        j += 1


def sieve_chunk(lo: int, hi: int):
    size = hi - lo + 1
    odd = np.ones(size, dtype=np.int64)  # divisor 1 credits every n
    even = np.zeros(size, dtype=np.int64)
    longest = np.ones(size, dtype=np.int64)
    shortest = np.full(size, _NO_SHORTEST, dtype=np.int64)

    for sl, length in _odd_credit_slices(lo, hi):
        odd[sl] += 1
        np.maximum(longest[sl], length, out=longest[sl])
        np.minimum(shortest[sl], length, out=shortest[sl])
    for sl, length in _even_credit_slices(lo, hi):
        even[sl] += 1
        np.maximum(longest[sl], length, out=longest[sl])
        np.minimum(shortest[sl], length, out=shortest[sl])

    shortest[shortest == _NO_SHORTEST] = 0
    return odd + even, odd, even, longest, shortest


def window_runs(n: int) -> list[tuple[int, int]]:
    """Every run of consecutive positive integers summing to n, by sliding window.

    Two pointers, O(n) time, O(1) state. Intentionally naive: this is the
    reference the divisor-based path is checked against.
    """
    runs: list[tuple[int, int]] = []
    lo = 1
    hi = 0
    s = 0
    while lo <= n:
        if s < n:
            hi += 1
            s += hi
        elif s > n:
            s -= lo
            lo += 1
        else:
            runs.append((lo, hi - lo + 1))
            s -= lo
            lo += 1
    return runs


def witness_chunk(lo: int, hi: int, allowed: bytes, want: int) -> int:
    """First n in lo..hi whose spectrum is exactly the allowed set, else 0.

    allowed[L] != 0 marks length L as acceptable; want is the candidate
    size. Credited lengths for a fixed n are pairwise distinct, so
    "every credit allowed and exactly want credits" is set equality.
    """
    size = hi - lo + 1
    mask = np.frombuffer(allowed, dtype=np.uint8)
    ok = np.ones(size, dtype=bool)
    cnt = np.zeros(size, dtype=np.int64)

    if mask[1]:
        cnt += 1  # divisor 1: the one-term run
    else:
        ok[:] = False

    for sl, length in _odd_credit_slices(lo, hi):
        if mask[length]:
            cnt[sl] += 1
        else:
            ok[sl] = False
    for sl, length in _even_credit_slices(lo, hi):
        if mask[length]:
            cnt[sl] += 1
        else:
            ok[sl] = False

    hits = np.flatnonzero(ok & (cnt == want))
    return int(lo + hits[0]) if hits.size else 0
