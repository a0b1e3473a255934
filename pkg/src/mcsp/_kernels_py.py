"""Numpy fallback for the compiled kernels in ``_kernels.pyx``.

Both implementations take and return the same array types:

* ``ext``: ``int32`` array of shape ``(n + 1, m + 1)``; ``ext[i, q]`` is the
  length of the longest common prefix of ``x[i:]`` and ``y[q:]``.
* ``free`` masks: ``uint8`` arrays, 1 where a position is still unmatched.
"""
from __future__ import annotations

import numpy as np

IMPLEMENTATION = "python"


def extension_table(x: bytes, y: bytes) -> np.ndarray:
    n, m = len(x), len(y)
    xa = np.frombuffer(x, dtype=np.uint8)
    ya = np.frombuffer(y, dtype=np.uint8)
    ext = np.zeros((n + 1, m + 1), dtype=np.int32)
    for i in range(n - 1, -1, -1):
        ext[i, :m] = np.where(ya == xa[i], ext[i + 1, 1:] + 1, 0)
    return ext


def free_runs(free: np.ndarray) -> np.ndarray:
    """Length of the run of free positions starting at each index (plus a trailing 0)."""
    n = free.shape[0]
    runs = np.zeros(n + 1, dtype=np.int32)
    for q in range(n - 1, -1, -1):
        if free[q]:
            runs[q] = runs[q + 1] + 1
    return runs


def placement_limits(ext: np.ndarray, p: int, free_y: np.ndarray) -> np.ndarray:
    """Longest piece starting at ``x[p]`` that fits at each free start ``q`` of y."""
    m = free_y.shape[0]
    runs = free_runs(free_y)
    return np.minimum(ext[p, :m], runs[:m])


def suffix_bound(ext: np.ndarray, p: int, free_y: np.ndarray) -> int:
    """Lower bound on the number of pieces needed to match ``x[p:]`` against free y.

    Max of two relaxations: tile ``x[p:]`` by strings occurring inside some
    free fragment of y, and tile every free fragment of y by substrings of
    ``x[p:]``.  Both sets of allowed pieces are closed under taking
    substrings, so furthest-jump greedy is optimal for each.
    """
    n = ext.shape[0] - 1
    m = free_y.shape[0]
    if p >= n:
        return 0
    runs = free_runs(free_y)
    sub = np.minimum(ext[p:n, :m], runs[None, :m])
    reach_x = sub.max(axis=1)
    reach_y = sub.max(axis=0)

    count_x = 0
    i = 0
    while i < n - p:
        i += max(int(reach_x[i]), 1)
        count_x += 1

    count_y = 0
    q = 0
    while q < m:
        if free_y[q]:
            q += max(int(reach_y[q]), 1)
            count_y += 1
        else:
            q += 1
    return max(count_x, count_y)


def longest_free_common(ext: np.ndarray, free_x: np.ndarray, free_y: np.ndarray) -> tuple[int, int, int]:
    """Longest common substring lying inside free regions of both strings.

    Returns ``(length, i, q)``; ties go to the smallest ``i`` then smallest
    ``q``.  ``length`` is 0 when no free position is left.
    """
    n, m = free_x.shape[0], free_y.shape[0]
    rx = free_runs(free_x)
    ry = free_runs(free_y)
    sub = np.minimum(np.minimum(ext[:n, :m], rx[:n, None]), ry[None, :m])
    flat = int(np.argmax(sub))
    i, q = divmod(flat, m)
    length = int(sub[i, q])
    if length == 0:
        return 0, -1, -1
    return length, i, q
