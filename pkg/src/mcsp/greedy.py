"""Greedy MCSP baseline: repeatedly match a longest common substring.

Ties between equally long candidates go to the smallest start in X, then
the smallest start in Y.
"""
from __future__ import annotations

import numpy as np

from . import kernels
from .strings import Block, CommonPartition, RelatedPair, X_ID, Y_ID


def greedy_pieces(ext: np.ndarray, free_x: np.ndarray, free_y: np.ndarray) -> list[tuple[int, int, int]]:
    """Run the greedy on the free parts of both strings, updating the masks in place.

    Returns ``(i, q, length)`` triples: X start, Y start, piece length.
    """
    out = []
    while True:
        length, i, q = kernels.longest_free_common(ext, free_x, free_y)
        if length == 0:
            return out
        free_x[i:i + length] = 0
        free_y[q:q + length] = 0
        out.append((i, q, length))


def pieces_to_partition(pieces) -> CommonPartition:
    p = sorted((Block(X_ID, i, i + k - 1) for i, _, k in pieces), key=lambda b: b.i)
    q = sorted((Block(Y_ID, j, j + k - 1) for _, j, k in pieces), key=lambda b: b.i)
    return CommonPartition(p, q)


def greedy_partition(pair: RelatedPair, ext: np.ndarray | None = None) -> CommonPartition:
    if ext is None:
        ext = kernels.extension_table(pair.x, pair.y)
    free_x = np.ones(pair.n, dtype=np.uint8)
    free_y = np.ones(pair.n, dtype=np.uint8)
    return pieces_to_partition(greedy_pieces(ext, free_x, free_y))
