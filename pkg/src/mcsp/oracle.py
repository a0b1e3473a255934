"""Exhaustive MCSP for tiny instances, used as ground truth in tests.

Every composition of X is enumerated, fewest blocks first; for each one a
plain depth-first search checks whether Y can be cut into exactly that
multiset of pieces.  No clever pruning on purpose.
"""
from __future__ import annotations

from collections import Counter
from itertools import combinations

from .errors import InstanceTooLarge
from .strings import Block, CommonPartition, RelatedPair, X_ID, Y_ID

DEFAULT_MAX_N = 14


def _compositions(n: int, parts: int):
    for cuts in combinations(range(1, n), parts - 1):
        bounds = (0,) + cuts + (n,)
        yield [(bounds[k], bounds[k + 1] - 1) for k in range(parts)]


def _tile(y: bytes, pos: int, pieces: Counter, acc: list) -> bool:
    if pos == len(y):
        return True
    for piece in list(pieces):
        if pieces[piece] and y.startswith(piece, pos):
            pieces[piece] -= 1
            acc.append((pos, pos + len(piece) - 1))
            if _tile(y, pos + len(piece), pieces, acc):
                return True
            acc.pop()
            pieces[piece] += 1
    return False


def brute_force_mcsp(pair: RelatedPair, max_n: int = DEFAULT_MAX_N) -> tuple[int, CommonPartition]:
    if pair.n > max_n:
        raise InstanceTooLarge(f"n={pair.n} exceeds oracle cap {max_n}")
    x, y, n = pair.x, pair.y, pair.n
    for parts in range(1, n + 1):
        for comp in _compositions(n, parts):
            pieces = Counter(x[i:j + 1] for i, j in comp)
            acc: list[tuple[int, int]] = []
            if _tile(y, 0, pieces, acc):
                return parts, CommonPartition(
                    [Block(X_ID, i, j) for i, j in comp],
                    [Block(Y_ID, i, j) for i, j in acc],
                )
    raise AssertionError("related strings always have a common partition")
