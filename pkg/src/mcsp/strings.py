"""Related string pairs, blocks and common partitions.

Strings are handled as ``bytes``: case-sensitive, any alphabet.  A block
``Block(id, i, j)`` names the inclusive slice ``[i, j]`` of string ``id``
(0 for X, 1 for Y).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .errors import EmptyInput, LengthMismatch, MultisetMismatch, OutOfBounds

StrLike = Union[bytes, bytearray, str]

X_ID = 0
Y_ID = 1


def as_bytes(s: StrLike) -> bytes:
    if isinstance(s, str):
        return s.encode("ascii")
    return bytes(s)


@dataclass(frozen=True, order=True)
class Block:
    id: int
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.id not in (X_ID, Y_ID):
            raise ValueError(f"block id must be 0 or 1, got {self.id}")
        if not 0 <= self.i <= self.j:
            raise OutOfBounds(f"invalid block bounds [{self.id},{self.i},{self.j}]")

    @property
    def length(self) -> int:
        return self.j - self.i + 1

    def __repr__(self) -> str:
        return f"[{self.id},{self.i},{self.j}]"


@dataclass(frozen=True)
class RelatedPair:
    """A validated MCSP instance; build it with :func:`check_related`."""

    x: bytes
    y: bytes
    alphabet: frozenset = field(compare=False)

    @property
    def n(self) -> int:
        return len(self.x)

    def string(self, which: int) -> bytes:
        if which == X_ID:
            return self.x
        if which == Y_ID:
            return self.y
        raise ValueError(f"string id must be 0 or 1, got {which}")

    def swapped(self) -> "RelatedPair":
        return RelatedPair(self.y, self.x, self.alphabet)


def check_related(x: StrLike, y: StrLike) -> RelatedPair:
    """Validate that ``x`` and ``y`` are related and wrap them.

    >>> check_related("ababcab", "abcabab").n
    7
    """
    x, y = as_bytes(x), as_bytes(y)
    if not x or not y:
        raise EmptyInput("both strings must be non-empty")
    if len(x) != len(y):
        raise LengthMismatch(f"lengths differ: {len(x)} vs {len(y)}")
    cx, cy = Counter(x), Counter(y)
    if cx != cy:
        diff = sorted(c for c in set(cx) | set(cy) if cx[c] != cy[c])
        raise MultisetMismatch(f"letter counts differ for {bytes(diff)!r}")
    return RelatedPair(x, y, frozenset(cx))


def substring_of(pair: RelatedPair, b: Block) -> bytes:
    s = pair.string(b.id)
    if b.j >= len(s):
        raise OutOfBounds(f"block {b!r} exceeds string length {len(s)}")
    return s[b.i:b.j + 1]


def match_list(blocks: Iterable[Block], b: Block, pair: RelatedPair) -> list[Block]:
    """Members of ``blocks`` inducing the same substring as ``b``, in input order."""
    target = substring_of(pair, b)
    return [c for c in blocks if substring_of(pair, c) == target]


@dataclass(frozen=True)
class CommonPartition:
    p_blocks: tuple[Block, ...]
    q_blocks: tuple[Block, ...]

    def __init__(self, p_blocks: Sequence[Block], q_blocks: Sequence[Block]) -> None:
        object.__setattr__(self, "p_blocks", tuple(p_blocks))
        object.__setattr__(self, "q_blocks", tuple(q_blocks))

    @property
    def size(self) -> int:
        return len(self.p_blocks)

    def pieces(self, pair: RelatedPair) -> tuple[list[bytes], list[bytes]]:
        return ([substring_of(pair, b) for b in self.p_blocks],
                [substring_of(pair, b) for b in self.q_blocks])

    def pairs(self, pair: RelatedPair) -> list[tuple[Block, Block]]:
        """Match P blocks to Q blocks; within a substring class by ascending start."""
        queues: dict[bytes, list[Block]] = {}
        for b in sorted(self.q_blocks, key=lambda b: b.i, reverse=True):
            queues.setdefault(substring_of(pair, b), []).append(b)
        out = []
        for b in sorted(self.p_blocks, key=lambda b: b.i):
            out.append((b, queues[substring_of(pair, b)].pop()))
        return out

    def swapped(self) -> "CommonPartition":
        flip = lambda bs: [Block(1 - b.id, b.i, b.j) for b in bs]  # noqa: E731
        return CommonPartition(flip(self.q_blocks), flip(self.p_blocks))


def _tiles(blocks: Sequence[Block], which: int, n: int) -> bool:
    pos = 0
    for b in blocks:
        if b.id != which or b.i != pos or b.j >= n:
            return False
        pos = b.j + 1
    return pos == n


def validate_common_partition(pair: RelatedPair, cand: CommonPartition) -> bool:
    try:
        if not (_tiles(cand.p_blocks, X_ID, pair.n) and _tiles(cand.q_blocks, Y_ID, pair.n)):
            return False
        px, qy = cand.pieces(pair)
    except (OutOfBounds, ValueError, AttributeError, TypeError):
        return False
    return Counter(px) == Counter(qy)
