"""Common substring graphs.

The graph for string ``which`` has one vertex per position and one edge
block ``[which, i, j]`` for every slice whose text also occurs in the other
string.  Edges are found with matching statistics against a suffix
automaton of the other string: for a fixed start ``i`` the valid ends form
a prefix ``i .. i + L(i) - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal, TextIO

from .errors import VertexOutOfRange
from .strings import Block, RelatedPair, X_ID, Y_ID, substring_of


class SuffixAutomaton:
    """Minimal DFA accepting every substring of ``text``."""

    def __init__(self, text: bytes) -> None:
        self.next: list[dict[int, int]] = [{}]
        self.link: list[int] = [-1]
        self.length: list[int] = [0]
        last = 0
        for c in text:
            last = self._extend(last, c)

    def _extend(self, last: int, c: int) -> int:
        nxt, link, length = self.next, self.link, self.length
        cur = len(nxt)
        nxt.append({})
        link.append(0)
        length.append(length[last] + 1)
        p = last
        while p != -1 and c not in nxt[p]:
            nxt[p][c] = cur
            p = link[p]
        if p != -1:
            q = nxt[p][c]
            if length[p] + 1 == length[q]:
                link[cur] = q
            else:
                clone = len(nxt)
                nxt.append(dict(nxt[q]))
                link.append(link[q])
                length.append(length[p] + 1)
                while p != -1 and nxt[p].get(c) == q:
                    nxt[p][c] = clone
                    p = link[p]
                link[q] = link[cur] = clone
        return cur

    def __contains__(self, s: bytes) -> bool:
        state = 0
        for c in s:
            state = self.next[state].get(c, -1)
            if state < 0:
                return False
        return True

    def matching_statistics(self, s: bytes) -> list[int]:
        """``ms[i]`` = length of the longest prefix of ``s[i:]`` occurring in the text."""
        n = len(s)
        # Longest match ending at each position, from a left-to-right scan.
        ending = [0] * n
        state, cur = 0, 0
        for k, c in enumerate(s):
            while state and c not in self.next[state]:
                state = self.link[state]
                cur = self.length[state]
            if c in self.next[state]:
                state = self.next[state][c]
                cur += 1
            else:
                state, cur = 0, 0
            ending[k] = cur
        # Match starts are non-decreasing in k, so the furthest end reachable
        # from each i is found with one forward pointer.
        ms = [0] * n
        k = -1
        for i in range(n):
            while k + 1 < n and k + 1 - ending[k + 1] + 1 <= i:
                k += 1
            ms[i] = k - i + 1 if k >= i else 0
        return ms


@dataclass(frozen=True)
class CommonSubstringGraph:
    id: int
    n: int
    edges: tuple[Block, ...]
    starts_at: tuple[tuple[Block, ...], ...]
    ends_at: tuple[tuple[Block, ...], ...]
    max_len: tuple[int, ...]

    @classmethod
    def from_edges(cls, which: int, n: int, edges: list[Block]) -> "CommonSubstringGraph":
        edges = sorted(edges, key=lambda b: (b.i, b.j))
        starts: list[list[Block]] = [[] for _ in range(n)]
        ends: list[list[Block]] = [[] for _ in range(n)]
        reach = [0] * n
        for b in edges:
            starts[b.i].append(b)
            ends[b.j].append(b)
            reach[b.i] = max(reach[b.i], b.length)
        return cls(which, n, tuple(edges), tuple(map(tuple, starts)), tuple(map(tuple, ends)), tuple(reach))

    @classmethod
    def from_reach(cls, which: int, reach: list[int]) -> "CommonSubstringGraph":
        edges = [Block(which, i, i + k - 1) for i, r in enumerate(reach) for k in range(1, r + 1)]
        return cls.from_edges(which, len(reach), edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Block]:
        return iter(self.edges)

    @property
    def longest_edge(self) -> int:
        return max(self.max_len)


def build_graph(pair: RelatedPair, which: int) -> CommonSubstringGraph:
    text, other = pair.string(which), pair.string(1 - which)
    reach = SuffixAutomaton(other).matching_statistics(text)
    return CommonSubstringGraph.from_reach(which, reach)


def build_graph_naive(pair: RelatedPair, which: int) -> CommonSubstringGraph:
    """O(n^3) reference construction: test every slice with ``in``."""
    text, other = pair.string(which), pair.string(1 - which)
    n = len(text)
    edges = [Block(which, i, j) for i in range(n) for j in range(i, n) if text[i:j + 1] in other]
    return CommonSubstringGraph.from_edges(which, n, edges)


def build_graphs(pair: RelatedPair) -> tuple[CommonSubstringGraph, CommonSubstringGraph]:
    return build_graph(pair, X_ID), build_graph(pair, Y_ID)


def incident_blocks(g: CommonSubstringGraph, v: int, direction: Literal["in", "out"]) -> tuple[Block, ...]:
    """Edge blocks ending at ``v`` (``"in"``) or starting at ``v`` (``"out"``)."""
    if not 0 <= v < g.n:
        raise VertexOutOfRange(f"vertex {v} not in [0, {g.n - 1}]")
    if direction == "out":
        return g.starts_at[v]
    if direction == "in":
        return g.ends_at[v]
    raise ValueError(f"direction must be 'in' or 'out', got {direction!r}")


def dump_graph(g: CommonSubstringGraph, pair: RelatedPair, out: TextIO) -> None:
    """Write one ``id i j substring`` line per edge block."""
    for b in g.edges:
        out.write(f"{b.id} {b.i} {b.j} {substring_of(pair, b).decode('latin-1')}\n")
