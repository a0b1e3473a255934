"""Exact branch-and-bound for MCSP with primal/dual reporting.

The search walks X left to right.  At the leftmost uncovered position ``p``
it tries every piece ``x[p:p+l]`` (longest first) together with every free
place in Y where that piece fits (leftmost first).  Fixing the Y placement
keeps every node feasible: the unmatched letters of X and Y always have
equal counts, so any node can be completed with single letters.

Pruning:

* bound: blocks so far + :func:`mcsp.kernels.suffix_bound` >= incumbent;
* dominance: a state (``p``, set of used Y positions) reached again with no
  fewer blocks is skipped.  This also removes the symmetric duplicates
  that come from swapping Y placements of equal pieces.

Each node also runs the greedy on its residual strings as a primal
heuristic.  The incumbent starts at the full greedy solution and only ever
improves.
"""
from __future__ import annotations

import enum
import math
import sys
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, TextIO, Union

import numpy as np

from . import kernels
from .errors import BothZero
from .greedy import greedy_pieces, pieces_to_partition
from .strings import CommonPartition, RelatedPair

MEMO_CAP = 2_000_000


class Status(str, enum.Enum):
    OPTIMAL = "Optimal"
    TIME_LIMIT = "TimeLimit"
    INFEASIBLE = "Infeasible"

    def __str__(self) -> str:
        return self.value


@dataclass
class SolveReport:
    incumbent_size: int
    best_bound: int
    gap_pct: float
    status: Status
    nodes: int
    wall_time: float
    partition: Optional[CommonPartition]
    trace: list[tuple[float, int]] = field(default_factory=list)

    @property
    def primal(self) -> int:
        return self.incumbent_size

    @property
    def dual(self) -> int:
        return self.best_bound


def compute_gap(primal: float, dual: float) -> float:
    """Relative primal/dual gap in percent: 100 * |primal - dual| / min(|primal|, |dual|)."""
    if primal == 0 and dual == 0:
        raise BothZero("gap undefined when primal and dual are both zero")
    if primal == dual:
        return 0.0
    denom = min(abs(primal), abs(dual))
    if denom == 0:
        return math.inf
    return 100.0 * abs(primal - dual) / denom


def lower_bound(pair: RelatedPair, ext: np.ndarray | None = None) -> int:
    """Root lower bound on the MCSP optimum.

    At least ``ceil(n / longest common substring)``; usually tighter through
    the piece-counting relaxation in :func:`mcsp.kernels.suffix_bound`.
    """
    if ext is None:
        ext = kernels.extension_table(pair.x, pair.y)
    n = pair.n
    longest = int(ext[:n, :n].max())
    trivial = -(-n // longest)
    return max(trivial, int(kernels.suffix_bound(ext, 0, np.ones(n, dtype=np.uint8))))


class _Stop(Exception):
    pass


ProgressSink = Union[TextIO, Callable[[str], None], None]


class BranchAndBound:
    """One solve of one instance; use :func:`solve_exact` for the public entry point."""

    def __init__(self, pair: RelatedPair, time_limit: float | None = None,
                 node_limit: int | None = None, progress: ProgressSink = None,
                 progress_interval: float = 10.0, primal_heuristic: bool = True,
                 guided_depth: int = 0) -> None:
        self.pair = pair
        self.guided_depth = guided_depth
        self.n = pair.n
        self.time_limit = time_limit
        self.node_limit = node_limit
        self.progress = progress
        self.progress_interval = progress_interval
        self.primal_heuristic = primal_heuristic

        self.ext = kernels.extension_table(pair.x, pair.y)
        self.free_y = np.ones(self.n, dtype=np.uint8)
        self.mask = 0
        self.stack: list[tuple[int, int, int]] = []
        self.memo: dict[tuple[int, int], int] = {}
        self.nodes = 0
        self.stopped = False

        self.incumbent_pieces = greedy_pieces(self.ext, np.ones(self.n, np.uint8), np.ones(self.n, np.uint8))
        self.incumbent = len(self.incumbent_pieces)
        self.root_bound = lower_bound(pair, self.ext)
        self.trace: list[tuple[float, int]] = []

    # -- bookkeeping ------------------------------------------------------

    def _elapsed(self) -> float:
        return time.perf_counter() - self.t0

    def _emit(self, dual: int) -> None:
        if self.progress is None:
            return
        line = (f"t={self._elapsed():.2f} primal={self.incumbent} dual={dual} "
                f"gap={compute_gap(self.incumbent, dual):.2f}%")
        if callable(self.progress):
            self.progress(line)
        else:
            self.progress.write(line + "\n")

    def _install(self, pieces: list[tuple[int, int, int]]) -> None:
        if len(pieces) < self.incumbent:
            self.incumbent = len(pieces)
            self.incumbent_pieces = list(pieces)
            self.trace.append((self._elapsed(), self.incumbent))
            self._emit(self.root_bound)

    def _check_limits(self) -> None:
        if self.node_limit is not None and self.nodes >= self.node_limit:
            raise _Stop
        now = self._elapsed()
        if self.time_limit is not None and now >= self.time_limit:
            raise _Stop
        if self.progress is not None and now >= self._next_report:
            self._next_report = now + self.progress_interval
            self._emit(self.root_bound)

    # -- search -----------------------------------------------------------

    def _residual_greedy(self, p: int) -> None:
        free_x = np.zeros(self.n, dtype=np.uint8)
        free_x[p:] = 1
        rest = greedy_pieces(self.ext, free_x, self.free_y.copy())
        if len(self.stack) + len(rest) < self.incumbent:
            self._install(self.stack + rest)

    def _children(self, p: int) -> list[tuple[int, int]]:
        lims = kernels.placement_limits(self.ext, p, self.free_y)
        top = int(lims.max())
        out = []
        for length in range(top, 0, -1):
            for q in np.flatnonzero(lims >= length):
                out.append((length, int(q)))
        return out

    def _score_children(self, p: int, children: list[tuple[int, int]]) -> list[tuple[int, int]]:
        """Order children by the size of their greedy completion (stable)."""
        scores = []
        free_x = np.zeros(self.n, dtype=np.uint8)
        for length, q in children:
            free_x[p + length:] = 1
            free_y = self.free_y.copy()
            free_y[q:q + length] = 0
            rest = greedy_pieces(self.ext, free_x, free_y)
            self.stack.append((p, q, length))
            self._install(self.stack + rest)
            self.stack.pop()
            scores.append(len(rest))
            free_x[:] = 0
        order = sorted(range(len(children)), key=scores.__getitem__)
        return [children[k] for k in order]

    def _child_bound(self, p: int, length: int, q: int) -> int:
        self.free_y[q:q + length] = 0
        lb = len(self.stack) + 1 + int(kernels.suffix_bound(self.ext, p + length, self.free_y))
        self.free_y[q:q + length] = 1
        return lb

    def _visit(self, p: int) -> float:
        """Explore the node at X position ``p``; return the least bound left open."""
        used = len(self.stack)
        if p == self.n:
            self._install(self.stack)
            return math.inf
        key = (p, self.mask)
        seen = self.memo.get(key)
        if seen is not None and seen <= used:
            return math.inf
        if seen is not None or len(self.memo) < MEMO_CAP:
            self.memo[key] = used

        self.nodes += 1
        if self.primal_heuristic:
            self._residual_greedy(p)

        children = self._children(p)
        if used < self.guided_depth:
            children = self._score_children(p, children)
        open_bound = math.inf
        for k, (length, q) in enumerate(children):
            if not self.stopped:
                try:
                    self._check_limits()
                except _Stop:
                    self.stopped = True
            if self.stopped:
                rest = (self._child_bound(p, l2, q2) for l2, q2 in children[k:])
                open_bound = min([open_bound, *(lb for lb in rest if lb < self.incumbent)])
                break
            self.free_y[q:q + length] = 0
            bits = ((1 << length) - 1) << q
            self.mask ^= bits
            self.stack.append((p, q, length))
            lb = used + 1 + int(kernels.suffix_bound(self.ext, p + length, self.free_y))
            if lb < self.incumbent:
                open_bound = min(open_bound, self._visit(p + length))
            self.stack.pop()
            self.mask ^= bits
            self.free_y[q:q + length] = 1
        return open_bound

    def run(self) -> SolveReport:
        self.t0 = time.perf_counter()
        self._next_report = self.progress_interval
        self.trace.append((0.0, self.incumbent))
        self._emit(self.root_bound)
        open_bound = math.inf
        if self.root_bound < self.incumbent:
            limit = sys.getrecursionlimit()
            if limit < 4 * self.n + 100:
                sys.setrecursionlimit(4 * self.n + 100)
            try:
                open_bound = self._visit(0)
            finally:
                sys.setrecursionlimit(limit)

        # Leaves beat the incumbent only if their bound was below it, so the
        # open bound is only meaningful while it is smaller than the incumbent.
        if not self.stopped or open_bound >= self.incumbent:
            status, bound = Status.OPTIMAL, self.incumbent
        else:
            status = Status.TIME_LIMIT
            bound = int(max(self.root_bound, min(self.incumbent, open_bound)))
        self._emit(bound)
        return SolveReport(
            incumbent_size=self.incumbent,
            best_bound=bound,
            gap_pct=compute_gap(self.incumbent, bound),
            status=status,
            nodes=self.nodes,
            wall_time=self._elapsed(),
            partition=pieces_to_partition(self.incumbent_pieces),
            trace=self.trace,
        )


def solve_exact(pair: RelatedPair, time_limit: float | None = None, node_limit: int | None = None,
                progress: ProgressSink = None, progress_interval: float = 10.0,
                primal_heuristic: bool = True) -> SolveReport:
    """Solve MCSP to proven optimality, or report the best incumbent and bound at a limit.

    >>> from mcsp.strings import check_related
    >>> r = solve_exact(check_related("abcdba", "abcdab"))
    >>> (r.incumbent_size, str(r.status))
    (3, 'Optimal')
    """
    return BranchAndBound(pair, time_limit, node_limit, progress, progress_interval,
                          primal_heuristic).run()
