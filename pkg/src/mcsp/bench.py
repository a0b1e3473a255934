"""Benchmark harness: greedy vs exact solver (vs oracle on tiny inputs)."""
from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from typing import Iterable, Optional, Sequence

from .errors import McspError, ZeroBaseline
from .greedy import greedy_partition
from .oracle import DEFAULT_MAX_N, brute_force_mcsp
from .solver import compute_gap, solve_exact
from .strings import RelatedPair

ALGORITHMS = ("greedy", "ip", "oracle")
MISSING = "-"


def improvement_pct(baseline: float, candidate: float) -> float:
    """Percent by which ``candidate`` is smaller than ``baseline`` (negative if larger)."""
    if baseline == 0:
        raise ZeroBaseline("baseline size must be positive")
    return 100.0 * (baseline - candidate) / baseline


@dataclass(frozen=True)
class BenchInstance:
    id: str
    pair: RelatedPair
    seed: Optional[int] = None


@dataclass
class BenchRow:
    instance: str
    n: int
    seed: Optional[int] = None
    greedy: Optional[int] = None
    ip: Optional[int] = None
    status: Optional[str] = None
    dual: Optional[int] = None
    gap_pct: Optional[float] = None
    oracle: Optional[int] = None
    nodes: Optional[int] = None
    greedy_time: Optional[float] = None
    ip_time: Optional[float] = None
    oracle_time: Optional[float] = None
    improvement_pct: Optional[float] = None
    error: Optional[str] = None


COLUMNS = [f.name for f in fields(BenchRow)]
_FLOAT_FORMATS = {
    "gap_pct": "{:.2f}",
    "improvement_pct": "{:.2f}",
    "greedy_time": "{:.3f}",
    "ip_time": "{:.3f}",
    "oracle_time": "{:.3f}",
}


def run_instance(inst: BenchInstance, algorithms: Sequence[str], time_limit: float | None,
                 node_limit: int | None = None, oracle_cap: int = DEFAULT_MAX_N) -> BenchRow:
    row = BenchRow(inst.id, inst.pair.n, inst.seed)
    try:
        if "greedy" in algorithms:
            t = time.perf_counter()
            row.greedy = greedy_partition(inst.pair).size
            row.greedy_time = time.perf_counter() - t
        if "ip" in algorithms:
            rep = solve_exact(inst.pair, time_limit=time_limit, node_limit=node_limit)
            row.ip, row.dual, row.status = rep.incumbent_size, rep.best_bound, str(rep.status)
            row.gap_pct = compute_gap(rep.incumbent_size, rep.best_bound)
            row.nodes, row.ip_time = rep.nodes, rep.wall_time
        if "oracle" in algorithms and inst.pair.n <= oracle_cap:
            t = time.perf_counter()
            row.oracle = brute_force_mcsp(inst.pair, oracle_cap)[0]
            row.oracle_time = time.perf_counter() - t
        if row.greedy is not None and row.ip is not None:
            row.improvement_pct = improvement_pct(row.greedy, row.ip)
    except McspError as exc:
        row.error = f"{type(exc).__name__}: {exc}"
    return row


def _run_star(args) -> BenchRow:
    return run_instance(*args)


def run_benchmark(instances: Iterable[BenchInstance], algorithms: Sequence[str] = ALGORITHMS,
                  time_limit: float | None = None, node_limit: int | None = None,
                  jobs: int = 1) -> list[BenchRow]:
    unknown = set(algorithms) - set(ALGORITHMS)
    if unknown:
        raise ValueError(f"unknown algorithm(s): {sorted(unknown)}")
    work = [(inst, tuple(algorithms), time_limit, node_limit) for inst in instances]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run_star, work))
    else:
        rows = [_run_star(w) for w in work]
    return sorted(rows, key=lambda r: r.instance)


def row_fields(row: BenchRow) -> list[str]:
    out = []
    for name in COLUMNS:
        value = getattr(row, name)
        if value is None:
            out.append(MISSING)
        elif name in _FLOAT_FORMATS:
            out.append(_FLOAT_FORMATS[name].format(value))
        else:
            out.append(str(value))
    return out


def format_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow(row_fields(row))
    return buf.getvalue()


def format_text(rows: Sequence[BenchRow]) -> str:
    table = [COLUMNS] + [row_fields(r) for r in rows]
    widths = [max(len(line[k]) for line in table) for k in range(len(COLUMNS))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(line, widths)).rstrip() for line in table]
    return "\n".join(lines) + "\n"


def summarize(rows: Sequence[BenchRow]) -> dict[str, float]:
    """Average improvement of the exact solver over greedy, in the style of a bar chart summary."""
    imps = [r.improvement_pct for r in rows if r.improvement_pct is not None]
    return {
        "instances": len(rows),
        "avg_improvement_pct": sum(imps) / len(imps) if imps else 0.0,
        "optimal": sum(r.status == "Optimal" for r in rows),
    }
