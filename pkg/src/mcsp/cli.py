"""Command-line interface: ``mcsp <subcommand> ...``.

Exit codes: 0 success (a time limit is still success), 1 invalid input or
infeasible solution, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .bench import ALGORITHMS, BenchInstance, format_csv, format_text, run_benchmark, summarize
from .csg import build_graph, build_graphs, dump_graph
from .datagen import (
    DNA,
    PRESETS,
    format_pair,
    gen_random_pair,
    parse_solution_file,
    read_pair,
)
from .errors import McspError
from .greedy import greedy_partition
from .model import build_model, decode_solution, export_lp, export_mps, violated_constraints
from .oracle import DEFAULT_MAX_N, brute_force_mcsp
from .solver import solve_exact
from .strings import CommonPartition, RelatedPair, check_related


class UsageError(Exception):
    pass


def _load(args) -> RelatedPair:
    if args.strings:
        return check_related(*args.strings)
    if args.instance is None:
        raise UsageError("give an instance file or --strings X Y")
    return read_pair(sys.stdin if args.instance == "-" else args.instance)


def _out(args):
    if getattr(args, "out", None):
        return open(args.out, "w", encoding="ascii", newline="\n")
    return sys.stdout


def _show_partition(pair: RelatedPair, part: CommonPartition) -> list[str]:
    px, qy = part.pieces(pair)
    return [
        "X: " + "|".join(p.decode("latin-1") for p in px),
        "Y: " + "|".join(q.decode("latin-1") for q in qy),
    ]


def _emit(args, payload: dict, lines: list[str]) -> None:
    out = _out(args)
    try:
        if getattr(args, "json", False):
            out.write(json.dumps(payload, indent=2) + "\n")
        else:
            out.write("\n".join(lines) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()


def cmd_gen(args) -> int:
    pair = gen_random_pair(args.len, args.alphabet, args.seed)
    out = _out(args)
    out.write(format_pair(pair))
    if out is not sys.stdout:
        out.close()
    return 0


def cmd_solve(args) -> int:
    pair = _load(args)
    progress = sys.stderr if args.progress else None
    rep = solve_exact(pair, time_limit=args.time_limit, node_limit=args.node_limit,
                      progress=progress, progress_interval=args.progress_interval)
    px, qy = rep.partition.pieces(pair)
    payload = {
        "status": str(rep.status), "size": rep.incumbent_size, "bound": rep.best_bound,
        "gap_pct": rep.gap_pct, "nodes": rep.nodes, "wall_time": rep.wall_time,
        "x_blocks": [p.decode("latin-1") for p in px], "y_blocks": [q.decode("latin-1") for q in qy],
        "trace": rep.trace,
    }
    lines = [
        f"status: {rep.status}",
        f"size: {rep.incumbent_size}",
        f"bound: {rep.best_bound}",
        f"gap: {rep.gap_pct:.2f}%",
        f"nodes: {rep.nodes}",
        f"time: {rep.wall_time:.3f}s",
        *_show_partition(pair, rep.partition),
    ]
    _emit(args, payload, lines)
    return 0


def cmd_greedy(args) -> int:
    pair = _load(args)
    part = greedy_partition(pair)
    _emit(args, {"size": part.size}, [f"size: {part.size}", *_show_partition(pair, part)])
    return 0


def cmd_oracle(args) -> int:
    pair = _load(args)
    size, part = brute_force_mcsp(pair, args.max_n)
    _emit(args, {"size": size}, [f"size: {size}", *_show_partition(pair, part)])
    return 0


def cmd_export_lp(args) -> int:
    pair = _load(args)
    model = build_model(pair, *build_graphs(pair), dedupe_classes=args.dedupe_classes)
    out = _out(args)
    try:
        (export_mps if args.mps else export_lp)(model, out)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_graph(args) -> int:
    pair = _load(args)
    g = build_graph(pair, 0 if args.side == "x" else 1)
    out = _out(args)
    dump_graph(g, pair, out)
    if out is not sys.stdout:
        out.close()
    return 0


def cmd_check_sol(args) -> int:
    pair = _load(args)
    model = build_model(pair, *build_graphs(pair), dedupe_classes=args.dedupe_classes)
    assignment = parse_solution_file(args.solution, model)
    bad = violated_constraints(model, assignment)
    if bad:
        print(f"infeasible: {len(bad)} violated row(s): {', '.join(bad[:10])}", file=sys.stderr)
        return 1
    part = decode_solution(model, assignment)
    _emit(args, {"feasible": True, "size": part.size},
          ["feasible: yes", f"size: {part.size}", *_show_partition(pair, part)])
    return 0


def cmd_bench(args) -> int:
    instances: list[BenchInstance] = []
    time_limit = args.time_limit
    if args.preset:
        preset = PRESETS[args.preset]
        instances = [BenchInstance(s.id, s.build(), s.seed) for s in preset.instances]
        if time_limit is None:
            time_limit = preset.time_limit
    for path in args.instances:
        instances.append(BenchInstance(path, read_pair(path)))
    if not instances:
        raise UsageError("give --preset or instance files")
    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    unknown = sorted(set(algorithms) - set(ALGORITHMS))
    if unknown or not algorithms:
        raise UsageError(f"--algorithms must be a comma list drawn from {','.join(ALGORITHMS)}")
    rows = run_benchmark(instances, algorithms, time_limit, args.node_limit, args.jobs)
    out = _out(args)
    try:
        out.write(format_csv(rows) if args.format == "csv" else format_text(rows))
        if args.format == "text":
            s = summarize(rows)
            out.write(f"# instances={s['instances']} optimal={s['optimal']} "
                      f"avg_improvement_over_greedy={s['avg_improvement_pct']:.2f}%\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mcsp", description="Minimum common string partition tools")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_args(p):
        p.add_argument("instance", nargs="?", help="two-line instance file ('-' for stdin)")
        p.add_argument("--strings", nargs=2, metavar=("X", "Y"), help="give the pair inline")
        p.add_argument("--out", help="write output here instead of stdout")

    p = sub.add_parser("gen", help="generate a random related pair")
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--alphabet", default=DNA.decode())
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="exact branch-and-bound solve")
    instance_args(p)
    p.add_argument("--time-limit", type=float)
    p.add_argument("--node-limit", type=int)
    p.add_argument("--progress", action="store_true", help="stream t/primal/dual/gap lines to stderr")
    p.add_argument("--progress-interval", type=float, default=10.0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("greedy", help="greedy longest-common-substring partition")
    instance_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("oracle", help="brute-force optimum (tiny inputs only)")
    instance_args(p)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("export-lp", help="write the integer program (CPLEX LP, or MPS with --mps)")
    instance_args(p)
    p.add_argument("--mps", action="store_true")
    p.add_argument("--dedupe-classes", action="store_true", help="one class-count row per distinct substring")
    p.set_defaults(func=cmd_export_lp)

    p = sub.add_parser("graph", help="dump common substring graph edges")
    instance_args(p)
    p.add_argument("--side", choices=("x", "y"), default="x")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("check-sol", help="verify and decode an external solver's solution file")
    p.add_argument("instance", nargs="?")
    p.add_argument("solution", help="solution file: '<var> <value>' lines")
    p.add_argument("--strings", nargs=2, metavar=("X", "Y"))
    p.add_argument("--dedupe-classes", action="store_true")
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_sol)

    p = sub.add_parser("bench", help="compare greedy / ip / oracle on a preset or instance files")
    p.add_argument("instances", nargs="*")
    p.add_argument("--preset", choices=sorted(PRESETS))
    p.add_argument("--algorithms", default="greedy,ip,oracle")
    p.add_argument("--time-limit", type=float)
    p.add_argument("--node-limit", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except McspError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
