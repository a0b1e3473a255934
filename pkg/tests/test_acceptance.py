"""Acceptance gate: one PASS/FAIL line per criterion.

Lines are printed and also collected into the terminal summary by
``conftest.py``.  Criterion 7 runs ten 200 bp solves at the full 15 minute
limit, so a complete run takes about two and a half hours on one core; set
``MCSP_ACCEPT_LIMIT`` (seconds) to shorten it during development.  The
reported line always states the limit that was used.
"""
import io
import json
import os
import time
from collections import Counter

import pytest

from mcsp import cli
from mcsp.csg import build_graph, build_graphs, dump_graph
from mcsp.datagen import PRESETS, fisher_yates, make_rng
from mcsp.greedy import greedy_partition
from mcsp.model import build_model, decode_solution, format_lp, parse_lp, partition_to_assignment, verify_assignment
from mcsp.oracle import brute_force_mcsp
from mcsp.solver import Status, compute_gap, solve_exact
from mcsp.strings import Block, check_related, validate_common_partition

from conftest import ACCEPTANCE_LINES, random_pairs

# Pinned tolerances and seeds.
GAP_TOL = 0.001              # percent, criterion 5
ORACLE_SUITE_SEED = 10_000   # criteria 2-4: 200 pairs, lengths 4-12 cycling, alphabet abcd
ORACLE_SUITE_BUDGET = 600.0  # seconds for the 200 exact solves
SYMMETRY_SEED = 20_000       # criterion 9: 50 pairs
TWO_MCSP_SEED = 30_000       # criterion 4, extra 2-MCSP sample
GREEDY_RATIO = 3
DESK_LIMIT = float(os.environ.get("MCSP_ACCEPT_LIMIT", 15 * 60))


def record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d} {title}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def oracle_suite():
    pairs = random_pairs(200, ORACLE_SUITE_SEED)
    t0 = time.perf_counter()
    reports = [solve_exact(p) for p in pairs]
    solve_time = time.perf_counter() - t0
    optima = [brute_force_mcsp(p)[0] for p in pairs]
    return pairs, reports, optima, solve_time


def test_c01_graph_fidelity(data_dir):
    pair = check_related("abcdba", "abcdab")
    t0 = time.perf_counter()
    g = build_graph(pair, 0)
    elapsed = time.perf_counter() - t0
    listed = {Block(0, i, j) for i, j in [(0, 0), (0, 1), (1, 1), (0, 2), (0, 3), (1, 2),
                                          (1, 3), (2, 2), (2, 3), (3, 3), (4, 4), (5, 5)]}
    buf = io.StringIO()
    dump_graph(g, pair, buf)
    golden = (data_dir / "csg_abcdba_abcdab_x.txt").read_bytes()
    ok = set(g.edges) == listed and len(g) == 12 and buf.getvalue().encode() == golden
    record(1, "graph fidelity", ok, f"{len(g)} edges, golden byte-exact={buf.getvalue().encode() == golden}, "
           f"{elapsed * 1000:.2f} ms")


def test_c02_oracle_equivalence(oracle_suite):
    pairs, reports, optima, solve_time = oracle_suite
    agree = sum(r.status is Status.OPTIMAL and r.incumbent_size == o for r, o in zip(reports, optima))
    ok = agree == len(pairs) == 200 and solve_time < ORACLE_SUITE_BUDGET
    record(2, "oracle equivalence", ok, f"{agree}/{len(pairs)} optimal and equal to oracle, "
           f"solver time {solve_time:.2f}s (budget {ORACLE_SUITE_BUDGET:.0f}s)")


def test_c03_formulation_soundness(oracle_suite):
    pairs, reports, _, _ = oracle_suite
    good = 0
    for pair, rep in zip(pairs, reports):
        model = build_model(pair, *build_graphs(pair))
        a = partition_to_assignment(model, rep.partition)
        if verify_assignment(model, a) and validate_common_partition(pair, decode_solution(model, a)):
            good += 1
    record(3, "formulation soundness", good == 200, f"{good}/200 assignments feasible and decoded to valid partitions")


def two_mcsp_pairs(count, seed0):
    """Pairs over six letters, each letter exactly twice per string."""
    pairs = []
    for k in range(count):
        x = fisher_yates(b"aabbccddeeff", make_rng(seed0 + 2 * k))
        pairs.append(check_related(x, fisher_yates(x, make_rng(seed0 + 2 * k + 1))))
    return pairs


def test_c04_greedy_dominance(oracle_suite):
    pairs, reports, optima, _ = oracle_suite
    greedy = [greedy_partition(p).size for p in pairs]
    dominated = sum(g >= r.incumbent_size for g, r in zip(greedy, reports))
    low = [k for k, p in enumerate(pairs) if max(Counter(p.x).values()) <= 2]
    within = sum(greedy[k] <= GREEDY_RATIO * optima[k] for k in low)
    # The suite draws few 2-MCSP pairs, so a dedicated sample backs up the ratio check.
    extra = two_mcsp_pairs(100, TWO_MCSP_SEED)
    extra_ok = sum(greedy_partition(p).size <= GREEDY_RATIO * brute_force_mcsp(p)[0] for p in extra)
    ok = dominated == 200 and within == len(low) and extra_ok == len(extra)
    record(4, "greedy dominance", ok, f"greedy >= ip on {dominated}/200; greedy <= {GREEDY_RATIO}*opt on "
           f"{within}/{len(low)} suite pairs with letter multiplicity <= 2 "
           f"and {extra_ok}/{len(extra)} extra 2-MCSP pairs")


def test_c05_gap_semantics(oracle_suite):
    _, reports, _, _ = oracle_suite
    zero = compute_gap(41, 41)
    formula = compute_gap(100, 95)
    optimal_zero = all(r.gap_pct == 0 for r in reports if r.status is Status.OPTIMAL)
    ok = zero == 0 and abs(formula - 5.263) <= GAP_TOL and optimal_zero
    record(5, "gap semantics", ok, f"gap(41,41)={zero}, gap(100,95)={formula:.4f}% (tol {GAP_TOL}), "
           f"Optimal runs all at gap 0: {optimal_zero}")


def test_c06_model_counts():
    pair = check_related("abcdba", "abcdab")
    g1, g2 = build_graphs(pair)
    model = build_model(pair, g1, g2)
    lp = parse_lp(format_lp(model))
    ok = (len(g1), len(g2), model.num_variables, model.num_constraints) == (12, 13, 25, 52) \
        and (len(lp.binaries), len(lp.constraints)) == (25, 52)
    record(6, "model counts", ok, f"|E1|={len(g1)} |E2|={len(g2)} vars={model.num_variables} "
           f"rows={model.num_constraints}; LP re-parse vars={len(lp.binaries)} rows={len(lp.constraints)}")


@pytest.mark.slow
def test_c07_desk_scale():
    preset = PRESETS["group1-like"]
    results = []
    for spec in preset.instances:
        pair = spec.build()
        greedy = greedy_partition(pair).size
        rep = solve_exact(pair, time_limit=DESK_LIMIT)
        sizes = [s for _, s in rep.trace]
        monotone = all(a >= b for a, b in zip(sizes, sizes[1:]))
        valid = validate_common_partition(pair, rep.partition)
        results.append((spec, greedy, rep, monotone and valid and rep.incumbent_size <= greedy))
        print(f"  {spec.id} seed={spec.seed} greedy={greedy} ip={rep.incumbent_size} dual={rep.best_bound} "
              f"gap={rep.gap_pct:.2f}% status={rep.status} time={rep.wall_time:.0f}s")
    good = sum(r[3] for r in results)
    avg_imp = sum(100 * (g - r.incumbent_size) / g for _, g, r, _ in results) / len(results)
    record(7, "desk-scale 200 bp", good == len(results) == 10,
           f"incumbent <= greedy with monotone trace on {good}/{len(results)} at {DESK_LIMIT:.0f}s limit, "
           f"average improvement over greedy {avg_imp:.2f}%")


def test_c08_worked_example():
    pair = check_related("ababcab", "abcabab")
    rep = solve_exact(pair)
    oracle = brute_force_mcsp(pair)[0]
    ok = rep.incumbent_size == 2 == oracle and validate_common_partition(pair, rep.partition)
    px, qy = rep.partition.pieces(pair)
    record(8, "worked example", ok, f"size {rep.incumbent_size} (oracle {oracle}), "
           f"witness {b'|'.join(px).decode()} / {b'|'.join(qy).decode()}")


def test_c09_symmetry():
    pairs = random_pairs(50, SYMMETRY_SEED)
    same = 0
    for p in pairs:
        a, b = brute_force_mcsp(p)[0], brute_force_mcsp(p.swapped())[0]
        c, d = solve_exact(p).incumbent_size, solve_exact(p.swapped()).incumbent_size
        same += a == b == c == d
    record(9, "symmetry", same == 50, f"oracle and solver agree under swap on {same}/50")


def test_c10_external_solver_loop(data_dir, capsys):
    sizes = []
    codes = []
    for pair_file, sol_file in [("pair_a_a.txt", "sol_a_a.txt"), ("pair_abcdba_abcdab.txt", "sol_abcdba_abcdab.txt")]:
        codes.append(cli.main(["check-sol", str(data_dir / pair_file), str(data_dir / sol_file), "--json"]))
        out = capsys.readouterr().out
        sizes.append(json.loads(out)["size"] if codes[-1] == 0 else None)
    record(10, "external-solver loop", codes == [0, 0] and sizes == [1, 3],
           f"check-sol exit codes {codes}, decoded sizes {sizes}")
