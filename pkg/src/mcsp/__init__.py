"""Minimum common string partition: common substring graphs, an integer
program over them, an exact branch-and-bound solver and a greedy baseline."""

__version__ = "0.1.0"

from .csg import CommonSubstringGraph, build_graph, build_graphs, incident_blocks
from .datagen import gen_random_pair, parse_solution_file, read_pair, write_pair
from .greedy import greedy_partition
from .model import (
    Assignment,
    IpModel,
    build_model,
    decode_solution,
    export_lp,
    export_mps,
    partition_to_assignment,
    verify_assignment,
)
from .oracle import brute_force_mcsp
from .solver import SolveReport, Status, compute_gap, lower_bound, solve_exact
from .strings import (
    Block,
    CommonPartition,
    RelatedPair,
    check_related,
    match_list,
    substring_of,
    validate_common_partition,
)

__all__ = [
    "Assignment",
    "Block",
    "CommonPartition",
    "CommonSubstringGraph",
    "IpModel",
    "RelatedPair",
    "SolveReport",
    "Status",
    "brute_force_mcsp",
    "build_graph",
    "build_graphs",
    "build_model",
    "check_related",
    "compute_gap",
    "decode_solution",
    "export_lp",
    "export_mps",
    "gen_random_pair",
    "greedy_partition",
    "incident_blocks",
    "lower_bound",
    "match_list",
    "parse_solution_file",
    "partition_to_assignment",
    "read_pair",
    "solve_exact",
    "substring_of",
    "validate_common_partition",
    "verify_assignment",
    "write_pair",
]
