from pathlib import Path

import pytest

from mcsp.datagen import gen_random_pair
from mcsp.strings import check_related

DATA = Path(__file__).parent / "data"

# Lines recorded by test_acceptance.py, echoed in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


def random_pairs(count, seed0, lengths=range(4, 13), alphabet=b"abcd"):
    lengths = list(lengths)
    return [gen_random_pair(lengths[k % len(lengths)], alphabet, seed0 + k) for k in range(count)]


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def pair_csg():
    """Pair with a hand-checked X-side graph (golden file in data/)."""
    return check_related("abcdba", "abcdab")


@pytest.fixture
def pair_intro():
    return check_related("ababcab", "abcabab")


@pytest.fixture
def pair_blocks():
    return check_related("abcdab", "bcdaba")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
