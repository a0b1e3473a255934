import pytest

from mcsp.errors import InstanceTooLarge
from mcsp.oracle import brute_force_mcsp
from mcsp.strings import check_related, validate_common_partition

from conftest import random_pairs


@pytest.mark.parametrize(
    "x, y, size",
    [
        ("ababcab", "abcabab", 2),  # ab|abcab vs abcab|ab
        ("abcdba", "abcdab", 3),
        ("ab", "ba", 2),
        ("abcabc", "abcabc", 1),
        ("abcd", "dcba", 4),
    ],
)
def test_known_optima(x, y, size):
    pair = check_related(x, y)
    got, witness = brute_force_mcsp(pair)
    assert got == size == witness.size
    assert validate_common_partition(pair, witness)


def test_cap():
    pair = check_related("a" * 15, "a" * 15)
    with pytest.raises(InstanceTooLarge):
        brute_force_mcsp(pair)
    assert brute_force_mcsp(pair, max_n=15)[0] == 1


def test_no_smaller_partition_exists():
    # exhaustive cross-check of the size-3 optimum: no 2-block cut of X works
    pair = check_related("abcdba", "abcdab")
    for cut in range(1, 6):
        pieces = sorted([pair.x[:cut], pair.x[cut:]])
        assert not any(sorted([pair.y[:c], pair.y[c:]]) == pieces for c in range(1, 6))


@pytest.mark.parametrize("pair", random_pairs(30, 500), ids=lambda p: f"{p.x.decode()}-{p.y.decode()}")
def test_swap_invariance(pair):
    assert brute_force_mcsp(pair)[0] == brute_force_mcsp(pair.swapped())[0]
