import os
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mcsp import kernels
from mcsp.kernels import native_impl, python_impl

IMPLS = [python_impl] + ([native_impl] if native_impl is not None else [])
ids = [m.IMPLEMENTATION for m in IMPLS]


def lcp(a, b):
    k = 0
    while k < len(a) and k < len(b) and a[k] == b[k]:
        k += 1
    return k


def min_tiling(s, allowed):
    """Fewest pieces cutting ``s`` into strings accepted by ``allowed`` (plain DP)."""
    best = [0] + [10**9] * len(s)
    for j in range(1, len(s) + 1):
        for i in range(j):
            if allowed(s[i:j]) and best[i] + 1 < best[j]:
                best[j] = best[i] + 1
    return best[len(s)]


def fragments(y, free):
    out, cur = [], b""
    for c, f in zip(y, free):
        if f:
            cur += bytes([c])
        elif cur:
            out.append(cur)
            cur = b""
    if cur:
        out.append(cur)
    return out


words = st.binary(min_size=1, max_size=25).map(lambda b: bytes(97 + c % 3 for c in b))


@st.composite
def bound_case(draw):
    x = draw(words)
    y = bytes(draw(st.permutations(list(x))))
    p = draw(st.integers(0, len(x)))
    # mark a random letter-balanced subset of y as used: the multiset of x[:p]
    used = list(x[:p])
    free = np.ones(len(y), dtype=np.uint8)
    order = draw(st.permutations(range(len(y))))
    for q in order:
        if y[q] in used:
            used.remove(y[q])
            free[q] = 0
    return x, y, p, free


@pytest.mark.parametrize("impl", IMPLS, ids=ids)
@settings(max_examples=80, deadline=None)
@given(words, words)
def test_extension_table(impl, x, y):
    ext = impl.extension_table(x, y)
    assert ext.shape == (len(x) + 1, len(y) + 1)
    for i in range(len(x) + 1):
        for q in range(len(y) + 1):
            assert ext[i, q] == lcp(x[i:], y[q:])


@pytest.mark.parametrize("impl", IMPLS, ids=ids)
@settings(max_examples=80, deadline=None)
@given(st.lists(st.booleans(), max_size=30))
def test_free_runs(impl, bits):
    free = np.array(bits, dtype=np.uint8)
    runs = impl.free_runs(free)
    for q in range(len(bits)):
        k = 0
        while q + k < len(bits) and bits[q + k]:
            k += 1
        assert runs[q] == k
    assert runs[len(bits)] == 0


@pytest.mark.parametrize("impl", IMPLS, ids=ids)
@settings(max_examples=120, deadline=None)
@given(bound_case())
def test_suffix_bound_is_exact_relaxation(impl, case):
    x, y, p, free = case
    ext = impl.extension_table(x, y)
    frags = fragments(y, free)
    rest = x[p:]
    by_x = min_tiling(rest, lambda s: any(s in f for f in frags)) if rest else 0
    by_y = sum(min_tiling(f, lambda s: s in rest) for f in frags)
    assert impl.suffix_bound(ext, p, free) == max(by_x, by_y)


@pytest.mark.parametrize("impl", IMPLS, ids=ids)
@settings(max_examples=120, deadline=None)
@given(words, words, st.data())
def test_longest_free_common(impl, x, y, data):
    fx = np.array(data.draw(st.lists(st.booleans(), min_size=len(x), max_size=len(x))), dtype=np.uint8)
    fy = np.array(data.draw(st.lists(st.booleans(), min_size=len(y), max_size=len(y))), dtype=np.uint8)
    ext = impl.extension_table(x, y)
    best = (0, -1, -1)
    for i in range(len(x)):
        for q in range(len(y)):
            k = 0
            while i + k < len(x) and q + k < len(y) and fx[i + k] and fy[q + k] and x[i + k] == y[q + k]:
                k += 1
            if k > best[0]:
                best = (k, i, q)
    assert tuple(impl.longest_free_common(ext, fx, fy)) == best


@pytest.mark.parametrize("impl", IMPLS, ids=ids)
def test_placement_limits(impl):
    x, y = b"abcab", b"cabab"
    ext = impl.extension_table(x, y)
    free = np.array([1, 1, 1, 0, 1], dtype=np.uint8)
    # x[0:] = "abcab"; y = c a b | b  (position 3 used)
    assert list(impl.placement_limits(ext, 0, free)) == [0, 2, 0, 0, 0]


@pytest.mark.skipif(native_impl is None, reason="compiled kernels not built")
@settings(max_examples=60, deadline=None)
@given(bound_case())
def test_native_matches_python(case):
    x, y, p, free = case
    e1, e2 = python_impl.extension_table(x, y), native_impl.extension_table(x, y)
    assert np.array_equal(e1, e2)
    assert python_impl.suffix_bound(e1, p, free) == native_impl.suffix_bound(e2, p, free)
    if p < len(x):
        assert np.array_equal(python_impl.placement_limits(e1, p, free), native_impl.placement_limits(e2, p, free))


def test_dispatch_reports_implementation():
    assert kernels.IMPLEMENTATION in ("python", "cython")


def test_env_forces_fallback():
    code = "from mcsp import kernels; print(kernels.IMPLEMENTATION)"
    env = dict(os.environ, MCSP_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_kernel_benchmark_smoke():
    script = Path(__file__).parent.parent / "benchmarks" / "bench_kernels.py"
    if native_impl is None or not script.exists():
        pytest.skip("needs the compiled kernels and the benchmark script")
    out = subprocess.run([sys.executable, str(script), "--lengths", "20", "--repeat", "1", "--solve-nodes", "20"],
                         capture_output=True, text=True, check=True)
    assert "extension_table" in out.stdout and out.stdout.count("x\n") == 6
