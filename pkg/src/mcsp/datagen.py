"""Random instance generation and instance/solution file IO.

Random pairs: X is drawn i.i.d. uniform over the alphabet from a seeded
``numpy.random.PCG64`` stream; Y is a Fisher-Yates shuffle of X drawn from
the same stream.

Instance files hold two ASCII lines, X then Y.  Solution files hold
``<varname> <value>`` lines as dumped by stand-alone MILP solvers; ``#``
comment lines and any trailing text after the value are ignored.
"""
from __future__ import annotations

import io
import os
from dataclasses import dataclass
from typing import Iterable, Optional, TextIO, Union

import numpy as np

from .errors import EmptyAlphabet, FormatError, NonBinaryValue, UnknownVariable, ZeroLength
from .model import Assignment, IpModel
from .strings import RelatedPair, StrLike, as_bytes, check_related

DNA = b"ACGT"
BINARY_TOL = 1e-6


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def fisher_yates(seq: bytes, rng: np.random.Generator) -> bytes:
    out = bytearray(seq)
    for i in range(len(out) - 1, 0, -1):
        j = int(rng.integers(0, i + 1))
        out[i], out[j] = out[j], out[i]
    return bytes(out)


def gen_random_pair(length: int, alphabet: StrLike = DNA, seed: int = 0) -> RelatedPair:
    if length < 1:
        raise ZeroLength("length must be at least 1")
    letters = sorted(set(as_bytes(alphabet)))
    if not letters:
        raise EmptyAlphabet("alphabet must contain at least one letter")
    rng = make_rng(seed)
    picks = rng.integers(0, len(letters), size=length)
    x = bytes(letters[k] for k in picks)
    return check_related(x, fisher_yates(x, rng))


# -- presets ----------------------------------------------------------------

@dataclass(frozen=True)
class InstanceSpec:
    id: str
    length: int
    alphabet: bytes
    seed: int

    def build(self) -> RelatedPair:
        return gen_random_pair(self.length, self.alphabet, self.seed)


@dataclass(frozen=True)
class Preset:
    name: str
    instances: tuple[InstanceSpec, ...]
    time_limit: float


def _group(name: str, length: int, time_limit: float, base_seed: int, count: int = 10) -> Preset:
    return Preset(
        name,
        tuple(InstanceSpec(f"{name}-{k + 1:02d}", length, DNA, base_seed + k) for k in range(count)),
        time_limit,
    )


PRESETS: dict[str, Preset] = {
    "tiny": Preset(
        "tiny",
        tuple(InstanceSpec(f"tiny-{k + 1:02d}", 4 + k % 9, b"abcd", 1000 + k) for k in range(20)),
        60.0,
    ),
    "group1-like": _group("group1-like", 200, 15 * 60.0, 200_000),
    "group2-like": _group("group2-like", 400, 30 * 60.0, 400_000),
    "group3-like": _group("group3-like", 600, 60 * 60.0, 600_000),
}


def time_limit_for_length(n: int) -> float:
    """Per-instance limit by length band: 15 min up to 200, 30 up to 400, else 60."""
    if n <= 200:
        return 15 * 60.0
    if n <= 400:
        return 30 * 60.0
    return 60 * 60.0


# -- instance files -----------------------------------------------------------

Source = Union[TextIO, str, os.PathLike]


def _read_text(source: Source) -> str:
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="ascii") as fh:
            return fh.read()
    return source.read()


def read_pair(source: Source) -> RelatedPair:
    try:
        text = _read_text(source)
    except UnicodeDecodeError as exc:
        raise FormatError(f"instance file is not ASCII: {exc}") from exc
    lines = [ln.rstrip("\r") for ln in text.split("\n")]
    while lines and lines[-1] == "":
        lines.pop()
    if len(lines) != 2 or not all(lines):
        raise FormatError(f"expected exactly two non-empty lines, found {len(lines)}")
    return check_related(lines[0], lines[1])


def format_pair(pair: RelatedPair) -> str:
    return f"{pair.x.decode('ascii')}\n{pair.y.decode('ascii')}\n"


def write_pair(pair: RelatedPair, sink: Union[TextIO, str, os.PathLike]) -> None:
    text = format_pair(pair)
    if isinstance(sink, (str, os.PathLike)):
        with open(sink, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        sink.write(text)


# -- solution files -----------------------------------------------------------

def _solution_lines(text: str) -> Iterable[tuple[int, str, str]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        # SCIP-style headers
        if parts[0] in ("solution", "objective", "=obj=") or line.lower().startswith("objective value"):
            continue
        if len(parts) < 2:
            raise FormatError(f"line {lineno}: expected '<name> <value>', got {raw!r}")
        yield lineno, parts[0], parts[1]


def parse_solution_file(source: Source, model: IpModel) -> Assignment:
    text = _read_text(source)
    values = {v.name: 0 for v in model.variables}
    for lineno, name, raw_value in _solution_lines(text):
        if name not in values:
            raise UnknownVariable(f"line {lineno}: unknown variable {name!r}")
        try:
            value = float(raw_value)
        except ValueError as exc:
            raise FormatError(f"line {lineno}: bad value {raw_value!r}") from exc
        if abs(value) <= BINARY_TOL:
            values[name] = 0
        elif abs(value - 1) <= BINARY_TOL:
            values[name] = 1
        else:
            raise NonBinaryValue(f"line {lineno}: {name} = {raw_value} is not binary")
    return Assignment(values)


def format_solution(model: IpModel, a: Assignment, objective: Optional[float] = None) -> str:
    out = io.StringIO()
    if objective is not None:
        out.write(f"# objective {objective:g}\n")
    for v in model.variables:
        if a.values.get(v.name):
            out.write(f"{v.name} 1\n")
    return out.getvalue()
