"""The MCSP integer program over the two common substring graphs.

Binary variable ``x_<i>_<j>`` selects edge block ``[0, i, j]`` of X and
``y_<i>_<j>`` selects ``[1, i, j]`` of Y.  Rows, in emission order:

``eqsize``
    both factorizations have the same number of blocks.
``src_x`` / ``flow_x_<v>`` / ``snk_x`` (and the ``_y`` twins)
    one unit of flow from vertex 0 to vertex n-1, so the chosen blocks tile
    the string.  Conservation runs over v in [0, n-2]; the sink row closes
    the path at n-1.
``mx_<i>_<j>`` / ``my_<i>_<j>``
    a chosen block needs at least one chosen partner with the same text on
    the other side.
``cls_<k>``
    per substring class, as many X blocks as Y blocks are chosen.  Emitted
    once per X edge block by default; ``dedupe_classes=True`` emits one row
    per distinct text instead.
"""
from __future__ import annotations

import io
import os
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, TextIO, Union

from .csg import CommonSubstringGraph, build_graph
from .errors import (
    GraphPairMismatch,
    InfeasibleAssignment,
    MissingVariable,
    SinkWriteFailure,
    FormatError,
)
from .strings import Block, CommonPartition, RelatedPair, X_ID, Y_ID, substring_of

LE = "<="
EQ = "="


@dataclass(frozen=True)
class Variable:
    side: str  # "x" or "y"
    block: Block

    @property
    def name(self) -> str:
        return f"{self.side}_{self.block.i}_{self.block.j}"


@dataclass(frozen=True)
class Constraint:
    name: str
    terms: tuple[tuple[int, int], ...]  # (variable index, coefficient)
    sense: str
    rhs: int

    def activity(self, values: list[int]) -> int:
        return sum(c * values[k] for k, c in self.terms)

    def satisfied(self, values: list[int]) -> bool:
        lhs = self.activity(values)
        return lhs <= self.rhs if self.sense == LE else lhs == self.rhs


@dataclass(frozen=True)
class IpModel:
    pair: RelatedPair
    g1: CommonSubstringGraph
    g2: CommonSubstringGraph
    variables: tuple[Variable, ...]
    constraints: tuple[Constraint, ...]
    objective: tuple[float, ...]
    class_index: Mapping[bytes, tuple[tuple[Block, ...], tuple[Block, ...]]]
    index: Mapping[str, int] = field(repr=False)

    @property
    def num_variables(self) -> int:
        return len(self.variables)

    @property
    def num_constraints(self) -> int:
        return len(self.constraints)

    def var_index(self, block: Block) -> int:
        return self.index[Variable("x" if block.id == X_ID else "y", block).name]


@dataclass
class Assignment:
    values: dict[str, int]

    def __getitem__(self, name: str) -> int:
        return self.values[name]


def _combine(pairs: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    acc: dict[int, int] = {}
    for k, c in pairs:
        acc[k] = acc.get(k, 0) + c
    return tuple((k, c) for k, c in acc.items() if c)


def build_model(pair: RelatedPair, g1: CommonSubstringGraph, g2: CommonSubstringGraph,
                dedupe_classes: bool = False) -> IpModel:
    if g1.id != X_ID or g2.id != Y_ID or g1.n != pair.n or g2.n != pair.n:
        raise GraphPairMismatch("graphs must be the X-side and Y-side graphs of this pair")
    if g1.edges != build_graph(pair, X_ID).edges or g2.edges != build_graph(pair, Y_ID).edges:
        raise GraphPairMismatch("graph edge sets do not belong to this pair")

    n = pair.n
    variables = tuple(Variable("x", b) for b in g1.edges) + tuple(Variable("y", b) for b in g2.edges)
    index = {v.name: k for k, v in enumerate(variables)}
    xs = {b: k for k, b in enumerate(g1.edges)}
    ys = {b: len(g1.edges) + k for k, b in enumerate(g2.edges)}

    class_index: dict[bytes, tuple[list[Block], list[Block]]] = {}
    for b in g1.edges:
        class_index.setdefault(substring_of(pair, b), ([], []))[0].append(b)
    for b in g2.edges:
        class_index.setdefault(substring_of(pair, b), ([], []))[1].append(b)

    rows: list[Constraint] = []
    rows.append(Constraint("eqsize", _combine([(k, 1) for k in xs.values()] + [(k, -1) for k in ys.values()]), EQ, 0))
    for side, g, col in (("x", g1, xs), ("y", g2, ys)):
        rows.append(Constraint(f"src_{side}", _combine((col[b], 1) for b in g.starts_at[0]), EQ, 1))
        for v in range(n - 1):
            terms = [(col[b], 1) for b in g.ends_at[v]] + [(col[b], -1) for b in g.starts_at[v + 1]]
            rows.append(Constraint(f"flow_{side}_{v}", _combine(terms), EQ, 0))
        rows.append(Constraint(f"snk_{side}", _combine((col[b], 1) for b in g.ends_at[n - 1]), EQ, 1))

    for b in g1.edges:
        partners = class_index[substring_of(pair, b)][1]
        rows.append(Constraint(f"mx_{b.i}_{b.j}", _combine([(xs[b], 1)] + [(ys[c], -1) for c in partners]), LE, 0))
    for b in g2.edges:
        partners = class_index[substring_of(pair, b)][0]
        rows.append(Constraint(f"my_{b.i}_{b.j}", _combine([(ys[b], 1)] + [(xs[c], -1) for c in partners]), LE, 0))

    seen: set[bytes] = set()
    k = 0
    for b in g1.edges:
        text = substring_of(pair, b)
        if dedupe_classes and text in seen:
            continue
        seen.add(text)
        bx, by = class_index[text]
        rows.append(Constraint(f"cls_{k}", _combine([(xs[c], 1) for c in bx] + [(ys[c], -1) for c in by]), EQ, 0))
        k += 1

    return IpModel(
        pair=pair,
        g1=g1,
        g2=g2,
        variables=variables,
        constraints=tuple(rows),
        objective=tuple(0.5 for _ in variables),
        class_index={t: (tuple(a), tuple(b)) for t, (a, b) in class_index.items()},
        index=index,
    )


def expected_constraint_count(n: int, e1: int, e2: int, classes: int | None = None) -> int:
    """Closed-form row count; pass ``classes`` for the deduplicated variant."""
    return 1 + 2 + 2 + 2 * (n - 1) + e1 + e2 + (e1 if classes is None else classes)


def _values(model: IpModel, a: Assignment) -> list[int]:
    missing = [v.name for v in model.variables if v.name not in a.values]
    if missing:
        raise MissingVariable(f"assignment lacks {len(missing)} variable(s), e.g. {missing[0]}")
    return [int(a.values[v.name]) for v in model.variables]


def violated_constraints(model: IpModel, a: Assignment) -> list[str]:
    values = _values(model, a)
    bad = [c.name for c in model.constraints if not c.satisfied(values)]
    bad.extend(v.name for v, val in zip(model.variables, values) if val not in (0, 1))
    return bad


def verify_assignment(model: IpModel, a: Assignment) -> bool:
    return not violated_constraints(model, a)


def objective_value(model: IpModel, a: Assignment) -> float:
    values = _values(model, a)
    return sum(c * v for c, v in zip(model.objective, values))


def decode_solution(model: IpModel, a: Assignment) -> CommonPartition:
    bad = violated_constraints(model, a)
    if bad:
        raise InfeasibleAssignment(f"violated rows: {', '.join(bad[:5])}")
    chosen = [v.block for v in model.variables if a.values[v.name]]
    p = sorted((b for b in chosen if b.id == X_ID), key=lambda b: b.i)
    q = sorted((b for b in chosen if b.id == Y_ID), key=lambda b: b.i)
    return CommonPartition(p, q)


def partition_to_assignment(model: IpModel, part: CommonPartition) -> Assignment:
    values = {v.name: 0 for v in model.variables}
    for b in part.p_blocks + part.q_blocks:
        values[model.variables[model.var_index(b)].name] = 1
    return Assignment(values)


# -- export ---------------------------------------------------------------

def _expr(terms: Iterable[tuple[str, float]]) -> str:
    parts = []
    for name, c in terms:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        coef = "" if mag == 1 else f"{mag:g} "
        parts.append(f"{sign} {coef}{name}")
    if not parts:
        return "0"
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else s


def _write(destination: Union[TextIO, str, os.PathLike], text: str) -> None:
    try:
        if isinstance(destination, (str, os.PathLike)):
            with open(destination, "w", encoding="ascii", newline="\n") as fh:
                fh.write(text)
        else:
            destination.write(text)
    except (OSError, ValueError) as exc:
        raise SinkWriteFailure(str(exc)) from exc


def format_lp(model: IpModel) -> str:
    names = [v.name for v in model.variables]
    out = io.StringIO()
    out.write("Minimize\n")
    out.write(f" obj: {_expr(zip(names, model.objective))}\n")
    out.write("Subject To\n")
    for c in model.constraints:
        op = "<=" if c.sense == LE else "="
        out.write(f" {c.name}: {_expr((names[k], v) for k, v in c.terms)} {op} {c.rhs}\n")
    out.write("Binary\n")
    for name in names:
        out.write(f" {name}\n")
    out.write("End\n")
    return out.getvalue()


def export_lp(model: IpModel, destination: Union[TextIO, str, os.PathLike]) -> None:
    """Write the model in CPLEX LP format (ASCII, LF, one row per line)."""
    _write(destination, format_lp(model))


def format_mps(model: IpModel, name: str = "MCSP") -> str:
    names = [v.name for v in model.variables]
    columns: list[list[tuple[str, int | float]]] = [[("obj", c)] for c in model.objective]
    for c in model.constraints:
        for k, v in c.terms:
            columns[k].append((c.name, v))
    out = io.StringIO()
    out.write(f"NAME {name}\nROWS\n N obj\n")
    for c in model.constraints:
        out.write(f" {'L' if c.sense == LE else 'E'} {c.name}\n")
    out.write("COLUMNS\n")
    for var, entries in zip(names, columns):
        for row, v in entries:
            out.write(f" {var} {row} {v:g}\n")
    out.write("RHS\n")
    for c in model.constraints:
        if c.rhs:
            out.write(f" RHS {c.name} {c.rhs}\n")
    out.write("BOUNDS\n")
    for var in names:
        out.write(f" BV BND {var}\n")
    out.write("ENDATA\n")
    return out.getvalue()


def export_mps(model: IpModel, destination: Union[TextIO, str, os.PathLike]) -> None:
    """Write the model in free-format MPS with the same row/column names."""
    _write(destination, format_mps(model))


# -- LP reader ------------------------------------------------------------

@dataclass
class LpFile:
    objective: dict[str, float]
    constraints: dict[str, tuple[dict[str, float], str, float]]
    binaries: list[str]


_TERM = re.compile(r"([+-])?\s*(\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)?\s*([A-Za-z_][\w.]*)")
_ROW = re.compile(r"^\s*([\w.]+)\s*:\s*(.*?)\s*(<=|>=|=)\s*([+-]?\d+(?:\.\d*)?)\s*$")


def _parse_expr(text: str) -> dict[str, float]:
    terms: dict[str, float] = {}
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise FormatError(f"cannot parse expression near {text[pos:pos + 20]!r}")
        sign = -1.0 if m.group(1) == "-" else 1.0
        coef = float(m.group(2)) if m.group(2) else 1.0
        terms[m.group(3)] = terms.get(m.group(3), 0.0) + sign * coef
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return terms


def parse_lp(text: str) -> LpFile:
    """Read back the LP dialect written by :func:`export_lp`."""
    section = None
    objective: dict[str, float] = {}
    constraints: dict[str, tuple[dict[str, float], str, float]] = {}
    binaries: list[str] = []
    for raw in text.splitlines():
        line = raw.split("\\", 1)[0].strip()
        if not line:
            continue
        key = line.lower()
        if key in ("minimize", "minimise", "min", "maximize", "max"):
            section = "obj"
        elif key in ("subject to", "st", "s.t.", "such that"):
            section = "rows"
        elif key in ("binary", "binaries", "bin"):
            section = "bin"
        elif key == "end":
            break
        elif section == "obj":
            _, _, expr = line.partition(":")
            objective.update(_parse_expr(expr))
        elif section == "rows":
            m = _ROW.match(line)
            if not m:
                raise FormatError(f"bad constraint line: {raw!r}")
            constraints[m.group(1)] = (_parse_expr(m.group(2)), m.group(3), float(m.group(4)))
        elif section == "bin":
            binaries.extend(line.split())
        else:
            raise FormatError(f"line outside any section: {raw!r}")
    return LpFile(objective, constraints, binaries)
