"""Text formats: graphs, DIMACS CNF, instance documents and benchmark CSV.

Graph files::

    c optional comment
    p graph <n> <m>
    e <u> <v>          (m lines, edge e_j is the j-th)

Instance documents are JSON objects with a fixed key order.  Keys common to
every kind are ``kind``, ``n``, ``pfs`` and ``cost``; the rest depend on kind:

    mis          cost "popcount",           graph {"vertices", "edges"}
    hamiltonian  cost "oracle:hamiltonian", graph {"vertices", "edges"}
    sat          cost "cnf",                formula [[lit, ...], ...]
    heavy-tuple  cost "tetrad-rules",       rules [[12 weights], ...], seed

``pfs`` is one of ``{"form": "const", "value": bool}``,
``{"form": "dnf", "cubes": [...]}``, ``{"form": "cnf", "clauses": [...]}``,
``{"form": "table-hex", "hex": str}`` or ``{"form": "expr", "expr": tree}``
where a tree is ``["var", i]``, ``["const", bool]``, ``["not", t]`` or
``["and" | "or" | "xor", t, t, ...]``.  Table hex strings hold the 2**n
values in assignment-integer order, four per digit, most significant first,
zero-padded on the right.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import astuple, dataclass, fields
from typing import Any

from .boolean import (
    And,
    BooleanFunction,
    Clause,
    Cnf,
    CnfForm,
    Const,
    Constant,
    Cube,
    Dnf,
    DnfForm,
    Expr,
    ExprForm,
    Not,
    Or,
    TableForm,
    TruthTable,
    Var,
    Xor,
)
from .encoders import Graph, HamiltonianCycleCost
from .errors import ParseError, PfsError, SchemaError
from .heavy_tuple import HeavyTupleInstance, TetradWeightRule
from .model import CnfValue, ElementSet, PopCount, ProblemInstance

# --------------------------------------------------------------------------
# Graphs


def _ints(tokens, line_no):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", line_no) from None


def read_graph(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[frozenset] = set()
    for line_no, line in enumerate(text.splitlines(), 1):
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if header is not None:
                raise ParseError("duplicate header", line_no)
            if len(tokens) != 4 or tokens[1] != "graph":
                raise ParseError("header must be 'p graph <n> <m>'", line_no)
            header = _ints(tokens[2:], line_no)
            if header[0] < 1 or header[1] < 0:
                raise ParseError("vertex count must be >= 1 and edge count >= 0", line_no)
            continue
        if header is None:
            raise ParseError("edge before header", line_no)
        if tokens[0] != "e" or len(tokens) != 3:
            raise ParseError(f"malformed line {line.strip()!r}", line_no)
        u, v = _ints(tokens[1:], line_no)
        n = header[0]
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"vertex out of range 1..{n}", line_no)
        if u == v:
            raise ParseError(f"self-loop on vertex {u}", line_no)
        if frozenset((u, v)) in seen:
            raise ParseError(f"duplicate edge ({u}, {v})", line_no)
        seen.add(frozenset((u, v)))
        edges.append((u, v))
    if header is None:
        raise ParseError("missing 'p graph' header")
    if len(edges) != header[1]:
        raise ParseError(f"header declares {header[1]} edges, found {len(edges)}")
    return Graph(header[0], tuple(edges))


def write_graph(g: Graph) -> str:
    lines = [f"p graph {g.vertex_count} {g.edge_count}"]
    lines += [f"e {u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# DIMACS CNF


def read_cnf(text: str) -> tuple[Cnf, int]:
    header = None
    clauses = []
    current: list[int] = []
    last_line = 0
    for line_no, line in enumerate(text.splitlines(), 1):
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "%":
            break
        last_line = line_no
        if tokens[0] == "p":
            if header is not None:
                raise ParseError("duplicate header", line_no)
            if len(tokens) != 4 or tokens[1] != "cnf":
                raise ParseError("header must be 'p cnf <n> <m>'", line_no)
            header = _ints(tokens[2:], line_no)
            continue
        if header is None:
            raise ParseError("clause before header", line_no)
        for lit in _ints(tokens, line_no):
            if lit == 0:
                try:
                    clauses.append(Clause(tuple(current)))
                except PfsError as exc:
                    raise ParseError(str(exc), line_no) from None
                current = []
            elif abs(lit) > header[0]:
                raise ParseError(f"literal {lit} out of range for {header[0]} variables", line_no)
            else:
                current.append(lit)
    if header is None:
        raise ParseError("missing 'p cnf' header")
    if current:
        raise ParseError("last clause is not terminated by 0", last_line)
    if len(clauses) != header[1]:
        raise ParseError(f"header declares {header[1]} clauses, found {len(clauses)}")
    return Cnf(tuple(clauses)), header[0]


def write_cnf(cnf: Cnf, n: int) -> str:
    lines = [f"p cnf {n} {len(cnf)}"]
    lines += [" ".join(str(l.to_int()) for l in c.literals) + (" 0" if len(c) else "0") for c in cnf]
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# Boolean function payloads


def table_to_hex(table: TruthTable) -> str:
    bits = str(table)
    bits += "0" * (-len(bits) % 4)
    return "".join(f"{int(bits[i:i + 4], 2):x}" for i in range(0, len(bits), 4))


def table_from_hex(text: str, n: int) -> TruthTable:
    size = 1 << n
    digits = (size + 3) // 4
    if len(text) != digits:
        raise SchemaError(f"expected {digits} hex digits for n = {n}, got {len(text)}")
    try:
        bits = "".join(f"{int(c, 16):04b}" for c in text)
    except ValueError:
        raise SchemaError(f"not a hex string: {text!r}") from None
    if set(bits[size:]) - {"0"}:
        raise SchemaError("nonzero padding bits after the table")
    return TruthTable(n, bytes(int(b) for b in bits[:size]))


_NARY = {"and": And, "or": Or, "xor": Xor}


def expr_to_json(node: Expr) -> list:
    if isinstance(node, Var):
        return ["var", node.index]
    if isinstance(node, Const):
        return ["const", node.value]
    if isinstance(node, Not):
        return ["not", expr_to_json(node.arg)]
    for name, cls in _NARY.items():
        if type(node) is cls:
            return [name, *(expr_to_json(a) for a in node.args)]
    raise TypeError(f"unknown expression node {node!r}")


def expr_from_json(doc, path="expr") -> Expr:
    if not isinstance(doc, list) or not doc or not isinstance(doc[0], str):
        raise SchemaError("expression nodes are [op, ...] lists", path)
    op, args = doc[0], doc[1:]
    if op == "var":
        if len(args) != 1 or type(args[0]) is not int or args[0] < 1:
            raise SchemaError("var takes one positive integer", path)
        return Var(args[0])
    if op == "const":
        if len(args) != 1 or not isinstance(args[0], bool):
            raise SchemaError("const takes one boolean", path)
        return Const(args[0])
    if op == "not":
        if len(args) != 1:
            raise SchemaError("not takes one operand", path)
        return Not(expr_from_json(args[0], f"{path}[1]"))
    if op in _NARY:
        if len(args) < 2:
            raise SchemaError(f"{op} takes at least two operands", path)
        return _NARY[op](*(expr_from_json(a, f"{path}[{i}]") for i, a in enumerate(args, 1)))
    raise SchemaError(f"unknown operator {op!r}", path)


def _lit_lists(items) -> list[list[int]]:
    return [[l.to_int() for l in item.literals] for item in items]


def pfs_to_json(fn: BooleanFunction) -> dict:
    if isinstance(fn, Constant):
        return {"form": "const", "value": fn.value}
    if isinstance(fn, DnfForm):
        return {"form": "dnf", "cubes": _lit_lists(fn.dnf)}
    if isinstance(fn, CnfForm):
        return {"form": "cnf", "clauses": _lit_lists(fn.cnf)}
    if isinstance(fn, TableForm):
        return {"form": "table-hex", "hex": table_to_hex(fn.table)}
    if isinstance(fn, ExprForm):
        return {"form": "expr", "expr": expr_to_json(fn.root)}
    raise TypeError(f"cannot serialise {type(fn).__name__}")


def _keys(doc: dict, required: list[str], path: str) -> None:
    if not isinstance(doc, dict):
        raise SchemaError("expected an object", path)
    for key in doc:
        if key not in required:
            raise SchemaError(f"unknown field {key!r}", path)
    for key in required:
        if key not in doc:
            raise SchemaError(f"missing field {key!r}", path)


def _int_lists(doc, path) -> list[list[int]]:
    if not isinstance(doc, list) or not all(
        isinstance(row, list) and all(type(v) is int for v in row) for row in doc
    ):
        raise SchemaError("expected a list of integer lists", path)
    return doc


def pfs_from_json(doc: Any, n: int, path="pfs") -> BooleanFunction:
    if not isinstance(doc, dict) or "form" not in doc:
        raise SchemaError("expected an object with a 'form' field", path)
    form = doc["form"]
    try:
        if form == "const":
            _keys(doc, ["form", "value"], path)
            if not isinstance(doc["value"], bool):
                raise SchemaError("expected a boolean", f"{path}.value")
            return Constant(doc["value"], n)
        if form == "dnf":
            _keys(doc, ["form", "cubes"], path)
            cubes = _int_lists(doc["cubes"], f"{path}.cubes")
            return DnfForm(Dnf(tuple(Cube(tuple(c)) for c in cubes)), n)
        if form == "cnf":
            _keys(doc, ["form", "clauses"], path)
            clauses = _int_lists(doc["clauses"], f"{path}.clauses")
            return CnfForm(Cnf(tuple(Clause(tuple(c)) for c in clauses)), n)
        if form == "table-hex":
            _keys(doc, ["form", "hex"], path)
            if not isinstance(doc["hex"], str):
                raise SchemaError("expected a string", f"{path}.hex")
            return TableForm(table_from_hex(doc["hex"], n))
        if form == "expr":
            _keys(doc, ["form", "expr"], path)
            return ExprForm(expr_from_json(doc["expr"], f"{path}.expr"), n)
    except SchemaError as exc:
        if exc.path:
            raise
        raise SchemaError(str(exc), path) from None
    except PfsError as exc:
        raise SchemaError(str(exc), path) from None
    raise SchemaError(f"unknown form {form!r}", f"{path}.form")


# --------------------------------------------------------------------------
# Instance documents

KINDS = {
    "mis": ("popcount", ["graph"]),
    "hamiltonian": ("oracle:hamiltonian", ["graph"]),
    "sat": ("cnf", ["formula"]),
    "heavy-tuple": ("tetrad-rules", ["rules", "seed"]),
}


def _graph_json(g: Graph) -> dict:
    return {"vertices": g.vertex_count, "edges": [list(e) for e in g.edges]}


def _graph_from_json(doc, path="graph") -> Graph:
    _keys(doc, ["vertices", "edges"], path)
    if type(doc["vertices"]) is not int:
        raise SchemaError("expected an integer", f"{path}.vertices")
    edges = _int_lists(doc["edges"], f"{path}.edges")
    if any(len(e) != 2 for e in edges):
        raise SchemaError("each edge is a [u, v] pair", f"{path}.edges")
    try:
        return Graph(doc["vertices"], tuple(tuple(e) for e in edges))
    except PfsError as exc:
        raise SchemaError(str(exc), path) from None


def instance_to_json(inst) -> dict:
    if isinstance(inst, HeavyTupleInstance):
        return {
            "kind": "heavy-tuple",
            "n": inst.n,
            "pfs": pfs_to_json(inst.pfs),
            "cost": "tetrad-rules",
            "rules": [r.values() for r in inst.rules],
            "seed": inst.seed,
        }
    if inst.kind == "heavy-tuple":
        return instance_to_json(inst.source)
    if inst.kind not in KINDS:
        raise SchemaError(f"cannot serialise an instance of kind {inst.kind!r}", "kind")
    doc = {"kind": inst.kind, "n": inst.n, "pfs": pfs_to_json(inst.pfs), "cost": KINDS[inst.kind][0]}
    if inst.kind in ("mis", "hamiltonian"):
        if not isinstance(inst.source, Graph):
            raise SchemaError(f"{inst.kind} instance carries no source graph", "graph")
        doc["graph"] = _graph_json(inst.source)
    else:
        doc["formula"] = _lit_lists(inst.cost.cnf)
    return doc


def instance_from_json(doc: Any):
    """Inverse of :func:`instance_to_json`.

    Heavy Tuple documents give a :class:`HeavyTupleInstance`; every other kind
    gives a :class:`ProblemInstance`.
    """
    if not isinstance(doc, dict):
        raise SchemaError("instance document must be an object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise SchemaError(f"unknown kind {kind!r}; expected one of {sorted(KINDS)}", "kind")
    cost_name, extra = KINDS[kind]
    _keys(doc, ["kind", "n", "pfs", "cost", *extra], "")
    n = doc["n"]
    if type(n) is not int or n < 1:
        raise SchemaError("expected a positive integer", "n")
    if doc["cost"] != cost_name:
        raise SchemaError(f"kind {kind} requires cost {cost_name!r}, got {doc['cost']!r}", "cost")
    pfs = pfs_from_json(doc["pfs"], n)

    if kind == "heavy-tuple":
        rows = _int_lists(doc["rules"], "rules")
        seed = doc["seed"]
        if seed is not None and type(seed) is not int:
            raise SchemaError("expected an integer or null", "seed")
        if n % 4:
            raise SchemaError("heavy-tuple instances need n divisible by 4", "n")
        if len(rows) != n // 4:
            raise SchemaError(f"n = {n} needs {n // 4} rules, got {len(rows)}", "rules")
        try:
            rules = tuple(TetradWeightRule.from_values(r) for r in rows)
        except PfsError as exc:
            raise SchemaError(str(exc), "rules") from None
        return HeavyTupleInstance(n // 4, rules, pfs, seed)

    if kind == "sat":
        rows = _int_lists(doc["formula"], "formula")
        try:
            formula = Cnf(tuple(Clause(tuple(c)) for c in rows))
            cost = CnfValue(formula, n)
        except PfsError as exc:
            raise SchemaError(str(exc), "formula") from None
        if formula.max_var > n:
            raise SchemaError(f"formula uses x{formula.max_var} but n = {n}", "formula")
        return ProblemInstance(ElementSet.numbered("x", n), pfs, cost, kind="sat", source=formula)

    g = _graph_from_json(doc["graph"])
    if kind == "mis":
        if g.vertex_count != n:
            raise SchemaError(f"graph has {g.vertex_count} vertices but n = {n}", "graph.vertices")
        return ProblemInstance(ElementSet.numbered("v", n), pfs, PopCount(), kind="mis", source=g)
    if g.edge_count != n:
        raise SchemaError(f"graph has {g.edge_count} edges but n = {n}", "graph.edges")
    return ProblemInstance(
        ElementSet.numbered("e", n), pfs, HamiltonianCycleCost(g), kind="hamiltonian", source=g
    )


def write_instance(inst) -> str:
    doc = instance_to_json(inst)
    body = ",\n".join(f"  {json.dumps(k)}: {json.dumps(v)}" for k, v in doc.items())
    return "{\n" + body + "\n}\n"


def read_instance(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    return instance_from_json(doc)


# --------------------------------------------------------------------------
# Benchmark CSV


@dataclass(frozen=True)
class BenchRow:
    n: int
    seed: int
    feasible_count: int
    pfs_evaluations: int
    cost_evaluations: int
    best_weight: int
    elapsed_ms: float


BENCH_HEADER = [f.name for f in fields(BenchRow)]


def write_bench_csv(rows, out) -> None:
    writer = csv.writer(out, lineterminator="\n", quoting=csv.QUOTE_NONE)
    writer.writerow(BENCH_HEADER)
    for row in rows:
        values = list(astuple(row))
        values[-1] = f"{row.elapsed_ms:.3f}"
        writer.writerow(values)


def read_bench_csv(text: str) -> list[BenchRow]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != BENCH_HEADER:
        raise ParseError(f"unexpected header {header!r}", 1)
    rows = []
    for line_no, rec in enumerate(reader, 2):
        if len(rec) != len(BENCH_HEADER):
            raise ParseError(f"expected {len(BENCH_HEADER)} fields, got {len(rec)}", line_no)
        try:
            rows.append(BenchRow(*(int(v) for v in rec[:-1]), float(rec[-1])))
        except ValueError:
            raise ParseError(f"non-numeric field in {rec!r}", line_no) from None
    return rows
