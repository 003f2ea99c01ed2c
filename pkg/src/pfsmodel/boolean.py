"""Boolean functions over fixed-length 0/1 tuples.

Variables are 1-based (``x1 .. xn``).  An assignment is encoded as an integer
with ``x1`` as the most significant bit, so for n = 4 the integers 0..15 list
the tuples 0000, 0001, ..., 1111 in the usual table order.

Every function form supports two evaluation paths: a scalar one over a single
:class:`Assignment` and a vectorised one over a numpy array of assignment
integers.  Exhaustive operations (counting, truth tables, equivalence) use the
vectorised path; the scalar path is kept deliberately simple so the two can be
cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import ArityError, CapError, DomainError, RangeError

MAX_VARS = 24
# ExprForm trees may hold at most EXPR_NODES_PER_VAR * n nodes.
EXPR_NODES_PER_VAR = 8
CHUNK_BITS = 20


def check_cap(n: int) -> None:
    if n < 0:
        raise DomainError(f"variable count must be non-negative, got {n}")
    if n > MAX_VARS:
        raise CapError(f"n = {n} exceeds the enumeration cap of {MAX_VARS}")


# --------------------------------------------------------------------------
# Assignments


@dataclass(frozen=True)
class Assignment:
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise DomainError(f"assignment bits must be 0 or 1, got {self.bits!r}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_int(cls, value: int, n: int) -> Assignment:
        if not 0 <= value < (1 << n):
            raise RangeError(f"{value} does not encode an assignment of length {n}")
        return cls(tuple((value >> (n - 1 - i)) & 1 for i in range(n)))

    @classmethod
    def from_str(cls, text: str) -> Assignment:
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise DomainError(f"not a bit string: {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def zeros(cls, n: int) -> Assignment:
        return cls((0,) * n)

    def to_int(self) -> int:
        value = 0
        for b in self.bits:
            value = (value << 1) | b
        return value

    def var(self, i: int) -> int:
        """Value of ``x_i`` (1-based)."""
        if not 1 <= i <= len(self.bits):
            raise RangeError(f"x{i} is out of range for an assignment of length {len(self.bits)}")
        return self.bits[i - 1]

    def popcount(self) -> int:
        return sum(self.bits)

    def __len__(self):
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __str__(self):
        return "".join(map(str, self.bits))


def as_assignment(asg) -> Assignment:
    if isinstance(asg, Assignment):
        return asg
    if isinstance(asg, str):
        return Assignment.from_str(asg)
    return Assignment(tuple(asg))


# --------------------------------------------------------------------------
# Literals, cubes, clauses


@dataclass(frozen=True, order=True)
class Literal:
    var: int
    negated: bool = False

    def __post_init__(self):
        if self.var < 1:
            raise RangeError(f"variable index must be >= 1, got {self.var}")

    @classmethod
    def from_int(cls, value: int) -> Literal:
        """DIMACS-style: ``3`` is x3, ``-3`` is ~x3."""
        if value == 0:
            raise RangeError("literal 0 is not a variable")
        return cls(abs(value), value < 0)

    def to_int(self) -> int:
        return -self.var if self.negated else self.var

    def __invert__(self) -> Literal:
        return Literal(self.var, not self.negated)

    def satisfied_by(self, asg: Assignment) -> bool:
        return asg.var(self.var) != self.negated

    def __str__(self):
        return f"~x{self.var}" if self.negated else f"x{self.var}"


def _canonical(literals: Iterable) -> tuple[Literal, ...]:
    lits = sorted(Literal.from_int(l) if isinstance(l, int) else l for l in literals)
    for a, b in zip(lits, lits[1:]):
        if a.var == b.var:
            raise DomainError(f"variable x{a.var} occurs twice")
    return tuple(lits)


@dataclass(frozen=True)
class Cube:
    """Conjunction of literals; the empty cube is true."""

    literals: tuple[Literal, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "literals", _canonical(self.literals))

    @classmethod
    def of(cls, *lits: int) -> Cube:
        return cls(tuple(lits))

    @property
    def max_var(self) -> int:
        return max((l.var for l in self.literals), default=0)

    def evaluate(self, asg: Assignment) -> bool:
        return all(l.satisfied_by(asg) for l in self.literals)

    def __len__(self):
        return len(self.literals)

    def __str__(self):
        return " ".join(map(str, self.literals)) if self.literals else "true"


@dataclass(frozen=True)
class Clause:
    """Disjunction of literals; the empty clause is false."""

    literals: tuple[Literal, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "literals", _canonical(self.literals))

    @classmethod
    def of(cls, *lits: int) -> Clause:
        return cls(tuple(lits))

    @property
    def max_var(self) -> int:
        return max((l.var for l in self.literals), default=0)

    def evaluate(self, asg: Assignment) -> bool:
        return any(l.satisfied_by(asg) for l in self.literals)

    def __len__(self):
        return len(self.literals)

    def __str__(self):
        return "(" + " | ".join(map(str, self.literals)) + ")" if self.literals else "false"


@dataclass(frozen=True)
class Dnf:
    cubes: tuple[Cube, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cubes", tuple(self.cubes))

    @classmethod
    def of(cls, *cubes: Sequence[int]) -> Dnf:
        return cls(tuple(Cube(tuple(c)) for c in cubes))

    @property
    def max_var(self) -> int:
        return max((c.max_var for c in self.cubes), default=0)

    def __len__(self):
        return len(self.cubes)

    def __iter__(self):
        return iter(self.cubes)

    def __str__(self):
        return " v ".join(map(str, self.cubes)) if self.cubes else "false"


@dataclass(frozen=True)
class Cnf:
    clauses: tuple[Clause, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(self.clauses))

    @classmethod
    def of(cls, *clauses: Sequence[int]) -> Cnf:
        return cls(tuple(Clause(tuple(c)) for c in clauses))

    @property
    def max_var(self) -> int:
        return max((c.max_var for c in self.clauses), default=0)

    def __len__(self):
        return len(self.clauses)

    def __iter__(self):
        return iter(self.clauses)

    def __str__(self):
        return " & ".join(map(str, self.clauses)) if self.clauses else "true"


def _check_range(max_var: int, asg: Assignment) -> None:
    if max_var > len(asg):
        raise RangeError(f"x{max_var} is out of range for an assignment of length {len(asg)}")


def eval_cube(cube: Cube, asg: Assignment) -> bool:
    asg = as_assignment(asg)
    _check_range(cube.max_var, asg)
    return cube.evaluate(asg)


def eval_dnf(dnf: Dnf, asg: Assignment) -> bool:
    asg = as_assignment(asg)
    _check_range(dnf.max_var, asg)
    return any(c.evaluate(asg) for c in dnf.cubes)


def eval_cnf(cnf: Cnf, asg: Assignment) -> bool:
    asg = as_assignment(asg)
    _check_range(cnf.max_var, asg)
    return all(c.evaluate(asg) for c in cnf.clauses)


def negate_dnf(dnf: Dnf) -> Cnf:
    """De Morgan: each cube becomes the clause of its complemented literals."""
    return Cnf(tuple(Clause(tuple(~l for l in c.literals)) for c in dnf.cubes))


def negate_cnf(cnf: Cnf) -> Dnf:
    return Dnf(tuple(Cube(tuple(~l for l in c.literals)) for c in cnf.clauses))


def absorb(dnf: Dnf) -> Dnf:
    """Drop duplicate cubes (first one wins) and cubes that contain another cube."""
    sets = [frozenset(c.literals) for c in dnf.cubes]
    kept = []
    seen = set()
    for cube, lits in zip(dnf.cubes, sets):
        if lits in seen:
            continue
        if any(other < lits for other in sets):
            continue
        seen.add(lits)
        kept.append(cube)
    return Dnf(tuple(kept))


# --------------------------------------------------------------------------
# Expression trees


class Expr:
    """Node of an AND/OR/NOT/XOR expression tree over variables."""

    def __and__(self, other):
        return And(self, other)

    def __or__(self, other):
        return Or(self, other)

    def __xor__(self, other):
        return Xor(self, other)

    def __invert__(self):
        return Not(self)


@dataclass(frozen=True)
class Var(Expr):
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise RangeError(f"variable index must be >= 1, got {self.index}")

    def __str__(self):
        return f"x{self.index}"


@dataclass(frozen=True)
class Const(Expr):
    value: bool

    def __str__(self):
        return "1" if self.value else "0"


@dataclass(frozen=True)
class Not(Expr):
    arg: Expr

    def __str__(self):
        return f"~{self.arg}"


@dataclass(frozen=True, init=False)
class _NAry(Expr):
    args: tuple[Expr, ...]
    symbol = "?"

    def __init__(self, *args: Expr):
        if len(args) < 2:
            raise DomainError(f"{type(self).__name__} needs at least two operands")
        object.__setattr__(self, "args", tuple(args))

    def __str__(self):
        return "(" + f" {self.symbol} ".join(map(str, self.args)) + ")"


class And(_NAry):
    symbol = "&"


class Or(_NAry):
    symbol = "|"


class Xor(_NAry):
    symbol = "^"


def expr_size(node: Expr) -> int:
    if isinstance(node, (Var, Const)):
        return 1
    if isinstance(node, Not):
        return 1 + expr_size(node.arg)
    return 1 + sum(expr_size(a) for a in node.args)


def expr_max_var(node: Expr) -> int:
    if isinstance(node, Var):
        return node.index
    if isinstance(node, Const):
        return 0
    if isinstance(node, Not):
        return expr_max_var(node.arg)
    return max(expr_max_var(a) for a in node.args)


def _eval_expr(node: Expr, asg: Assignment) -> bool:
    if isinstance(node, Var):
        return asg.var(node.index) == 1
    if isinstance(node, Const):
        return node.value
    if isinstance(node, Not):
        return not _eval_expr(node.arg, asg)
    vals = [_eval_expr(a, asg) for a in node.args]
    if isinstance(node, And):
        return all(vals)
    if isinstance(node, Or):
        return any(vals)
    if isinstance(node, Xor):
        return sum(vals) % 2 == 1
    raise TypeError(f"unknown expression node {node!r}")


class _Columns:
    """Lazily computed per-variable bit columns for a block of assignment integers."""

    def __init__(self, idx: np.ndarray, n: int):
        self.idx = idx
        self.n = n
        self._cache: dict[int, np.ndarray] = {}

    def __getitem__(self, var: int) -> np.ndarray:
        if not 1 <= var <= self.n:
            raise RangeError(f"x{var} is out of range for n = {self.n}")
        col = self._cache.get(var)
        if col is None:
            col = ((self.idx >> (self.n - var)) & 1).astype(bool)
            self._cache[var] = col
        return col

    def literal(self, lit: Literal) -> np.ndarray:
        col = self[lit.var]
        return ~col if lit.negated else col

    def full(self, value: bool) -> np.ndarray:
        return np.full(self.idx.shape, value, dtype=bool)


def _eval_expr_vec(node: Expr, cols: _Columns) -> np.ndarray:
    if isinstance(node, Var):
        return cols[node.index]
    if isinstance(node, Const):
        return cols.full(node.value)
    if isinstance(node, Not):
        return ~_eval_expr_vec(node.arg, cols)
    vals = [_eval_expr_vec(a, cols) for a in node.args]
    out = vals[0].copy()
    if isinstance(node, And):
        for v in vals[1:]:
            out &= v
    elif isinstance(node, Or):
        for v in vals[1:]:
            out |= v
    elif isinstance(node, Xor):
        for v in vals[1:]:
            out ^= v
    else:
        raise TypeError(f"unknown expression node {node!r}")
    return out


# --------------------------------------------------------------------------
# Function forms


@dataclass(frozen=True)
class TruthTable:
    n: int
    values: bytes

    def __post_init__(self):
        check_cap(self.n)
        values = bytes(int(v) for v in self.values)
        if len(values) != 1 << self.n:
            raise ArityError(f"table for n = {self.n} needs {1 << self.n} values, got {len(values)}")
        if any(v > 1 for v in values):
            raise DomainError("truth table values must be 0 or 1")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_ones(cls, n: int, ones: Iterable[int]) -> TruthTable:
        buf = bytearray(1 << n)
        for i in ones:
            buf[i] = 1
        return cls(n, bytes(buf))

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __str__(self):
        return "".join(map(str, self.values))


class BooleanFunction:
    """Common interface of the function forms.

    ``arity`` is the number of variables the function is defined over, or
    None for constants, which accept assignments of any length.
    """

    arity: int | None = None

    def evaluate(self, asg: Assignment) -> bool:
        raise NotImplementedError

    def evaluate_indices(self, idx: np.ndarray, n: int) -> np.ndarray:
        raise NotImplementedError


@dataclass(frozen=True)
class Constant(BooleanFunction):
    value: bool
    arity: int | None = None

    def evaluate(self, asg):
        return self.value

    def evaluate_indices(self, idx, n):
        return np.full(idx.shape, self.value, dtype=bool)


def _check_form_arity(arity: int, max_var: int) -> None:
    if arity < 0:
        raise DomainError(f"arity must be non-negative, got {arity}")
    if max_var > arity:
        raise RangeError(f"x{max_var} is out of range for arity {arity}")


@dataclass(frozen=True)
class DnfForm(BooleanFunction):
    dnf: Dnf
    arity: int

    def __post_init__(self):
        _check_form_arity(self.arity, self.dnf.max_var)

    def evaluate(self, asg):
        return eval_dnf(self.dnf, asg)

    def evaluate_indices(self, idx, n):
        cols = _Columns(idx, n)
        out = cols.full(False)
        for cube in self.dnf.cubes:
            term = cols.full(True)
            for lit in cube.literals:
                term &= cols.literal(lit)
            out |= term
        return out


@dataclass(frozen=True)
class CnfForm(BooleanFunction):
    cnf: Cnf
    arity: int

    def __post_init__(self):
        _check_form_arity(self.arity, self.cnf.max_var)

    def evaluate(self, asg):
        return eval_cnf(self.cnf, asg)

    def evaluate_indices(self, idx, n):
        cols = _Columns(idx, n)
        out = cols.full(True)
        for clause in self.cnf.clauses:
            term = cols.full(False)
            for lit in clause.literals:
                term |= cols.literal(lit)
            out &= term
        return out


@dataclass(frozen=True)
class TableForm(BooleanFunction):
    table: TruthTable

    @property
    def arity(self) -> int:
        return self.table.n

    def evaluate(self, asg):
        return self.table[asg.to_int()] == 1

    def evaluate_indices(self, idx, n):
        values = np.frombuffer(self.table.values, dtype=np.uint8)
        return values[idx].astype(bool)


@dataclass(frozen=True)
class ExprForm(BooleanFunction):
    root: Expr
    arity: int

    def __post_init__(self):
        _check_form_arity(self.arity, expr_max_var(self.root))
        size = expr_size(self.root)
        limit = EXPR_NODES_PER_VAR * max(self.arity, 1)
        if size > limit:
            raise DomainError(f"expression has {size} nodes, limit for n = {self.arity} is {limit}")

    def evaluate(self, asg):
        return _eval_expr(self.root, asg)

    def evaluate_indices(self, idx, n):
        return _eval_expr_vec(self.root, _Columns(idx, n))

    def __str__(self):
        return str(self.root)


TRUE = Constant(True)
FALSE = Constant(False)


def _check_arity(fn: BooleanFunction, n: int) -> None:
    if fn.arity is not None and fn.arity != n:
        raise ArityError(f"function has arity {fn.arity}, got {n} variables")


def evaluate(fn: BooleanFunction, asg) -> bool:
    asg = as_assignment(asg)
    _check_arity(fn, len(asg))
    return bool(fn.evaluate(asg))


def negate(fn: BooleanFunction) -> BooleanFunction:
    """Complement of ``fn`` in the same representation family."""
    if isinstance(fn, Constant):
        return Constant(not fn.value, fn.arity)
    if isinstance(fn, DnfForm):
        return CnfForm(negate_dnf(fn.dnf), fn.arity)
    if isinstance(fn, CnfForm):
        return DnfForm(negate_cnf(fn.cnf), fn.arity)
    if isinstance(fn, TableForm):
        return TableForm(TruthTable(fn.table.n, bytes(1 - v for v in fn.table.values)))
    if isinstance(fn, ExprForm):
        return ExprForm(Not(fn.root), fn.arity)
    raise TypeError(f"cannot negate {type(fn).__name__}")


def index_chunks(n: int, chunk_bits: int = CHUNK_BITS) -> Iterator[np.ndarray]:
    """Ascending blocks of assignment integers covering 0 .. 2**n - 1."""
    total = 1 << n
    step = 1 << min(n, chunk_bits)
    for start in range(0, total, step):
        yield np.arange(start, min(start + step, total), dtype=np.int64)


def all_values(fn: BooleanFunction, n: int) -> np.ndarray:
    """Boolean array of ``fn`` at every assignment, in integer order."""
    check_cap(n)
    _check_arity(fn, n)
    return np.concatenate([fn.evaluate_indices(idx, n) for idx in index_chunks(n)])


def count_satisfying(fn: BooleanFunction, n: int) -> int:
    check_cap(n)
    _check_arity(fn, n)
    return sum(int(np.count_nonzero(fn.evaluate_indices(idx, n))) for idx in index_chunks(n))


def is_balanced(fn: BooleanFunction, n: int) -> bool:
    if n == 0:
        return False
    return count_satisfying(fn, n) == 1 << (n - 1)


def equivalence_diff(a: BooleanFunction, b: BooleanFunction, n: int) -> list[Assignment]:
    """All assignments, ascending, on which ``a`` and ``b`` disagree."""
    check_cap(n)
    _check_arity(a, n)
    _check_arity(b, n)
    out = []
    for idx in index_chunks(n):
        diff = a.evaluate_indices(idx, n) != b.evaluate_indices(idx, n)
        out.extend(Assignment.from_int(int(i), n) for i in idx[diff])
    return out


def to_truth_table(fn: BooleanFunction, n: int) -> TruthTable:
    return TruthTable(n, all_values(fn, n).astype(np.uint8).tobytes())
