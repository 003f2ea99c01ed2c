"""The Heavy Tuple problem.

An assignment of n = 4k variables is split into k consecutive tetrads
(x1..x4, x5..x8, ...).  Each tetrad is weighted by its own rule

    T = w1(x1) + w2(x1, x2) + w3(x3) + w4(x3, x4)

and the weight of the assignment is the sum of its tetrad weights.  The task
is to maximise that weight over assignments where a balanced feasibility
function is true.

Randomness
----------
All generators use numpy's PCG64 bit generator (``numpy.random.default_rng``).
``generate_instance(k, seed, (lo, hi))`` spawns two children of
``SeedSequence(seed)``: the first draws a ``(k, 12)`` array of weights with
``integers(lo, hi, endpoint=True)`` in :meth:`TetradWeightRule.values` order;
the second yields one 32-bit word that seeds :func:`generate_balanced_pfs`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .boolean import (
    And,
    Assignment,
    BooleanFunction,
    ExprForm,
    Not,
    Or,
    TableForm,
    TruthTable,
    Var,
    Xor,
    as_assignment,
    equivalence_diff,
)
from .errors import ArityError, DomainError
from .model import CostFunction, ElementSet, ProblemInstance


@dataclass(frozen=True)
class TetradWeightRule:
    """``w2`` and ``w4`` are indexed by ``2*a + b`` for the bit pairs (x1, x2) and (x3, x4)."""

    w1: tuple[int, int]
    w2: tuple[int, int, int, int]
    w3: tuple[int, int]
    w4: tuple[int, int, int, int]

    def __post_init__(self):
        for name, size in (("w1", 2), ("w2", 4), ("w3", 2), ("w4", 4)):
            vals = tuple(int(v) for v in getattr(self, name))
            if len(vals) != size:
                raise DomainError(f"{name} needs {size} weights, got {len(vals)}")
            object.__setattr__(self, name, vals)

    @classmethod
    def from_values(cls, values: Sequence[int]) -> TetradWeightRule:
        values = list(values)
        if len(values) != 12:
            raise DomainError(f"a tetrad rule has 12 weights, got {len(values)}")
        return cls(tuple(values[0:2]), tuple(values[2:6]), tuple(values[6:8]), tuple(values[8:12]))

    def values(self) -> list[int]:
        return [*self.w1, *self.w2, *self.w3, *self.w4]

    def summands(self, bits: Sequence[int]) -> tuple[int, int, int, int]:
        x1, x2, x3, x4 = _tetrad(bits)
        return self.w1[x1], self.w2[2 * x1 + x2], self.w3[x3], self.w4[2 * x3 + x4]

    def table(self) -> list[int]:
        """Tetrad weight for each 4-bit value 0..15 (x1 most significant)."""
        return [sum(self.summands(((t >> 3) & 1, (t >> 2) & 1, (t >> 1) & 1, t & 1))) for t in range(16)]


def _tetrad(bits: Sequence[int]) -> tuple[int, int, int, int]:
    bits = tuple(as_assignment(bits))
    if len(bits) != 4:
        raise ArityError(f"a tetrad has 4 bits, got {len(bits)}")
    return bits


PAPER_RULE = TetradWeightRule(w1=(5, 13), w2=(7, 10, 12, 4), w3=(3, 8), w4=(2, 15, 3, 17))


def tetrad_weight(rule: TetradWeightRule, bits: Sequence[int]) -> int:
    return sum(rule.summands(bits))


def max_tetrad_weight(rule: TetradWeightRule) -> int:
    return max(rule.table())


@dataclass(frozen=True)
class TetradSum(CostFunction):
    """Sum of per-tetrad weights, block i weighted by ``rules[i]``."""

    rules: tuple[TetradWeightRule, ...]

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))

    @property
    def arity(self) -> int:
        return 4 * len(self.rules)

    def __call__(self, asg):
        asg = as_assignment(asg)
        if len(asg) != self.arity:
            raise ArityError(f"assignment of length {len(asg)}, expected {self.arity}")
        return sum(tetrad_weight(r, asg.bits[4 * i : 4 * i + 4]) for i, r in enumerate(self.rules))

    def batch(self, idx, n):
        out = np.zeros(idx.shape, dtype=np.int64)
        for i, rule in enumerate(self.rules):
            t = (idx >> (n - 4 * (i + 1))) & 15
            out += np.asarray(rule.table(), dtype=np.int64)[t]
        return out


@dataclass(frozen=True)
class HeavyTupleInstance:
    k: int
    rules: tuple[TetradWeightRule, ...]
    pfs: BooleanFunction
    seed: int | None = None

    def __post_init__(self):
        rules = tuple(self.rules)
        if self.k < 1:
            raise DomainError(f"k must be >= 1, got {self.k}")
        if len(rules) != self.k:
            raise DomainError(f"expected {self.k} tetrad rules, got {len(rules)}")
        if self.pfs.arity is not None and self.pfs.arity != 4 * self.k:
            raise ArityError(f"pfs arity {self.pfs.arity} does not match n = {4 * self.k}")
        object.__setattr__(self, "rules", rules)

    @property
    def n(self) -> int:
        return 4 * self.k

    @property
    def cost(self) -> TetradSum:
        return TetradSum(self.rules)

    def to_problem(self) -> ProblemInstance:
        return ProblemInstance(
            ElementSet.numbered("x", self.n), self.pfs, self.cost, kind="heavy-tuple", source=self
        )


def tuple_weight(inst: HeavyTupleInstance, asg) -> int:
    return inst.cost(asg)


# --------------------------------------------------------------------------
# The concrete 4-variable instance


PAPER_TABLE_ONES = (0b0000, 0b0010, 0b0100, 0b0101, 0b0110, 0b1000, 0b1100, 0b1110)


def paper_pfs_table() -> TableForm:
    return TableForm(TruthTable.from_ones(4, PAPER_TABLE_ONES))


def paper_pfs_formula() -> ExprForm:
    """(~x1 | x2 | ~x3) & ~x4  |  x1 & x2 & ~x3, as printed alongside the table."""
    x1, x2, x3, x4 = (Var(i) for i in range(1, 5))
    return ExprForm(Or(And(Or(Not(x1), x2, Not(x3)), Not(x4)), And(x1, x2, Not(x3))), 4)


def paper_instance(pfs: BooleanFunction | None = None) -> HeavyTupleInstance:
    """k = 1 with the published weights; the feasibility function defaults to the table."""
    return HeavyTupleInstance(1, (PAPER_RULE,), paper_pfs_table() if pfs is None else pfs)


def paper_divergence() -> list[Assignment]:
    """Assignments where the published table and the published formula disagree."""
    return equivalence_diff(paper_pfs_table(), paper_pfs_formula(), 4)


# --------------------------------------------------------------------------
# Generators


def _random_expr(rng: np.random.Generator, variables: list[int]):
    items = []
    for v in rng.permutation(variables):
        leaf = Var(int(v))
        items.append(Not(leaf) if rng.integers(2) else leaf)
    while len(items) > 1:
        a = items.pop(int(rng.integers(len(items))))
        b = items.pop(int(rng.integers(len(items))))
        node = (And, Or, Xor)[int(rng.integers(3))](a, b)
        if rng.integers(4) == 0:
            node = Not(node)
        items.append(node)
    return items[0]


def generate_balanced_pfs(n: int, seed: int) -> ExprForm:
    """``x1 XOR g(x2..xn)`` for a random tree g; balanced because g ignores x1.

    g combines the (randomly negated) leaves x2..xn pairwise with AND/OR/XOR,
    occasionally under a NOT, so it has fewer than 4n nodes.
    """
    if n < 2:
        raise DomainError(f"balanced generator needs n >= 2, got {n}")
    rng = np.random.default_rng(seed)
    g = _random_expr(rng, list(range(2, n + 1)))
    return ExprForm(Xor(Var(1), g), n)


def generate_instance(k: int, seed: int, weight_range: tuple[int, int] = (1, 20)) -> HeavyTupleInstance:
    lo, hi = weight_range
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if lo > hi:
        raise DomainError(f"empty weight range ({lo}, {hi})")
    weights_ss, pfs_ss = np.random.SeedSequence(seed).spawn(2)
    weights = np.random.default_rng(weights_ss).integers(lo, hi, size=(k, 12), endpoint=True)
    rules = tuple(TetradWeightRule.from_values(row.tolist()) for row in weights)
    pfs_seed = int(pfs_ss.generate_state(1)[0])
    return HeavyTupleInstance(k, rules, generate_balanced_pfs(4 * k, pfs_seed), seed=seed)
