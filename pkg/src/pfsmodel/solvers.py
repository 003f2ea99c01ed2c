"""Exact maximisation over ProblemInstances, with evaluation counters.

Ties are always broken towards the smallest assignment integer, so every
solver, and every partitioning of the exhaustive scan, returns the same
argmax.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import numpy as np

from .boolean import CHUNK_BITS, Assignment, check_cap, count_satisfying, evaluate, index_chunks
from .errors import DomainError
from .heavy_tuple import HeavyTupleInstance, TetradSum
from .model import ProblemInstance


@dataclass(frozen=True)
class SolveResult:
    best: tuple[Assignment, int] | None
    feasible_count: int
    pfs_evaluations: int
    cost_evaluations: int
    elapsed: float = 0.0  # seconds
    method: str = "exhaustive"
    note: str = ""

    @property
    def best_assignment(self) -> Assignment | None:
        return None if self.best is None else self.best[0]

    @property
    def best_cost(self) -> int | None:
        return None if self.best is None else self.best[1]


def _better(a, b):
    """Pick between two (assignment int, cost) candidates."""
    if a is None:
        return b
    if b is None:
        return a
    if a[1] != b[1]:
        return a if a[1] > b[1] else b
    return a if a[0] <= b[0] else b


@dataclass(frozen=True)
class _Partial:
    best: tuple[int, int] | None
    feasible: int
    pfs_evals: int
    cost_evals: int

    def merge(self, other: _Partial) -> _Partial:
        return _Partial(
            _better(self.best, other.best),
            self.feasible + other.feasible,
            self.pfs_evals + other.pfs_evals,
            self.cost_evals + other.cost_evals,
        )


def _as_problem(inst) -> ProblemInstance:
    return inst.to_problem() if isinstance(inst, HeavyTupleInstance) else inst


def _scan(inst: ProblemInstance, idx: np.ndarray) -> _Partial:
    n = inst.n
    feasible = inst.pfs.evaluate_indices(idx, n)
    fidx = idx[feasible]
    best = None
    if len(fidx):
        costs = inst.cost.batch(fidx, n)
        j = int(np.argmax(costs))  # first maximum, i.e. smallest integer
        best = (int(fidx[j]), int(costs[j]))
    return _Partial(best, len(fidx), len(idx), len(fidx))


def solve_exhaustive(inst, workers: int = 1, chunk_bits: int = CHUNK_BITS) -> SolveResult:
    """Evaluate the feasibility function on all 2**n assignments and the cost on the feasible ones.

    The assignment range is split into blocks by high-order bits; with
    ``workers > 1`` the blocks are scanned on a thread pool.  The result does
    not depend on ``workers`` or ``chunk_bits``.
    """
    inst = _as_problem(inst)
    check_cap(inst.n)
    start = time.perf_counter()
    chunks = list(index_chunks(inst.n, chunk_bits))
    if workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda idx: _scan(inst, idx), chunks))
    else:
        parts = [_scan(inst, idx) for idx in chunks]
    total = reduce(_Partial.merge, parts)
    elapsed = time.perf_counter() - start
    best = None
    if total.best is not None:
        best = (Assignment.from_int(total.best[0], inst.n), total.best[1])
    return SolveResult(best, total.feasible, total.pfs_evals, total.cost_evals, elapsed)


def _tetrad_parts(inst):
    if isinstance(inst, HeavyTupleInstance):
        return inst.rules, inst.pfs
    if isinstance(inst.cost, TetradSum):
        return inst.cost.rules, inst.pfs
    return None


def solve_branch_and_bound(inst) -> SolveResult:
    """Depth-first search over tetrads with an additive upper bound.

    Tetrad values are tried in ascending order, so leaves are reached in
    ascending integer order; a subtree is cut when its prefix weight plus the
    best possible weight of the remaining tetrads cannot beat the incumbent.
    Only leaves that survive the bound are checked for feasibility, so
    ``feasible_count`` counts feasible leaves seen, not the whole feasible set.

    Instances whose cost is not a tetrad sum have no such bound and are
    handed to :func:`solve_exhaustive`; ``note`` says so.
    """
    parts = _tetrad_parts(inst)
    if parts is None:
        res = solve_exhaustive(inst)
        return SolveResult(
            res.best, res.feasible_count, res.pfs_evaluations, res.cost_evaluations, res.elapsed,
            method="exhaustive", note="cost is not a tetrad sum; no admissible bound, fell back to exhaustive",
        )
    rules, pfs = parts
    k = len(rules)
    n = 4 * k
    check_cap(n)
    start = time.perf_counter()

    tables = [r.table() for r in rules]
    suffix_max = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix_max[i] = suffix_max[i + 1] + max(tables[i])

    incumbent: tuple[int, int] | None = None
    feasible = pfs_evals = leaves = 0

    def visit(depth: int, prefix: int, weight: int):
        nonlocal incumbent, feasible, pfs_evals, leaves
        for t in range(16):
            w = weight + tables[depth][t]
            if incumbent is not None and w + suffix_max[depth + 1] <= incumbent[1]:
                continue
            value = (prefix << 4) | t
            if depth + 1 < k:
                visit(depth + 1, value, w)
                continue
            leaves += 1
            pfs_evals += 1
            if evaluate(pfs, Assignment.from_int(value, n)):
                feasible += 1
                incumbent = (value, w)

    visit(0, 0, 0)
    elapsed = time.perf_counter() - start
    best = None if incumbent is None else (Assignment.from_int(incumbent[0], n), incumbent[1])
    return SolveResult(best, feasible, pfs_evals, leaves, elapsed, method="branch-and-bound")


def feasible_count(inst) -> int:
    inst = _as_problem(inst)
    return count_satisfying(inst.pfs, inst.n)


def pme_max(values: Sequence[int], counter: Counter | None = None) -> tuple[int, int]:
    """Largest element in one left-to-right pass; returns (1-based index, value).

    The first index wins ties.  If ``counter`` is given its ``"comparisons"``
    entry is incremented once per comparison made.
    """
    values = list(values)
    if not values:
        raise DomainError("pme_max needs a nonempty array")
    best_i, best_v = 0, values[0]
    for i in range(1, len(values)):
        if counter is not None:
            counter["comparisons"] += 1
        if values[i] > best_v:
            best_i, best_v = i, values[i]
    return best_i + 1, best_v
