"""Combinatorial problems as (elements, feasibility function, cost).

A subset S of the element set is carried as an :class:`Assignment` whose bit i
is 1 iff the i-th element is in S.  The feasibility function (the "pointer of
feasible solutions") is any :class:`BooleanFunction` of matching arity; the
cost is an integer-valued function of the same assignment.  Optimisation is
always maximisation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

import numpy as np

from .boolean import Assignment, BooleanFunction, Cnf, CnfForm, as_assignment, evaluate
from .errors import ArityError, DomainError, LabelError


@dataclass(frozen=True)
class ElementSet:
    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        if not labels:
            raise DomainError("an element set needs at least one element")
        if len(set(labels)) != len(labels):
            raise DomainError("element labels must be unique")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def numbered(cls, prefix: str, n: int) -> ElementSet:
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)))

    def __len__(self):
        return len(self.labels)


def subset_to_assignment(elements: ElementSet, subset: Iterable[str]) -> Assignment:
    subset = set(subset)
    unknown = subset - set(elements.labels)
    if unknown:
        raise LabelError(f"unknown labels: {sorted(unknown)}")
    return Assignment(tuple(int(a in subset) for a in elements.labels))


def assignment_to_subset(elements: ElementSet, asg) -> frozenset[str]:
    asg = as_assignment(asg)
    if len(asg) != len(elements):
        raise ArityError(f"assignment of length {len(asg)} for {len(elements)} elements")
    return frozenset(a for a, b in zip(elements.labels, asg) if b)


# --------------------------------------------------------------------------
# Cost functions
#
# Each cost is callable on one Assignment and also offers ``batch`` over a
# numpy array of assignment integers, returning int64 costs.


class CostFunction:
    def __call__(self, asg: Assignment) -> int:
        raise NotImplementedError

    def batch(self, idx: np.ndarray, n: int) -> np.ndarray:
        return np.fromiter(
            (self(Assignment.from_int(int(i), n)) for i in idx), dtype=np.int64, count=len(idx)
        )


@dataclass(frozen=True)
class PopCount(CostFunction):
    """Number of selected elements."""

    def __call__(self, asg):
        return asg.popcount()

    def batch(self, idx, n):
        out = np.zeros(idx.shape, dtype=np.int64)
        for shift in range(n):
            out += (idx >> shift) & 1
        return out


@dataclass(frozen=True)
class CnfValue(CostFunction):
    """0/1 value of a CNF formula."""

    cnf: Cnf
    arity: int

    def __call__(self, asg):
        return int(evaluate(CnfForm(self.cnf, self.arity), asg))

    def batch(self, idx, n):
        return CnfForm(self.cnf, self.arity).evaluate_indices(idx, n).astype(np.int64)


@dataclass(frozen=True)
class OracleCost(CostFunction):
    """Integer cost computed by an arbitrary procedure."""

    name: str
    func: Callable[[Assignment], int] = field(compare=False)

    def __call__(self, asg):
        return int(self.func(asg))


@dataclass(frozen=True)
class ProblemInstance:
    """``kind`` and ``source`` record where the instance came from (e.g. the
    graph an encoder compiled); they do not affect solving."""

    elements: ElementSet
    pfs: BooleanFunction
    cost: CostFunction
    kind: str = "custom"
    source: Any = None

    def __post_init__(self):
        n = len(self.elements)
        if self.pfs.arity is not None and self.pfs.arity != n:
            raise ArityError(f"pfs arity {self.pfs.arity} does not match {n} elements")
        arity = getattr(self.cost, "arity", None)
        if arity is not None and arity != n:
            raise ArityError(f"cost arity {arity} does not match {n} elements")

    @property
    def n(self) -> int:
        return len(self.elements)


def _checked(inst: ProblemInstance, asg) -> Assignment:
    asg = as_assignment(asg)
    if len(asg) != inst.n:
        raise ArityError(f"assignment of length {len(asg)} for an instance with n = {inst.n}")
    return asg


def is_feasible(inst: ProblemInstance, asg) -> bool:
    return evaluate(inst.pfs, _checked(inst, asg))


def evaluate_cost(inst: ProblemInstance, asg) -> int:
    return int(inst.cost(_checked(inst, asg)))


@dataclass(frozen=True)
class Solution:
    assignment: Assignment
    cost: int
    feasible: bool

    @classmethod
    def of(cls, inst: ProblemInstance, asg) -> Solution:
        asg = _checked(inst, asg)
        return cls(asg, evaluate_cost(inst, asg), is_feasible(inst, asg))
