"""Combinatorial problems as (elements, feasibility function, cost) triples,
with exhaustive solvers and brute-force oracles for checking encodings."""

from .boolean import (
    FALSE,
    TRUE,
    Assignment,
    BooleanFunction,
    Clause,
    Cnf,
    CnfForm,
    Constant,
    Cube,
    Dnf,
    DnfForm,
    ExprForm,
    Literal,
    TableForm,
    TruthTable,
    absorb,
    count_satisfying,
    equivalence_diff,
    evaluate,
    is_balanced,
    negate_dnf,
    to_truth_table,
)
from .encoders import FIG2_GRAPH, Graph, encode_hamiltonian, encode_mis, encode_sat
from .heavy_tuple import PAPER_RULE, HeavyTupleInstance, TetradWeightRule, generate_instance
from .model import ElementSet, ProblemInstance
from .solvers import SolveResult, feasible_count, solve_branch_and_bound, solve_exhaustive

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "BooleanFunction",
    "Clause",
    "Cnf",
    "CnfForm",
    "Constant",
    "Cube",
    "Dnf",
    "DnfForm",
    "ElementSet",
    "ExprForm",
    "FALSE",
    "FIG2_GRAPH",
    "Graph",
    "HeavyTupleInstance",
    "Literal",
    "PAPER_RULE",
    "ProblemInstance",
    "SolveResult",
    "TRUE",
    "TableForm",
    "TetradWeightRule",
    "TruthTable",
    "absorb",
    "count_satisfying",
    "encode_hamiltonian",
    "encode_mis",
    "encode_sat",
    "equivalence_diff",
    "evaluate",
    "feasible_count",
    "generate_instance",
    "is_balanced",
    "negate_dnf",
    "solve_branch_and_bound",
    "solve_exhaustive",
    "to_truth_table",
]
