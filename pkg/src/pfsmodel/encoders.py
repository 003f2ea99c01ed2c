"""Graph problems compiled into ProblemInstances, plus the semantic oracles
used to check the compiled feasibility functions.

Vertices, edges and variables are all 1-based.  Edge ``e_j`` is the j-th pair
of ``Graph.edges``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .boolean import (
    Assignment,
    BooleanFunction,
    Cnf,
    CnfForm,
    Constant,
    Cube,
    Dnf,
    DnfForm,
    Literal,
    absorb,
    as_assignment,
    index_chunks,
    negate_dnf,
)
from .errors import ArityError, CapError, DomainError, RangeError
from .model import CnfValue, CostFunction, ElementSet, PopCount, ProblemInstance

DIVERGENCE_CAP = 20


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.vertex_count < 1:
            raise DomainError("a graph needs at least one vertex")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        seen = set()
        for j, (u, v) in enumerate(edges, 1):
            if not (1 <= u <= self.vertex_count and 1 <= v <= self.vertex_count):
                raise RangeError(f"e{j} = ({u}, {v}) has a vertex outside 1..{self.vertex_count}")
            if u == v:
                raise DomainError(f"e{j} is a self-loop on v{u}")
            key = frozenset((u, v))
            if key in seen:
                raise DomainError(f"e{j} = ({u}, {v}) duplicates an earlier edge")
            seen.add(key)
        object.__setattr__(self, "edges", edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> list[int]:
        out = {b for a, b in self.edges if a == v} | {a for a, b in self.edges if b == v}
        return sorted(out)

    def incident(self, v: int) -> list[int]:
        """Indices (1-based) of the edges touching ``v``, ascending."""
        return [j for j, e in enumerate(self.edges, 1) if v in e]

    def degree(self, v: int) -> int:
        return len(self.incident(v))


# Reconstructed from the vertex/edge incidence listed for the worked examples:
# v1 touches e1, e6, e7; v4 touches e4, e5, e6; v5 touches e2, e3, e5, e7.
FIG2_GRAPH = Graph(5, ((1, 2), (2, 5), (3, 5), (3, 4), (4, 5), (1, 4), (1, 5)))


def _check_len(asg, n: int) -> Assignment:
    asg = as_assignment(asg)
    if len(asg) != n:
        raise ArityError(f"assignment of length {len(asg)}, expected {n}")
    return asg


# --------------------------------------------------------------------------
# Maximum independent set


def mis_cube(g: Graph, v: int) -> Cube:
    """x_v and the negation of every neighbour of v."""
    return Cube((Literal(v),) + tuple(Literal(u, True) for u in g.neighbors(v)))


def encode_mis(g: Graph) -> ProblemInstance:
    dnf = Dnf(tuple(mis_cube(g, v) for v in range(1, g.vertex_count + 1)))
    return ProblemInstance(
        ElementSet.numbered("v", g.vertex_count),
        DnfForm(dnf, g.vertex_count),
        PopCount(),
        kind="mis",
        source=g,
    )


def mis_oracle(g: Graph, asg) -> bool:
    """True iff no edge has both endpoints selected."""
    asg = _check_len(asg, g.vertex_count)
    return not any(asg.var(u) and asg.var(v) for u, v in g.edges)


# --------------------------------------------------------------------------
# Hamiltonian cycle


def triple_cubes(g: Graph) -> Dnf:
    """One positive cube per 3-subset of the edges at each vertex of degree >= 3."""
    cubes = []
    for v in range(1, g.vertex_count + 1):
        for trio in combinations(g.incident(v), 3):
            cubes.append(Cube.of(*trio))
    return absorb(Dnf(tuple(cubes)))


def hamiltonian_oracle(g: Graph, asg) -> bool:
    """True iff the selected edges form one simple cycle through every vertex."""
    asg = _check_len(asg, g.edge_count)
    chosen = [e for e, b in zip(g.edges, asg) if b]
    if len(chosen) != g.vertex_count:
        return False
    adj: dict[int, list[int]] = {v: [] for v in range(1, g.vertex_count + 1)}
    for u, v in chosen:
        adj[u].append(v)
        adj[v].append(u)
    if any(len(nb) != 2 for nb in adj.values()):
        return False
    seen = {1}
    stack = [1]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.vertex_count


@dataclass(frozen=True)
class HamiltonianCycleCost(CostFunction):
    """1 if the selected edges are a Hamiltonian cycle of ``graph``, else 0."""

    graph: Graph

    @property
    def arity(self) -> int:
        return self.graph.edge_count

    def __call__(self, asg):
        return int(hamiltonian_oracle(self.graph, asg))


def encode_hamiltonian(g: Graph) -> ProblemInstance:
    if g.edge_count == 0:
        raise DomainError("the Hamiltonian encoding needs at least one edge")
    # Large graphs are still encodable; the solvers enforce the enumeration cap.
    pfs = CnfForm(negate_dnf(triple_cubes(g)), g.edge_count)
    return ProblemInstance(
        ElementSet.numbered("e", g.edge_count), pfs, HamiltonianCycleCost(g),
        kind="hamiltonian", source=g,
    )


# --------------------------------------------------------------------------
# Satisfiability


def encode_sat(formula: Cnf, n: int) -> ProblemInstance:
    if formula.max_var > n:
        raise RangeError(f"formula uses x{formula.max_var} but n = {n}")
    return ProblemInstance(
        ElementSet.numbered("x", n), Constant(True, n), CnfValue(formula, n),
        kind="sat", source=formula,
    )


# --------------------------------------------------------------------------
# Divergence between a compiled function and the predicate it encodes


def _bits(idx: np.ndarray, n: int, var: int) -> np.ndarray:
    return ((idx >> (n - var)) & 1).astype(np.int64)


def _independent_vec(g: Graph, idx: np.ndarray) -> np.ndarray:
    n = g.vertex_count
    ok = np.ones(idx.shape, dtype=bool)
    for u, v in g.edges:
        ok &= (_bits(idx, n, u) & _bits(idx, n, v)) == 0
    return ok


def _max_degree_two_vec(g: Graph, idx: np.ndarray) -> np.ndarray:
    m = g.edge_count
    ok = np.ones(idx.shape, dtype=bool)
    for v in range(1, g.vertex_count + 1):
        deg = np.zeros(idx.shape, dtype=np.int64)
        for j in g.incident(v):
            deg += _bits(idx, m, j)
        ok &= deg <= 2
    return ok


ORACLE_KINDS = {
    "mis": (lambda g: g.vertex_count, _independent_vec),
    "hamiltonian-degree": (lambda g: g.edge_count, _max_degree_two_vec),
}


def divergence_report(pfs: BooleanFunction, oracle_kind: str, g: Graph) -> list[Assignment]:
    """Every assignment, ascending, where ``pfs`` and the named predicate disagree.

    ``mis`` compares against pairwise non-adjacency of the selected vertices;
    ``hamiltonian-degree`` against "no vertex has more than two selected edges".
    """
    if oracle_kind not in ORACLE_KINDS:
        raise DomainError(f"unknown oracle kind {oracle_kind!r}; choose from {sorted(ORACLE_KINDS)}")
    arity_of, predicate = ORACLE_KINDS[oracle_kind]
    n = arity_of(g)
    if pfs.arity is not None and pfs.arity != n:
        raise ArityError(f"pfs arity {pfs.arity} does not match {n} for {oracle_kind}")
    if n > DIVERGENCE_CAP:
        raise CapError(f"divergence report limited to {DIVERGENCE_CAP} variables, got {n}")
    out = []
    for idx in index_chunks(n):
        diff = pfs.evaluate_indices(idx, n) != predicate(g, idx)
        out.extend(Assignment.from_int(int(i), n) for i in idx[diff])
    return out
