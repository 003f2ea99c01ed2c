from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pfsmodel.boolean import Assignment, Cnf, Constant
from pfsmodel.encoders import FIG2_GRAPH, encode_hamiltonian, encode_mis, encode_sat
from pfsmodel.errors import CapError, DomainError
from pfsmodel.heavy_tuple import (
    PAPER_RULE,
    HeavyTupleInstance,
    generate_instance,
    paper_instance,
    paper_pfs_formula,
)
from pfsmodel.model import ElementSet, PopCount, ProblemInstance, evaluate_cost, is_feasible
from pfsmodel.solvers import feasible_count, pme_max, solve_branch_and_bound, solve_exhaustive


def reference_solve(inst):
    """Plain loop over every assignment with the scalar paths."""
    if isinstance(inst, HeavyTupleInstance):
        inst = inst.to_problem()
    best = None
    count = 0
    for value in range(1 << inst.n):
        asg = Assignment.from_int(value, inst.n)
        if not is_feasible(inst, asg):
            continue
        count += 1
        cost = evaluate_cost(inst, asg)
        if best is None or cost > best[1]:
            best = (asg, cost)
    return best, count


def test_paper_instance_table_pfs():
    res = solve_exhaustive(paper_instance())
    assert res.best == (Assignment.from_str("0101"), 33)
    assert res.feasible_count == 8
    assert reference_solve(paper_instance()) == (res.best, 8)


def test_paper_instance_formula_pfs():
    res = solve_exhaustive(paper_instance(paper_pfs_formula()))
    assert res.best == (Assignment.from_str("1101"), 35)
    assert res.feasible_count == 8


def test_fig2_mis_encoding_optimum():
    # Each cube only constrains the neighbours of its own vertex, so {v2, v3, v4}
    # passes via v2 although v3 and v4 are adjacent. The optimum exceeds the MIS size.
    inst = encode_mis(FIG2_GRAPH)
    res = solve_exhaustive(inst)
    assert res.best == (Assignment.from_str("01110"), 3)
    assert reference_solve(inst)[0] == res.best


def test_fig2_hamiltonian_solve():
    res = solve_exhaustive(encode_hamiltonian(FIG2_GRAPH))
    assert res.best == (Assignment.from_str("1111010"), 1)


def test_sat_solve():
    inst = encode_sat(Cnf.of([1, -2], [2, 3], [-1, -3]), 3)
    res = solve_exhaustive(inst)
    assert res.feasible_count == 8
    assert res.best == (Assignment.from_str("001"), 1)
    assert reference_solve(inst)[0] == res.best


def test_no_feasible_assignment():
    inst = HeavyTupleInstance(1, (PAPER_RULE,), Constant(False, 4))
    for solve in (solve_exhaustive, solve_branch_and_bound):
        res = solve(inst)
        assert res.best is None and res.feasible_count == 0


def test_exhaustive_counters():
    res = solve_exhaustive(encode_mis(FIG2_GRAPH))
    assert res.pfs_evaluations == 32
    assert res.cost_evaluations == res.feasible_count


@pytest.mark.parametrize("workers, chunk_bits", [(1, 20), (1, 3), (4, 3), (3, 1)])
def test_exhaustive_independent_of_partitioning(workers, chunk_bits):
    inst = generate_instance(2, 17)
    base = solve_exhaustive(inst)
    res = solve_exhaustive(inst, workers=workers, chunk_bits=chunk_bits)
    assert (res.best, res.feasible_count, res.pfs_evaluations, res.cost_evaluations) == (
        base.best, base.feasible_count, base.pfs_evaluations, base.cost_evaluations,
    )


def test_exhaustive_tie_break_smallest_integer():
    inst = ProblemInstance(ElementSet.numbered("x", 3), Constant(True, 3), PopCount())
    tie = ProblemInstance(inst.elements, inst.pfs, _Flat())
    assert solve_exhaustive(tie).best == (Assignment.from_str("000"), 7)


class _Flat(PopCount):
    def __call__(self, asg):
        return 7

    def batch(self, idx, n):
        return super().batch(idx, n) * 0 + 7


def test_cap():
    big = ProblemInstance(ElementSet.numbered("x", 25), Constant(True, 25), PopCount())
    with pytest.raises(CapError):
        solve_exhaustive(big)
    with pytest.raises(CapError):
        feasible_count(big)


def test_bnb_paper_instance():
    res = solve_branch_and_bound(paper_instance())
    assert res.best == (Assignment.from_str("0101"), 33)
    assert res.pfs_evaluations <= 16


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(0, 2**32))
def test_bnb_matches_exhaustive(k, seed):
    inst = generate_instance(k, seed)
    bnb = solve_branch_and_bound(inst)
    ex = solve_exhaustive(inst)
    assert bnb.best == ex.best
    assert bnb.pfs_evaluations <= ex.pfs_evaluations


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 2), st.integers(0, 2**32), st.integers(-5, 5))
def test_bnb_matches_exhaustive_with_negative_and_tied_weights(k, seed, lo):
    inst = generate_instance(k, seed, (lo, lo + 2))
    assert solve_branch_and_bound(inst).best == solve_exhaustive(inst).best


def test_bnb_falls_back_without_tetrad_cost():
    res = solve_branch_and_bound(encode_mis(FIG2_GRAPH))
    assert res.method == "exhaustive" and res.note
    assert res.best == solve_exhaustive(encode_mis(FIG2_GRAPH)).best


def test_feasible_count_examples():
    assert feasible_count(generate_instance(2, 3)) == 128
    assert feasible_count(encode_sat(Cnf.of([1]), 5)) == 32
    assert feasible_count(paper_instance()) == 8


def test_doubling_law():
    small = solve_exhaustive(generate_instance(2, 5))
    large = solve_exhaustive(generate_instance(3, 5))
    assert large.pfs_evaluations == 16 * small.pfs_evaluations


def test_pme_max():
    assert pme_max([17, 30, 23, 37]) == (4, 37)
    assert pme_max([5]) == (1, 5)
    assert pme_max([7, 7, 7]) == (1, 7)
    with pytest.raises(DomainError):
        pme_max([])


@given(st.lists(st.integers(-100, 100), min_size=1, max_size=50))
def test_pme_single_pass(values):
    counter = Counter()
    index, value = pme_max(values, counter)
    assert counter["comparisons"] == len(values) - 1
    assert value == max(values)
    assert index == values.index(value) + 1
