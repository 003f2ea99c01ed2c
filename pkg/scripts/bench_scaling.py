"""Exhaustive vs branch-and-bound work on generated Heavy Tuple instances.

    python scripts/bench_scaling.py --k 1:5 --seeds 0:9 > scaling.csv

Writes one CSV row per (solver, n, seed): the bench columns plus a leading
solver column.  Pipe into pandas or a spreadsheet for plots.
"""

import argparse
import sys

from pfsmodel.cli import _span
from pfsmodel.heavy_tuple import generate_instance
from pfsmodel.solvers import solve_branch_and_bound, solve_exhaustive

SOLVERS = {"exhaustive": solve_exhaustive, "bnb": solve_branch_and_bound}


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--k", type=_span, default=_span("1:4"))
    parser.add_argument("--seeds", type=_span, default=_span("0:4"))
    parser.add_argument("--lo", type=int, default=1)
    parser.add_argument("--hi", type=int, default=20)
    args = parser.parse_args(argv)

    out = sys.stdout
    out.write("solver,n,seed,feasible_count,pfs_evaluations,cost_evaluations,best_weight,elapsed_ms\n")
    for k in args.k:
        for seed in args.seeds:
            inst = generate_instance(k, seed, (args.lo, args.hi))
            for name, solve in SOLVERS.items():
                res = solve(inst)
                out.write(
                    f"{name},{inst.n},{seed},{res.feasible_count},{res.pfs_evaluations},"
                    f"{res.cost_evaluations},{res.best_cost},{res.elapsed * 1000:.3f}\n"
                )


if __name__ == "__main__":
    main()
