"""Command-line interface: ``pfsmodel <subcommand> ...`` (or ``python -m pfsmodel``)."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .boolean import Assignment, as_assignment
from .encoders import divergence_report, encode_hamiltonian, encode_mis, encode_sat, hamiltonian_oracle, mis_oracle
from .errors import PfsError
from .heavy_tuple import PAPER_RULE, HeavyTupleInstance, generate_instance, paper_pfs_table
from .model import evaluate_cost, is_feasible
from .solvers import SolveResult, solve_branch_and_bound, solve_exhaustive


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise PfsError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, path: str | None, out) -> None:
    if path is None or path == "-":
        out.write(text)
    else:
        Path(path).write_text(text)


def _span(text: str) -> range:
    """``"a:b"`` (inclusive) or a single integer."""
    try:
        if ":" in text:
            lo, hi = (int(p) for p in text.split(":", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A:B, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def paper_table_text() -> str:
    """The 16-row tetrad table: tuple, w1..w4, total weight, feasibility bit."""
    f = paper_pfs_table()
    lines = ["x1x2x3x4 w1 w2 w3 w4 W f"]
    for t in range(16):
        asg = Assignment.from_int(t, 4)
        w = PAPER_RULE.summands(asg)
        lines.append(f"{asg} {w[0]} {w[1]} {w[2]} {w[3]} {sum(w)} {int(f.evaluate(asg))}")
    return "\n".join(lines) + "\n"


def _solve(inst, method: str) -> SolveResult:
    if method == "bnb":
        return solve_branch_and_bound(inst)
    return solve_exhaustive(inst)


def _result_text(res: SolveResult, n: int, fmt: str) -> str:
    best = "none" if res.best is None else str(res.best[0])
    cost = "" if res.best is None else str(res.best[1])
    elapsed = f"{res.elapsed * 1000:.3f}"
    if fmt == "csv":
        header = "n,best,cost,feasible_count,pfs_evaluations,cost_evaluations,elapsed_ms"
        row = f"{n},{best},{cost},{res.feasible_count},{res.pfs_evaluations},{res.cost_evaluations},{elapsed}"
        return header + "\n" + row + "\n"
    lines = [
        f"method {res.method}",
        f"best {best}",
        f"cost {cost or 'none'}",
        f"feasible_count {res.feasible_count}",
        f"pfs_evaluations {res.pfs_evaluations}",
        f"cost_evaluations {res.cost_evaluations}",
        f"elapsed_ms {elapsed}",
    ]
    if res.note:
        lines.append(f"note {res.note}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# Subcommands


def cmd_encode_mis(args, out):
    _emit(formats.write_instance(encode_mis(formats.read_graph(_read(args.graph)))), args.output, out)


def cmd_encode_hc(args, out):
    _emit(formats.write_instance(encode_hamiltonian(formats.read_graph(_read(args.graph)))), args.output, out)


def cmd_encode_sat(args, out):
    cnf, n = formats.read_cnf(_read(args.cnf))
    _emit(formats.write_instance(encode_sat(cnf, n)), args.output, out)


def cmd_ht_gen(args, out):
    inst = generate_instance(args.k, args.seed, (args.lo, args.hi))
    _emit(formats.write_instance(inst), args.output, out)


def cmd_ht_table(args, out):
    out.write(paper_table_text())


def cmd_solve(args, out):
    inst = formats.read_instance(_read(args.instance))
    res = _solve(inst, args.method)
    out.write(_result_text(res, inst.n, args.format))


def cmd_verify(args, out):
    inst = formats.read_instance(_read(args.instance))
    asg = as_assignment(args.assignment)
    problem = inst.to_problem() if isinstance(inst, HeavyTupleInstance) else inst
    out.write(f"feasible {int(is_feasible(problem, asg))}\n")
    out.write(f"cost {evaluate_cost(problem, asg)}\n")
    if problem.kind == "mis":
        out.write(f"oracle independent {int(mis_oracle(problem.source, asg))}\n")
    elif problem.kind == "hamiltonian":
        out.write(f"oracle hamiltonian-cycle {int(hamiltonian_oracle(problem.source, asg))}\n")


def cmd_diverge(args, out):
    g = formats.read_graph(_read(args.graph))
    if args.instance:
        inst = formats.read_instance(_read(args.instance))
        if isinstance(inst, HeavyTupleInstance):
            raise PfsError("divergence reports apply to graph instances only")
        pfs = inst.pfs
    elif args.kind == "mis":
        pfs = encode_mis(g).pfs
    else:
        pfs = encode_hamiltonian(g).pfs
    for asg in divergence_report(pfs, args.kind, g):
        out.write(f"{asg}\n")


def cmd_bench(args, out):
    rows = []
    for k in args.k:
        for seed in args.seeds:
            inst = generate_instance(k, seed, (args.lo, args.hi))
            res = _solve(inst, args.method)
            if res.best is None:
                raise PfsError(f"k={k} seed={seed}: no feasible assignment")
            rows.append(formats.BenchRow(
                inst.n, seed, res.feasible_count, res.pfs_evaluations, res.cost_evaluations,
                res.best[1], res.elapsed * 1000,
            ))
    formats.write_bench_csv(rows, out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pfsmodel",
        description="Encode, solve and verify combinatorial problems given as (elements, feasibility function, cost).",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    for name, func, src, help_ in (
        ("encode-mis", cmd_encode_mis, "graph", "graph file -> maximum independent set instance"),
        ("encode-hc", cmd_encode_hc, "graph", "graph file -> Hamiltonian cycle instance"),
        ("encode-sat", cmd_encode_sat, "cnf", "DIMACS CNF file -> satisfiability instance"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument(src, help="input file, or - for stdin")
        p.add_argument("-o", "--output", help="output file (default stdout)")
        p.set_defaults(func=func)

    p = sub.add_parser("ht-gen", help="generate a random Heavy Tuple instance")
    p.add_argument("--k", type=int, required=True, help="number of tetrads (n = 4k)")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--lo", type=int, default=1, help="smallest weight (default 1)")
    p.add_argument("--hi", type=int, default=20, help="largest weight (default 20)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_ht_gen)

    p = sub.add_parser("ht-table", help="print the 16-row table of the 4-variable example")
    p.set_defaults(func=cmd_ht_table)

    p = sub.add_parser("solve", help="maximise cost over feasible assignments")
    p.add_argument("instance")
    p.add_argument("--method", choices=["exhaustive", "bnb"], default="exhaustive")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check one assignment against an instance")
    p.add_argument("instance")
    p.add_argument("assignment", help="bit string, x1 first")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("diverge", help="list assignments where a feasibility function and its predicate disagree")
    p.add_argument("graph")
    p.add_argument("--kind", choices=["mis", "hamiltonian-degree"], required=True)
    p.add_argument("--instance", help="instance whose pfs to check (default: encode the graph)")
    p.set_defaults(func=cmd_diverge)

    p = sub.add_parser("bench", help="solve generated Heavy Tuple instances, CSV on stdout")
    p.add_argument("--seeds", type=_span, default=range(0, 5), help="N or A:B inclusive (default 0:4)")
    p.add_argument("--k", type=_span, default=range(1, 3), help="N or A:B inclusive (default 1:2)")
    p.add_argument("--lo", type=int, default=1)
    p.add_argument("--hi", type=int, default=20)
    p.add_argument("--method", choices=["exhaustive", "bnb"], default="exhaustive")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args, out)
    except PfsError as exc:
        print(f"pfsmodel {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
