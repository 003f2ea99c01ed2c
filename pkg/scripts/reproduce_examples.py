"""Print the worked examples: tetrad table, table/formula disagreement,
Heavy Tuple optima, the Fig-2 encodings and their divergence reports."""

from pfsmodel.cli import paper_table_text
from pfsmodel.encoders import FIG2_GRAPH, divergence_report, encode_hamiltonian, encode_mis, triple_cubes
from pfsmodel.heavy_tuple import paper_divergence, paper_instance, paper_pfs_formula
from pfsmodel.solvers import solve_exhaustive


def show(label, res):
    asg, cost = res.best
    print(f"{label:<28} best {asg} cost {cost}  feasible {res.feasible_count}/{res.pfs_evaluations}")


def main():
    print(paper_table_text())
    print("table vs formula differ at:", " ".join(map(str, paper_divergence())))
    show("heavy tuple (table f)", solve_exhaustive(paper_instance()))
    show("heavy tuple (formula f)", solve_exhaustive(paper_instance(paper_pfs_formula())))
    print()

    mis = encode_mis(FIG2_GRAPH)
    print("MIS DNF:", mis.pfs.dnf)
    show("MIS encoding", solve_exhaustive(mis))
    print("MIS divergence:", " ".join(map(str, divergence_report(mis.pfs, "mis", FIG2_GRAPH))))
    print()

    hc = encode_hamiltonian(FIG2_GRAPH)
    print("inverse PFS:", triple_cubes(FIG2_GRAPH))
    print("PFS:", hc.pfs.cnf)
    show("Hamiltonian encoding", solve_exhaustive(hc))
    print("degree divergence:", divergence_report(hc.pfs, "hamiltonian-degree", FIG2_GRAPH) or "none")


if __name__ == "__main__":
    main()
