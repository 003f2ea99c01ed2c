import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pfsmodel.boolean import Cnf, TableForm, TruthTable
from pfsmodel.encoders import FIG2_GRAPH, Graph, encode_hamiltonian, encode_mis, encode_sat
from pfsmodel.errors import ParseError, SchemaError
from pfsmodel.formats import (
    BENCH_HEADER,
    BenchRow,
    read_bench_csv,
    read_cnf,
    read_graph,
    read_instance,
    table_from_hex,
    table_to_hex,
    write_bench_csv,
    write_cnf,
    write_graph,
    write_instance,
)
from pfsmodel.heavy_tuple import generate_instance, paper_instance, paper_pfs_formula

from conftest import FIXTURES
from test_encoders import graphs

FIG2_TEXT = "p graph 5 7\ne 1 2\ne 2 5\ne 3 5\ne 3 4\ne 4 5\ne 1 4\ne 1 5\n"


# --- graphs ------------------------------------------------------------------


def test_read_graph_fig2():
    assert read_graph(FIG2_TEXT) == FIG2_GRAPH
    assert read_graph((FIXTURES / "fig2.graph").read_text()) == FIG2_GRAPH


def test_read_graph_isolated_vertex():
    assert read_graph("p graph 1 0") == Graph(1)


@pytest.mark.parametrize(
    "text, line",
    [
        ("p graph 2 1\ne 1 1\n", 2),
        ("p graph 3 2\ne 1 2\ne 2 1\n", 3),
        ("p graph 3 1\ne 1 4\n", 2),
        ("p graph 3 1\nx 1 2\n", 2),
        ("e 1 2\n", 1),
        ("p graph 3 1\ne 1 two\n", 2),
    ],
)
def test_read_graph_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        read_graph(text)
    assert info.value.line == line


def test_read_graph_count_mismatch():
    with pytest.raises(ParseError):
        read_graph("p graph 3 2\ne 1 2\n")


@given(graphs())
def test_graph_roundtrip(g):
    assert read_graph(write_graph(g)) == g


def test_graph_write_is_canonical_for_fixture():
    text = FIG2_TEXT
    assert write_graph(read_graph(text)) == text


# --- CNF ---------------------------------------------------------------------


def test_read_cnf_examples():
    assert read_cnf("p cnf 2 1\n1 -2 0\n") == (Cnf.of([1, -2]), 2)
    assert read_cnf("p cnf 1 0\n") == (Cnf(), 1)


def test_read_cnf_multiline_clause_and_comments():
    text = "c hi\np cnf 3 2\n1 -2\n3 0 -1 0\n"
    assert read_cnf(text) == (Cnf.of([1, -2, 3], [-1]), 3)


@pytest.mark.parametrize("text", ["p cnf 1 1\n2 0\n", "p cnf 2 1\n1 2\n", "1 0\n", "p cnf 2 2\n1 0\n"])
def test_read_cnf_errors(text):
    with pytest.raises(ParseError):
        read_cnf(text)


def test_cnf_roundtrip_fixture():
    text = (FIXTURES / "small.cnf").read_text()
    cnf, n = read_cnf(text)
    assert read_cnf(write_cnf(cnf, n)) == (cnf, n)
    assert write_cnf(cnf, n) == "\n".join(l for l in text.splitlines() if not l.startswith("c")) + "\n"


# --- truth table hex ---------------------------------------------------------


def test_paper_table_hex():
    assert table_to_hex(TruthTable.from_ones(4, [0, 2, 4, 5, 6, 8, 12, 14])) == "ae8a"


@given(st.integers(0, 10).flatmap(lambda n: st.tuples(st.just(n), st.binary(min_size=1 << n, max_size=1 << n))))
def test_hex_roundtrip(case):
    n, raw = case
    t = TruthTable(n, bytes(b & 1 for b in raw))
    assert table_from_hex(table_to_hex(t), n) == t


def test_hex_rejects_padding_and_length():
    with pytest.raises(SchemaError):
        table_from_hex("f", 1)  # only 2 bits are real
    with pytest.raises(SchemaError):
        table_from_hex("ae8", 4)


# --- instances ---------------------------------------------------------------

FIXTURE_INSTANCES = {
    "paper_ht.json": paper_instance,
    "paper_ht_formula.json": lambda: paper_instance(paper_pfs_formula()),
    "fig2_mis.json": lambda: encode_mis(FIG2_GRAPH),
    "fig2_hc.json": lambda: encode_hamiltonian(FIG2_GRAPH),
    "small_sat.json": lambda: encode_sat(*read_cnf((FIXTURES / "small.cnf").read_text())),
    "ht_k2_seed7.json": lambda: generate_instance(2, 7),
}


@pytest.mark.parametrize("name", sorted(FIXTURE_INSTANCES))
def test_fixture_instances(name):
    text = (FIXTURES / name).read_text()
    inst = read_instance(text)
    assert inst == FIXTURE_INSTANCES[name]()
    assert write_instance(inst) == text


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(0, 2**32))
def test_heavy_tuple_roundtrip(k, seed):
    inst = generate_instance(k, seed, (-9, 30))
    assert read_instance(write_instance(inst)) == inst
    table = type(inst)(inst.k, inst.rules, TableForm(TruthTable.from_ones(inst.n, [0, 3])), None)
    assert read_instance(write_instance(table)) == table


@settings(max_examples=30, deadline=None)
@given(graphs(max_vertices=6).filter(lambda g: g.edge_count > 0))
def test_graph_instance_roundtrip(g):
    for inst in (encode_mis(g), encode_hamiltonian(g)):
        assert read_instance(write_instance(inst)) == inst


def _doc(name):
    return json.loads((FIXTURES / name).read_text())


@pytest.mark.parametrize(
    "mutate, path",
    [
        (lambda d: d.update(kind="tsp"), "kind"),
        (lambda d: d.update(extra=1), ""),
        (lambda d: d.update(cost="popcount"), "cost"),
        (lambda d: d["pfs"].update(form="bdd"), "pfs.form"),
        (lambda d: d["pfs"].update(hex="zz8a"), "pfs"),
        (lambda d: d.update(rules=[[1, 2, 3]]), "rules"),
        (lambda d: d.update(n=8), "pfs"),
        (lambda d: d.update(n=6, pfs={"form": "const", "value": True}), "n"),
        (lambda d: d.pop("seed"), ""),
    ],
)
def test_schema_errors_name_the_field(mutate, path):
    doc = _doc("paper_ht.json")
    mutate(doc)
    with pytest.raises(SchemaError) as info:
        read_instance(json.dumps(doc))
    assert info.value.path == path


def test_schema_error_in_graph_payload():
    doc = _doc("fig2_mis.json")
    doc["graph"]["edges"].append([1, 1])
    with pytest.raises(SchemaError) as info:
        read_instance(json.dumps(doc))
    assert info.value.path == "graph"


def test_schema_error_nested_expr():
    doc = _doc("ht_k2_seed7.json")
    doc["pfs"]["expr"][2] = ["nand", ["var", 1], ["var", 2]]
    with pytest.raises(SchemaError) as info:
        read_instance(json.dumps(doc))
    assert info.value.path == "pfs.expr[2]"


def test_invalid_json():
    with pytest.raises(ParseError):
        read_instance("{not json")


# --- bench CSV ---------------------------------------------------------------


def test_bench_csv_roundtrip():
    import io

    rows = [BenchRow(4, 0, 8, 16, 8, 52, 0.25), BenchRow(8, 1, 128, 256, 128, 104, 1.5)]
    buf = io.StringIO()
    write_bench_csv(rows, buf)
    text = buf.getvalue()
    assert text.splitlines()[0] == ",".join(BENCH_HEADER)
    assert BENCH_HEADER == [
        "n", "seed", "feasible_count", "pfs_evaluations", "cost_evaluations", "best_weight", "elapsed_ms",
    ]
    assert "\r" not in text and '"' not in text
    assert read_bench_csv(text) == rows
