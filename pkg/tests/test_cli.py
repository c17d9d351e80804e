import csv
import io
import json
import subprocess
import sys

import pytest
from hypothesis import given

from kchordal import graph as G
from kchordal.cli import BENCH_FIELDS, main
from kchordal.formats import GenSpec, ParseError, generate, parse, parse_bip, parse_edgelist, render

from test_graph import bipartite_graphs


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_parse_bip_examples():
    assert parse_bip("b 2 2 4\ne 1 1\ne 1 2\ne 2 1\ne 2 2\n") == G.cycle(4)
    b = parse_bip("b 1 0 0")
    assert (b.x_count, b.y_count, b.edge_count) == (1, 0, 0)
    assert parse_bip("# comment\nb 1 1 1\n# between\ne 1 1\n").edge_count == 1


@pytest.mark.parametrize(
    "text, line",
    [
        ("b 2 2 1\ne 1  1\n", 2),
        ("b 2 2 1\ne 3 1\n", 2),
        ("b 2 2 2\ne 1 1\ne 1 1\n", 3),
        ("x 2 2 0\n", 1),
        ("b 2 2 0\n\n", 2),
        ("b 2 2 1\ne 0 1\n", 2),
        ("b 2 2 1\ne 1 1 \n", 2),
    ],
)
def test_parse_bip_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_bip(text)
    assert exc.value.line == line


def test_parse_bip_count_mismatch():
    with pytest.raises(ParseError, match="declares 2 edges"):
        parse_bip("b 2 2 2\ne 1 1\n")
    with pytest.raises(ParseError, match="missing header"):
        parse_bip("# nothing\n")


def test_parse_edgelist():
    b = parse_edgelist("1 2\n2 3\n3 4\n4 1\n")
    assert (b.x_count, b.y_count, b.edge_count) == (2, 2, 4)
    with pytest.raises(ParseError) as exc:
        parse_edgelist("1 2\n2 3\n3 1\n")
    assert exc.value.odd_cycle == [1, 2, 3]
    assert "odd cycle [1, 2, 3]" in str(exc.value)
    with pytest.raises(ParseError) as exc:
        parse_edgelist("1 2\n2 x\n")
    assert exc.value.line == 2


def test_edgelist_numbering_follows_file_order():
    b = parse_edgelist("10 7\n7 3\n")
    # 10 -> id 0 (X), 7 -> id 1 (Y), 3 -> id 2 (X)
    assert (b.x_count, b.y_count) == (2, 1)
    assert b.edges == {(0, 0), (1, 0)}


@given(bipartite_graphs())
def test_render_parse_round_trip(b):
    assert parse_bip(render(b, comment="round trip")) == b


def test_generate_examples():
    assert generate(GenSpec("cycle", (6,))) == G.cycle(6)
    k33 = generate(GenSpec("complete-bipartite", (3, 3)))
    assert k33.edge_count == 9
    dom = generate(GenSpec("domino"))
    assert (dom.vertex_count, dom.edge_count) == (6, 7)
    with pytest.raises(G.GraphError):
        generate(GenSpec("cycle", (7,)))
    with pytest.raises(G.GraphError):
        generate(GenSpec("random", (3, 3), p=(3, 2)))


def test_random_generator_is_deterministic():
    a = generate(GenSpec("random", (6, 7), seed=42, p=(1, 2)))
    b = generate(GenSpec("random", (6, 7), seed=42, p=(1, 2)))
    c = generate(GenSpec("random", (6, 7), seed=43, p=(1, 2)))
    assert a == b and a != c
    assert generate(GenSpec("random", (4, 4), p=(0, 1))).edge_count == 0
    assert generate(GenSpec("random", (4, 4), p=(1, 1))).edge_count == 16


def test_random_generator_frozen_fixture():
    # pins the documented Philox stream so fixtures stay portable
    b = generate(GenSpec("random", (3, 3), seed=7, p=(1, 2)))
    assert render(b) == "b 3 3 7\ne 1 1\ne 1 2\ne 2 1\ne 2 2\ne 2 3\ne 3 2\ne 3 3\n"


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def domino_file(tmp_path):
    return write(tmp_path, "domino.bip", render(G.domino()))


def test_check_domino_k2(domino_file, capsys):
    code, out, _ = run(["check", "--k", "2", domino_file], capsys)
    assert code == 1
    assert out.splitlines()[0] == "RESULT k-chordal-bipartite k=2 false"


def test_check_k0(domino_file, capsys):
    code, out, _ = run(["check", "--k", "0", domino_file], capsys)
    assert code == 0 and out.splitlines()[0].endswith("true")


def test_check_oracle_agrees(tmp_path, capsys):
    f = write(tmp_path, "c4.bip", render(G.cycle(4)))
    code, out, _ = run(["check", "--k", "2", "--oracle", f], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "RESULT k-chordal-bipartite k=2 true"
    assert lines[-1] == "ORACLE k-chordal-bipartite k=2 true agree"


def test_check_json_record(domino_file, capsys):
    code, out, _ = run(["check", "--k", "2", "--json", domino_file], capsys)
    assert code == 1
    rec = json.loads(out)
    assert list(rec) == ["property", "k", "verdict", "s", "t", "subchecks", "elapsed_ns", "witness"]
    assert rec["verdict"] is False and (rec["s"], rec["t"]) == (6, 7)
    assert rec["witness"]["kind"] == "deleted-edge-trail"
    assert rec["witness"]["deleted_edges"] == [[2, 2]]


def test_check_witness_text(domino_file, capsys):
    code, out, _ = run(["check", "--k", "2", "--witness", domino_file], capsys)
    assert code == 1
    assert "WITNESS kind=deleted-edge-trail deleted=x2-y2" in out


def test_check_chordal_bipartite_property_name(tmp_path, capsys):
    f = write(tmp_path, "c6.bip", render(G.cycle(6)))
    code, out, _ = run(["check", "--k", "1", "--threads", "2", f], capsys)
    assert code == 1 and out.startswith("RESULT chordal-bipartite k=1 false")


def test_check_edgelist_input(tmp_path, capsys):
    f = write(tmp_path, "sq.txt", "1 2\n2 3\n3 4\n4 1\n")
    code, out, _ = run(["check", "--k", "2", f], capsys)
    assert code == 0
    f = write(tmp_path, "tri.txt", "1 2\n2 3\n3 1\n")
    code, _, err = run(["check", "--k", "2", f], capsys)
    assert code == 2 and "odd cycle [1, 2, 3]" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--k", "2"],
        ["check", "--k", "-1", "x.bip"],
        ["check", "--k", "2", "/nonexistent/file.bip"],
        ["frobnicate"],
        ["bench", "--family", "cycle", "--n", "6-12", "--k", "1"],
        ["gen", "cycle", "5"],
    ],
)
def test_operational_errors_exit_2(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2 and err


def test_bad_file_exit_2(tmp_path, capsys):
    f = write(tmp_path, "bad.bip", "b 2 2 3\ne 1 1\n")
    code, _, err = run(["check", "--k", "1", f], capsys)
    assert code == 2 and "parse error" in err


def test_gen_writes_file(tmp_path, capsys):
    out = tmp_path / "k33.bip"
    code, _, _ = run(["gen", "complete-bipartite", "3", "3", "-o", str(out)], capsys)
    assert code == 0
    assert parse(out) == G.complete_bipartite(3, 3)
    code, text, _ = run(["gen", "random", "3", "3", "--seed", "7", "--p", "1/2"], capsys)
    assert code == 0 and parse_bip(text) == generate(GenSpec("random", (3, 3), seed=7))


def bench_csv(argv, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert out.splitlines()[0] == ",".join(BENCH_FIELDS)
    return rows


def test_bench_complete_bipartite(capsys):
    rows = bench_csv(["bench", "--family", "complete-bipartite", "--n", "4..8", "--k", "2"], capsys)
    assert len(rows) == 5
    for row, n in zip(rows, range(4, 9)):
        assert (int(row["s"]), int(row["t"])) == (2 * n, n * n)


def test_bench_cycles_fail(capsys):
    rows = bench_csv(["bench", "--family", "cycle", "--n", "6..12", "--k", "1"], capsys)
    assert [int(r["s"]) for r in rows] == [6, 8, 10, 12]
    assert all(r["verdict"] == "false" for r in rows)


def test_bench_empty_range(capsys):
    rows = bench_csv(["bench", "--family", "star", "--n", "5..4", "--k", "2"], capsys)
    assert rows == []


def test_bench_both_backends_json(capsys):
    code, out, _ = run(
        ["bench", "--family", "random", "--n", "3..4", "--k", "2", "--backend", "both", "--json"], capsys
    )
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 4
    by_n = {}
    for r in rows:
        by_n.setdefault(r["n"], set()).add((r["verdict"], r["subchecks"]))
    assert all(len(v) == 1 for v in by_n.values())


def test_module_entry_point(tmp_path):
    f = write(tmp_path, "c4.bip", render(G.cycle(4)))
    proc = subprocess.run(
        [sys.executable, "-m", "kchordal", "check", "--k", "1", f], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("RESULT chordal-bipartite k=1 true")
