import csv
import io
import json
import math
from pathlib import Path

import pytest

from conftest import small_corpus
from kmcds.cli import main
from kmcds.connectivity import is_k_connected
from kmcds.errors import InvalidInputError, ParseError
from kmcds.fixtures import FIXTURES, cycle, fixture
from kmcds.generators import gen_random_k_connected, gen_unit_disk, harary_edges
from kmcds.graph import Graph
from kmcds.graphio import emit_graph, emit_node_set, parse_graph, parse_node_set
from kmcds.report import CSV_COLUMNS

FIXTURE_DIR = Path(__file__).parent / "fixtures"


class TestParse:
    def test_example(self):
        g = parse_graph("c triangle\np 3 3\ne 0 1\ne 1 2\n\ne 0 2\n")
        assert g == Graph(3, [(0, 1), (1, 2), (0, 2)])

    def test_empty_graph(self):
        assert parse_graph("p 4 0\n").n == 4

    @pytest.mark.parametrize(
        "text,line",
        [
            ("p 3 1\ne 1 1\n", 2),
            ("p 3 2\ne 0 1\ne 1 0\n", 3),
            ("p 3 1\ne 0 3\n", 2),
            ("p 3 1\ne 0 -1\n", 2),
            ("p 3 1\ne 0 x\n", 2),
            ("e 0 1\np 3 1\n", 1),
            ("p 3 1\np 3 1\n", 2),
            ("p 3\n", 1),
            ("p 3 1\nq 0 1\n", 2),
        ],
    )
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(ParseError) as err:
            parse_graph(text)
        assert err.value.line == line

    def test_edge_count_mismatch(self):
        with pytest.raises(ParseError, match="announces 2"):
            parse_graph("p 3 2\ne 0 1\n")

    def test_missing_header(self):
        with pytest.raises(ParseError):
            parse_graph("c nothing\n")

    def test_round_trip_on_corpus(self):
        for g in small_corpus(120, seed=8, n_max=30):
            assert parse_graph(emit_graph(g, ["x"])) == g

    def test_node_sets(self):
        assert parse_node_set("3\n1  # hub\n\n# note\n0\n") == {0, 1, 3}
        assert parse_node_set(emit_node_set({5, 2})) == {2, 5}
        with pytest.raises(ParseError):
            parse_node_set("1\ntwo\n")


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_checked_in_fixtures_match_builders(name):
    assert parse_graph((FIXTURE_DIR / f"{name}.graph").read_text()) == fixture(name)


class TestGenerators:
    def test_c6(self):
        for seed in (0, 1, 99):
            assert gen_random_k_connected(6, 2, 0.0, seed) == cycle(6)

    def test_k5(self):
        for p in (0.0, 0.5):
            assert gen_random_k_connected(5, 4, p, 3) == fixture("K5")

    def test_post_check(self):
        assert is_k_connected(gen_random_k_connected(30, 3, 0.1, 7), 3)

    @pytest.mark.parametrize("n,k", [(n, k) for n in range(3, 12) for k in range(1, n)])
    def test_harary_connectivity_and_size(self, n, k):
        edges = harary_edges(n, k)
        assert len(edges) == (n - 1 if k == 1 else math.ceil(k * n / 2))
        assert is_k_connected(Graph(n, edges), k)

    def test_reproducible(self):
        assert gen_random_k_connected(40, 3, 0.2, 11) == gen_random_k_connected(40, 3, 0.2, 11)
        assert gen_random_k_connected(40, 3, 0.2, 11) != gen_random_k_connected(40, 3, 0.2, 12)
        assert gen_unit_disk(30, 0.3, 5) == gen_unit_disk(30, 0.3, 5)

    def test_errors(self):
        with pytest.raises(InvalidInputError):
            gen_random_k_connected(3, 3, 0.0, 0)
        with pytest.raises(InvalidInputError):
            gen_unit_disk(0, 0.5, 0)

    def test_unit_disk_examples(self):
        g, pts = gen_unit_disk(1, 0.4, 0)
        assert g.n == 1 and g.number_of_edges() == 0 and len(pts) == 1
        g, _ = gen_unit_disk(2, 2.0, 4)
        assert g.edges == [(0, 1)]

    def test_unit_disk_edges_follow_distance(self):
        g, pts = gen_unit_disk(50, 0.35, 3)
        for u in range(50):
            for v in range(u + 1, 50):
                assert g.has_edge(u, v) == (math.dist(pts[u], pts[v]) <= 0.35)


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCommands:
    def test_solve_w5(self, tmp_path, capsys):
        report = tmp_path / "r.json"
        code, out, _ = run(["solve", FIXTURE_DIR / "W5.graph", "--k", 2, "--m", 2, "--report", report], capsys)
        assert code == 0
        # the exact optimum on W5 is 3; see the decisions ledger
        assert parse_node_set(out) == {0, 1, 4}
        data = json.loads(report.read_text())
        assert data["schema"] == 1
        assert data["c_size"] == 3 and data["certificate"]["is_valid"]

    def test_solve_trace(self, tmp_path, capsys):
        report = tmp_path / "r.json"
        sol = tmp_path / "c.txt"
        code, _, err = run(
            ["solve", FIXTURE_DIR / "C6.graph", "--k", 2, "--m", 2, "--trace", "--report", report, "-o", sol],
            capsys,
        )
        assert code == 0
        assert parse_node_set(sol.read_text()) == set(range(6))
        assert "level 1" in err
        assert json.loads(report.read_text())["trace"]["steps"]

    def test_verify(self, tmp_path, capsys):
        good, bad = tmp_path / "good", tmp_path / "bad"
        good.write_text("0\n1\n2\n3\n")
        bad.write_text("1\n2\n3\n")
        graph = FIXTURE_DIR / "C6.graph"
        assert run(["verify", graph, good, "--k", 1, "--m", 1], capsys)[0] == 0
        code, out, _ = run(["verify", graph, bad, "--k", 1, "--m", 1], capsys)
        assert code == 1
        assert json.loads(out)["violating_vertex"] == 5

    def test_verify_out_of_range_set(self, tmp_path, capsys):
        s = tmp_path / "s"
        s.write_text("9\n")
        assert run(["verify", FIXTURE_DIR / "C6.graph", s, "--k", 1, "--m", 1], capsys)[0] == 2

    def test_exact(self, capsys):
        code, out, _ = run(["exact", FIXTURE_DIR / "K5.graph", "--k", 2, "--m", 2], capsys)
        assert code == 0
        data = json.loads(out)
        assert data["opt"] == 3 and not data["timed_out"]

    def test_exact_budget(self, capsys):
        code, out, _ = run(["exact", FIXTURE_DIR / "petersen.graph", "--k", 3, "--m", 3, "--budget", 5], capsys)
        assert code == 0
        assert json.loads(out)["timed_out"]

    def test_parse_error_exit(self, tmp_path, capsys):
        f = tmp_path / "g"
        f.write_text("p 2 1\ne 0 0\n")
        code, _, err = run(["solve", f, "--k", 1, "--m", 1], capsys)
        assert code == 2 and "line 2" in err

    def test_missing_file(self, tmp_path, capsys):
        assert run(["solve", tmp_path / "nope", "--k", 1, "--m", 1], capsys)[0] == 2

    def test_m_below_k(self, capsys):
        assert run(["solve", FIXTURE_DIR / "K5.graph", "--k", 3, "--m", 2], capsys)[0] == 3

    def test_infeasible(self, capsys):
        assert run(["solve", FIXTURE_DIR / "P4.graph", "--k", 2, "--m", 2], capsys)[0] == 4

    def test_gen_round_trips(self, tmp_path, capsys):
        out = tmp_path / "g"
        assert run(["gen", "random", "--n", 30, "--k", 3, "--p", 0.1, "--seed", 7, "-o", out], capsys)[0] == 0
        assert parse_graph(out.read_text()) == gen_random_k_connected(30, 3, 0.1, 7)
        code, text, _ = run(["gen", "udg", "--n", 10, "--radius", 0.5, "--seed", 2], capsys)
        assert code == 0
        assert parse_graph(text) == gen_unit_disk(10, 0.5, 2)[0]
        assert text.count("c xy ") == 10

    def test_bench(self, tmp_path, capsys):
        js = tmp_path / "b.json"
        code, out, err = run(
            ["bench", "--trials", 12, "--seed", 3, "--n-min", 8, "--n-max", 12, "--k", 2, 3,
             "--exact-max-n", 10, "--family", "mixed", "--json", js],
            capsys,
        )
        assert code == 0, err
        reports = json.loads(js.read_text())
        rows = list(csv.DictReader(io.StringIO(out)))
        assert list(rows[0]) == CSV_COLUMNS
        assert len(rows) == len(reports) > 0
        for r in reports:
            assert r["schema"] == 1
            assert r["c_size"] <= r["bound"]
            if r["n"] <= 10:
                assert r["opt"] is not None and r["opt"] <= r["c_size"]
