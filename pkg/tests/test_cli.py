import json

import pytest

from bicontract import graphs
from bicontract.cli import main
from bicontract.graphs import cycle_graph, format_edge_list

TRIANGLE = "p 3 3\ne 1 2\ne 1 3\ne 2 3\n"
C4 = "p 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n"
C5 = "p 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n"


@pytest.fixture
def triangle(tmp_path):
    path = tmp_path / "triangle.graph"
    path.write_text(TRIANGLE)
    return str(path)


class TestSolve:
    def test_yes_exits_zero(self, triangle, capsys):
        assert main(["solve", triangle, "--budget", "1"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["answer"] == "yes" and report["command"] == "solve"

    def test_no_exits_one(self, triangle):
        assert main(["solve", triangle, "--budget", "0"]) == 1

    def test_malformed_header_exits_two(self, tmp_path):
        bad = tmp_path / "bad.graph"
        bad.write_text("p x y\n")
        assert main(["solve", str(bad), "--budget", "1"]) == 2

    def test_missing_file_exits_two(self, tmp_path):
        assert main(["solve", str(tmp_path / "nope"), "--budget", "1"]) == 2

    def test_disconnected_exits_two(self, tmp_path):
        path = tmp_path / "two.graph"
        path.write_text("p 4 2\ne 1 2\ne 3 4\n")
        assert main(["solve", str(path), "--budget", "2"]) == 2

    def test_engines_agree(self, tmp_path):
        path = tmp_path / "c5.graph"
        path.write_text(C5)
        for k, expected in ((0, 1), (1, 0)):
            assert main(["solve", str(path), "--budget", str(k), "--engine", "fpt"]) == expected
            assert main(["solve", str(path), "--budget", str(k), "--engine", "oracle"]) == expected

    def test_trace_includes_counters(self, triangle, capsys):
        assert main(["solve", triangle, "--budget", "1", "--trace"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert "counters" in report and "case_invocations" in report["counters"]

    def test_negative_budget_usage_error(self, triangle):
        assert main(["solve", triangle, "--budget", "-1"]) == 2

    def test_bad_threads_usage_error(self, triangle):
        assert main(["solve", triangle, "--budget", "1", "--threads", "0"]) == 2


class TestOracleCommand:
    def test_balanced_flag(self, tmp_path):
        path = tmp_path / "c5.graph"
        path.write_text(C5)
        assert main(["oracle", str(path), "--budget", "1", "--balanced"]) == 0
        assert main(["oracle", str(path), "--budget", "0", "--balanced"]) == 1

    def test_env_limit_override(self, tmp_path, monkeypatch):
        path = tmp_path / "c4.graph"
        path.write_text(C4)
        monkeypatch.setenv("BICLIQUE_ORACLE_LIMIT", "3")
        assert main(["oracle", str(path), "--budget", "1"]) == 2
        monkeypatch.setenv("BICLIQUE_ORACLE_LIMIT", "10")
        assert main(["oracle", str(path), "--budget", "1"]) == 0
        monkeypatch.setenv("BICLIQUE_ORACLE_LIMIT", "zebra")
        assert main(["oracle", str(path), "--budget", "1"]) == 2


class TestVerify:
    def test_solver_certificate_round_trip(self, tmp_path):
        path = tmp_path / "c5.graph"
        path.write_text(C5)
        cert = tmp_path / "cert.json"
        assert main(["solve", str(path), "--budget", "1", "--balanced",
                     "--certificate", str(cert)]) == 0
        assert main(["verify", str(path), "--certificate", str(cert),
                     "--budget", "1", "--balanced"]) == 0
        # the same edge certificate fails without the balanced budget slack
        assert main(["verify", str(path), "--certificate", str(cert),
                     "--budget", "0", "--balanced"]) == 1

    def test_partition_certificate(self, tmp_path):
        path = tmp_path / "c4.graph"
        path.write_text(C4)
        cert = tmp_path / "cert.json"
        cert.write_text(json.dumps({"kind": "partition", "L": [1, 3], "R": [2, 4]}))
        assert main(["verify", str(path), "--certificate", str(cert), "--budget", "0"]) == 0

    def test_partition_certificate_against_wrong_graph(self, tmp_path):
        path = tmp_path / "c5.graph"
        path.write_text(C5)
        cert = tmp_path / "cert.json"
        cert.write_text(json.dumps({"kind": "partition", "L": [1, 3], "R": [2, 4]}))
        assert main(["verify", str(path), "--certificate", str(cert), "--budget", "0"]) == 2

    def test_invalid_partition_certificate(self, tmp_path):
        path = tmp_path / "c4.graph"
        path.write_text(C4)
        cert = tmp_path / "cert.json"
        cert.write_text(json.dumps({"kind": "partition", "L": [1, 2], "R": [3, 4]}))
        assert main(["verify", str(path), "--certificate", str(cert), "--budget", "0"]) == 1

    def test_edge_certificate_with_unknown_edge(self, tmp_path):
        path = tmp_path / "c4.graph"
        path.write_text(C4)
        cert = tmp_path / "cert.json"
        cert.write_text(json.dumps({"edges": [[1, 3]]}))
        assert main(["verify", str(path), "--certificate", str(cert), "--budget", "1"]) == 2

    def test_garbage_json(self, tmp_path):
        path = tmp_path / "c4.graph"
        path.write_text(C4)
        cert = tmp_path / "cert.json"
        cert.write_text("{nope")
        assert main(["verify", str(path), "--certificate", str(cert), "--budget", "1"]) == 2


class TestKernelize:
    def test_trivial_no_instance(self, triangle, tmp_path):
        out = tmp_path / "reduced.graph"
        code = main(["kernelize", triangle, "--budget", "0", "--output", str(out)])
        assert code == 1
        sidecar = json.loads((tmp_path / "reduced.graph.json").read_text())
        assert sidecar["outcome"] == "trivial-no"
        assert sidecar["original_n"] == 3

    def test_reduced_instance_files_deterministic(self, tmp_path):
        big = graphs.complete_bipartite(8, 9)
        src = tmp_path / "big.graph"
        src.write_text(format_edge_list(big))
        out1, out2 = tmp_path / "r1.graph", tmp_path / "r2.graph"
        assert main(["kernelize", str(src), "--budget", "1", "--output", str(out1)]) == 0
        assert main(["kernelize", str(src), "--budget", "1", "--output", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()
        assert (tmp_path / "r1.graph.json").read_bytes() == (tmp_path / "r2.graph.json").read_bytes()
        sidecar = json.loads((tmp_path / "r1.graph.json").read_text())
        assert sidecar["outcome"] == "reduced-instance"
        assert sidecar["reduced_n"] < 17

    def test_reduced_output_parses(self, tmp_path):
        src = tmp_path / "c9.graph"
        src.write_text(format_edge_list(cycle_graph(9)))
        out = tmp_path / "red.graph"
        main(["kernelize", str(src), "--budget", "2", "--output", str(out)])
        graphs.parse_edge_list(out.read_text())


class TestGenerate:
    def test_rbds_example_produces_eight_vertices(self, tmp_path):
        src = tmp_path / "dom.rbds"
        src.write_text("c two reds dominate one blue\np rbds 2 1 1\ne 1 1\ne 2 1\n")
        out = tmp_path / "inst.graph"
        assert main(["generate", "rbds", str(src), "--output", str(out)]) == 0
        g = graphs.parse_edge_list(out.read_text())
        assert g.n == 8
        sidecar = json.loads((tmp_path / "inst.graph.json").read_text())
        assert sidecar["budget"] == 2 and sidecar["source_answer"] is True

    def test_generated_rbds_instance_solves_as_expected(self, tmp_path):
        src = tmp_path / "dom.rbds"
        src.write_text("p rbds 4 2 1\ne 1 1\ne 2 1\ne 3 2\ne 4 2\n")
        out = tmp_path / "inst.graph"
        main(["generate", "rbds", str(src), "--output", str(out)])
        sidecar = json.loads((tmp_path / "inst.graph.json").read_text())
        assert sidecar["source_answer"] is False
        assert main(["solve", str(out), "--budget", str(sidecar["budget"])]) == 1

    def test_h2c(self, tmp_path):
        src = tmp_path / "color.h2c"
        src.write_text("h 2 1\n1 2\n")
        out = tmp_path / "inst.graph"
        assert main(["generate", "h2c", str(src), "--output", str(out)]) == 0
        sidecar = json.loads((tmp_path / "inst.graph.json").read_text())
        assert sidecar["counts"]["core_vertices"] == 18
        assert sidecar["budget"] == 2 + sidecar["counts"]["subdivisions"]
        g = graphs.parse_edge_list(out.read_text())
        assert g.n == sidecar["counts"]["n"]

    def test_is_requires_k(self, tmp_path):
        src = tmp_path / "h.graph"
        src.write_text(TRIANGLE)
        out = tmp_path / "inst.graph"
        assert main(["generate", "is", str(src), "--output", str(out)]) == 2
        assert main(["generate", "is", str(src), "--output", str(out), "--k", "1"]) == 0
        sidecar = json.loads((tmp_path / "inst.graph.json").read_text())
        assert sidecar["target_size"] == 2 and sidecar["source_answer"] is True

    def test_bad_rbds_source(self, tmp_path):
        src = tmp_path / "dom.rbds"
        src.write_text("p rbds 2 1 1\ne 1 1\n")  # blue with one neighbor
        assert main(["generate", "rbds", str(src), "--output", str(tmp_path / "x")]) == 2


def test_selftest_tiny():
    assert main(["selftest", "--max-n", "3", "--max-budget", "2"]) == 0


def test_usage_error_exit_code():
    assert main(["solve"]) == 2
    assert main([]) == 2
