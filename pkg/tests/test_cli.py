import io
import json
from contextlib import redirect_stderr, redirect_stdout

import pytest

from totalirr.cli import main
from totalirr.graph import Graph
from totalirr.graph6 import write_graph6


def run_cli(*args):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(args))
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def g6file(tmp_path):
    def make(graphs, name="in.g6"):
        path = tmp_path / name
        path.write_text("".join(write_graph6(g) + "\n" for g in graphs))
        return str(path)

    return make


class TestCompute:
    def test_cycle_has_zero(self, g6file):
        path = g6file([Graph.cycle(5)])
        code, out, _ = run_cli("compute", "--in", path)
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "graph,irr_t,irr"
        assert lines[1].endswith(",0,0")

    def test_csv_columns_per_index(self, g6file):
        path = g6file([Graph.star(4)])
        code, out, _ = run_cli("compute", "--in", path, "--index", "total")
        assert out.splitlines()[0] == "graph,irr_t"
        code, out, _ = run_cli("compute", "--in", path, "--index", "edge")
        assert out.splitlines()[0] == "graph,irr"

    def test_json_lines(self, g6file):
        path = g6file([Graph.star(4), Graph.path(4)])
        code, out, _ = run_cli(
            "compute", "--in", path, "--format", "json", "--index", "both"
        )
        records = [json.loads(line) for line in out.splitlines()]
        assert records[0]["irr_t"] == 6 and records[0]["irr"] == 6
        assert records[1]["irr_t"] == 4 and records[1]["irr"] == 2

    def test_missing_file_is_io_error(self):
        code, _, err = run_cli("compute", "--in", "/nonexistent.g6")
        assert code == 3 and "cannot read" in err

    def test_malformed_record_is_io_error(self, tmp_path):
        path = tmp_path / "bad.g6"
        path.write_text("Bg\nD\n")
        code, _, err = run_cli("compute", "--in", str(path))
        assert code == 3 and ":2:" in err


class TestEnumerate:
    def test_stdout_stream(self):
        code, out, _ = run_cli("enumerate", "--family", "tree", "--n", "5")
        assert code == 0 and len(out.splitlines()) == 3

    def test_to_file(self, tmp_path):
        target = tmp_path / "out.g6"
        code, out, _ = run_cli(
            "enumerate", "--family", "bicyclic", "--n", "5", "--out", str(target)
        )
        assert code == 0 and out == ""
        assert len(target.read_text().splitlines()) == 5

    def test_limit_violation_is_usage_error(self):
        code, _, err = run_cli("enumerate", "--family", "connected", "--n", "10")
        assert code == 2 and "n <= 9" in err

    def test_unknown_flag_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            run_cli("enumerate", "--family", "tree", "--n", "5", "--bogus")
        assert exc.value.code == 2


class TestVerify:
    def test_text_pass(self):
        code, out, _ = run_cli(
            "verify", "--family", "tree", "--n-min", "6", "--n-max", "10"
        )
        assert code == 0
        assert out.count("Tree n=") == 5
        assert "[fail]" not in out and "[pass]" in out

    def test_json_schema(self):
        code, out, _ = run_cli(
            "verify",
            "--family",
            "unicyclic",
            "--n-min",
            "5",
            "--n-max",
            "6",
            "--format",
            "json",
        )
        assert code == 0
        reports = json.loads(out)
        assert [rep["n"] for rep in reports] == [5, 6]
        assert all(
            set(rep) == {"family", "n", "ranks", "expected", "verdict"}
            for rep in reports
        )

    def test_bicyclic_reports_all_subclasses(self):
        code, out, _ = run_cli(
            "verify", "--family", "bicyclic", "--n-min", "7", "--n-max", "7"
        )
        assert code == 0
        for family in (
            "BicyclicInfinityL1",
            "BicyclicInfinityL2plus",
            "BicyclicTheta",
            "BicyclicAll",
        ):
            assert f"{family} n=7" in out

    def test_bad_range_is_usage_error(self):
        code, _, err = run_cli(
            "verify", "--family", "tree", "--n-min", "8", "--n-max", "6"
        )
        assert code == 2


class TestConjecture:
    def test_clean_below_five(self):
        code, out, _ = run_cli("conjecture", "--n-max", "4", "--mode", "sequence")
        assert code == 0 and "no counterexample" in out

    def test_counterexample_exit_code(self):
        code, out, _ = run_cli("conjecture", "--n-max", "5", "--mode", "sequence")
        assert code == 1
        assert "counterexample" in out and "irr_t=4 < 6" in out

    def test_graph_mode_emits_witness(self):
        code, out, _ = run_cli("conjecture", "--n-max", "5", "--mode", "graph")
        assert code == 1 and "witness:" in out

    def test_limits(self):
        code, _, err = run_cli("conjecture", "--n-max", "10", "--mode", "graph")
        assert code == 2
        code, _, err = run_cli("conjecture", "--n-max", "17", "--mode", "sequence")
        assert code == 2


class TestTransform:
    def test_trace(self, g6file):
        path = g6file([Graph.star(5)])
        code, out, _ = run_cli("transform", "--in", path, "--trace")
        assert code == 0
        assert "step 1:" in out and "delta=-" in out
        assert "degrees=[2^3 1^2]" in out

    def test_disconnected_rejected(self, g6file):
        path = g6file([Graph(4, [(0, 1), (2, 3)])])
        code, _, err = run_cli("transform", "--in", path)
        assert code == 2 and "disconnected" in err


class TestDeterminismAcrossThreads:
    def test_verify_and_conjecture_outputs_stable(self):
        runs = [
            run_cli(
                "verify", "--family", "tree", "--n-min", "6", "--n-max", "8",
                "--format", "json", "--threads", str(k)
            )
            for k in (1, 4, 8)
        ]
        assert len({out for _, out, _ in runs}) == 1
        runs = [
            run_cli("conjecture", "--n-max", "6", "--mode", "graph", "--threads", str(k))
            for k in (1, 4, 8)
        ]
        assert len({out for _, out, _ in runs}) == 1
