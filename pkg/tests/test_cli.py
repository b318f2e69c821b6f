"""Tests for the rvclab command line."""
import json
import logging

import pytest

from src.cli import EXIT_BUDGET, EXIT_FAILED, EXIT_OK, EXIT_USAGE, main, parse_edges, parse_family, parse_range
from src.codec import coloring_to_document, dumps, graph_to_document
from src.constructions import color_upper_general
from src.graph_core import build_complete, build_path
from src.models import CSV_COLUMNS, VertexColoring

logger = logging.getLogger(__name__)


def run_json(capsys, argv: list[str]) -> tuple[int, dict]:
    code = main(argv)
    out = capsys.readouterr().out
    logger.info(f"rvclab {' '.join(argv)} -> {code}")
    return code, json.loads(out) if out.strip() else {}


@pytest.fixture
def p3_k2_file(tmp_path, capsys):
    """Graph document of P_3 ⋄ K_2 written through the construct command."""
    path = tmp_path / "p3k2.json"
    assert main(["construct", "--core", "path:3", "--flare", "complete:2", "--out", str(path)]) == EXIT_OK
    capsys.readouterr()
    return path


@pytest.mark.cli
class TestArgumentTypes:
    """Tests for argument parsers."""

    @pytest.mark.positive
    def test_parse_family(self):
        assert parse_family("cycle:5") == ("cycle", 5)
        assert parse_family("tree") == ("tree", None)

    @pytest.mark.positive
    def test_parse_edges(self):
        assert parse_edges("1-2, 2-3") == [(1, 2), (2, 3)]

    @pytest.mark.positive
    def test_parse_range(self):
        assert parse_range("2..4") == [2, 3, 4]
        assert parse_range("3") == [3]
        assert parse_range("2,5") == [2, 5]

    @pytest.mark.negative
    @pytest.mark.parametrize("parser,text", [
        (parse_family, "cycle"),
        (parse_family, "cycle:x"),
        (parse_edges, "1-"),
        (parse_range, "4..2"),
    ])
    def test_malformed_arguments(self, parser, text):
        import argparse

        with pytest.raises(argparse.ArgumentTypeError):
            parser(text)


@pytest.mark.cli
class TestConstructCommand:
    """Tests for rvclab construct."""

    @pytest.mark.positive
    def test_json_graph(self, capsys):
        code, document = run_json(capsys, ["construct", "--core", "path:3", "--flare", "complete:2"])

        assert code == EXIT_OK
        assert len(document["vertices"]) == 7
        assert len(document["edges"]) == 12
        assert document["vertices"][3]["label"] == "flare:1:1"

    @pytest.mark.positive
    def test_dot_graph(self, capsys):
        code = main(["construct", "--core", "cycle:3", "--format", "dot", "--flare", "complete:2"])
        out = capsys.readouterr().out

        assert code == EXIT_OK
        assert out.startswith("graph ")
        assert sum(1 for line in out.splitlines() if " -- " in line) == 18

    @pytest.mark.positive
    def test_tree_core_from_edges(self, capsys):
        code, document = run_json(
            capsys, ["construct", "--core", "tree", "--edges", "1-2,1-3", "--flare", "complete:2"]
        )

        assert code == EXIT_OK
        assert len(document["vertices"]) == 7

    @pytest.mark.positive
    def test_out_file(self, p3_k2_file):
        assert json.loads(p3_k2_file.read_text(encoding="utf-8"))["name"] == "path:3*complete:2"

    @pytest.mark.negative
    @pytest.mark.parametrize("argv", [
        ["construct", "--core", "hexagon:3", "--flare", "complete:2"],
        ["construct", "--core", "path"],
        ["construct", "--core", "path:3"],
        ["construct", "--core", "tree", "--edges", "1-2,2-3,3-1", "--flare", "complete:2"],
        ["construct"],
    ])
    def test_usage_errors(self, capsys, argv):
        assert main(argv) == EXIT_USAGE


@pytest.mark.cli
class TestVerifyCommand:
    """Tests for rvclab verify."""

    @pytest.mark.positive
    def test_upper_coloring_passes(self, capsys, tmp_path, p3_k2_file):
        coloring_file = tmp_path / "upper.json"
        coloring_file.write_text(dumps(coloring_to_document(color_upper_general(build_path(3), 2))), encoding="utf-8")

        code, report = run_json(capsys, ["verify", "--graph", str(p3_k2_file), "--coloring", str(coloring_file)])

        assert code == EXIT_OK
        assert report["passed"] is True
        assert report["failing_pair_rainbow"] is None

    @pytest.mark.negative
    def test_uniform_coloring_fails_with_pair(self, capsys, tmp_path):
        graph_file = tmp_path / "p4k2.json"
        main(["construct", "--core", "path:4", "--flare", "complete:2", "--out", str(graph_file)])
        coloring_file = tmp_path / "uniform.json"
        coloring_file.write_text(dumps(coloring_to_document(VertexColoring.uniform(10))), encoding="utf-8")
        capsys.readouterr()

        code, report = run_json(
            capsys,
            ["verify", "--graph", str(graph_file), "--coloring", str(coloring_file), "--target", "rvc"],
        )

        assert code == EXIT_FAILED
        assert report["failing_pair_rainbow"] == [0, 3]
        assert report["locating_ok"] is None

    @pytest.mark.negative
    def test_coloring_missing_a_vertex(self, capsys, tmp_path, p3_k2_file):
        coloring_file = tmp_path / "short.json"
        document = coloring_to_document(VertexColoring.all_distinct(6))
        coloring_file.write_text(dumps(document), encoding="utf-8")

        assert main(["verify", "--graph", str(p3_k2_file), "--coloring", str(coloring_file)]) == EXIT_USAGE

    @pytest.mark.negative
    def test_malformed_json(self, capsys, tmp_path, p3_k2_file):
        coloring_file = tmp_path / "broken.json"
        coloring_file.write_text("{not json", encoding="utf-8")

        assert main(["verify", "--graph", str(p3_k2_file), "--coloring", str(coloring_file)]) == EXIT_USAGE

    @pytest.mark.negative
    def test_missing_file(self, capsys, tmp_path, p3_k2_file):
        missing = tmp_path / "absent.json"
        assert main(["verify", "--graph", str(p3_k2_file), "--coloring", str(missing)]) == EXIT_USAGE


@pytest.mark.cli
class TestSolveCommands:
    """Tests for rvclab solve, bounds and predict."""

    @pytest.mark.positive
    def test_solve_graph_file(self, capsys, tmp_path):
        graph_file = tmp_path / "k5.json"
        graph_file.write_text(dumps(graph_to_document(build_complete(5))), encoding="utf-8")

        code, result = run_json(capsys, ["solve", "--graph", str(graph_file)])

        assert code == EXIT_OK
        assert result["value"] == 5
        assert result["status"] == "Proved"
        assert result["witness"]["k"] == 5

    @pytest.mark.positive
    def test_solve_family_rvc(self, capsys):
        code, result = run_json(capsys, ["solve", "--core", "cycle:3", "--flare", "complete:2", "--target", "rvc"])

        assert code == EXIT_OK
        assert result["value"] == 1

    @pytest.mark.negative
    def test_oversize_graph_needs_force(self, capsys):
        """C_6 ⋄ K_3 has 24 vertices, above the rvcl cap of 18."""
        assert main(["solve", "--core", "cycle:6", "--flare", "complete:3"]) == EXIT_USAGE

    @pytest.mark.negative
    def test_budget_exhausted_exit_code(self, capsys):
        code, result = run_json(
            capsys, ["solve", "--core", "cycle:3", "--flare", "complete:2", "--budget-nodes", "1"]
        )

        assert code == EXIT_BUDGET
        assert result["status"] == "Budget-Exhausted"
        assert (result["lower"], result["upper"]) == (3, 9)

    @pytest.mark.negative
    def test_solve_needs_a_graph(self, capsys):
        assert main(["solve"]) == EXIT_USAGE

    @pytest.mark.positive
    def test_bounds(self, capsys):
        code, report = run_json(capsys, ["bounds", "--core", "path:3", "--flare", "complete:2"])

        assert code == EXIT_OK
        assert (report["lower"], report["upper"]) == (4, 6)

    @pytest.mark.positive
    def test_predict(self, capsys):
        code, prediction = run_json(capsys, ["predict", "--core", "cycle:5", "--flare", "complete:2"])

        assert code == EXIT_OK
        assert prediction["value"] == 4
        assert prediction["branch"] == "m>=4, ceil(m/2)-1<=n<m-1"

    @pytest.mark.negative
    def test_predict_outside_theorems(self, capsys):
        assert main(["predict", "--core", "complete:3", "--flare", "complete:2"]) == EXIT_USAGE


@pytest.mark.cli
class TestColorCommand:
    """Tests for rvclab color."""

    @pytest.mark.positive
    @pytest.mark.parametrize("argv,k", [
        (["--rule", "cycle-rvcl", "--m", "5", "--n", "2"], 4),
        (["--rule", "complete-rvcl", "--m", "3", "--n", "4"], 5),
        (["--rule", "upper-general", "--core", "path:3", "--n", "2"], 6),
        (["--rule", "tree-rvc", "--edges", "1-2,2-3,2-4", "--n", "2"], 1),
    ])
    def test_color_counts(self, capsys, argv, k):
        code, document = run_json(capsys, ["color", *argv])

        assert code == EXIT_OK
        assert document["k"] == k, f"Expected {k} colors, got {document['k']}"

    @pytest.mark.positive
    def test_dot_output_carries_colors(self, capsys):
        code = main(["color", "--rule", "cycle-rvc", "--m", "4", "--n", "2", "--format", "dot"])
        out = capsys.readouterr().out

        assert code == EXIT_OK
        assert '"core:2" [color="2"];' in out

    @pytest.mark.negative
    def test_invalid_construction_fails(self, capsys, caplog):
        """The coloring is still printed; the exit code reports the collision."""
        with caplog.at_level(logging.WARNING):
            code, document = run_json(capsys, ["color", "--rule", "cycle-rvcl", "--m", "7", "--n", "3"])

        assert code == EXIT_FAILED
        assert len(document["colors"]) == 7 + 7 * 3
        assert "registered erratum" in caplog.text

    @pytest.mark.negative
    @pytest.mark.parametrize("argv", [
        ["--rule", "complete-rvcl", "--m", "3", "--n", "2"],
        ["--rule", "cycle-rvcl", "--n", "2"],
        ["--rule", "no-such-rule", "--m", "3", "--n", "2"],
    ])
    def test_usage_errors(self, capsys, argv):
        assert main(["color", *argv]) == EXIT_USAGE


@pytest.mark.cli
class TestReproduceCommand:
    """Tests for rvclab reproduce."""

    @pytest.mark.positive
    def test_csv_table(self, capsys):
        code = main(["reproduce", "--theorem", "cycle-rvcl", "--m", "3", "--n", "2"])
        lines = capsys.readouterr().out.splitlines()

        assert code == EXIT_OK
        assert lines[0].split(",") == CSV_COLUMNS
        assert lines[1].startswith("cycle,3,2,rvcl,3,")
        assert lines[1].endswith(",true,3,MATCH")

    @pytest.mark.positive
    def test_json_rows(self, capsys):
        code = main(["reproduce", "--theorem", "cycle-rvcl", "--m", "3", "--n", "2", "--format", "json"])
        rows = json.loads(capsys.readouterr().out)

        assert code == EXIT_OK
        assert rows[0]["agreement"] == "MATCH"
        assert "elapsed_ms" in rows[0]

    @pytest.mark.negative
    def test_unknown_selector(self, capsys):
        assert main(["reproduce", "--theorem", "thm-9"]) == EXIT_USAGE
