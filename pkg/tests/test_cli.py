# tests/test_cli.py

import json

import numpy as np
import pytest
from click.testing import CliRunner
from PIL import Image

from betarec.automata import BuchiAutomaton
from betarec.cli import cli, parse_point
from betarec.config import settings
from betarec.gdifs import cantor_gdifs, to_automaton
from betarec.limits import get_limits
from betarec.logic import parse_formula
from betarec.realsets import empty_set
from betarec.schemas import AutomatonModel, GdifsModel, RealSetModel

GOLDEN = "poly:-1,-1,1@(1,2)"


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def run(runner):
    def invoke(*args):
        return runner.invoke(cli, list(args), catch_exceptions=False)

    return invoke


@pytest.fixture
def restore_limits():
    saved = settings.model_dump()
    yield
    for name, value in saved.items():
        setattr(settings, name, value)
    get_limits.cache_clear()


@pytest.fixture
def infinitely_many_ones(tmp_path):
    a = BuchiAutomaton.build(
        2,
        [(0,), (1,)],
        [(0, (0,), 0), (0, (1,), 1), (1, (0,), 0), (1, (1,), 1)],
        {0},
        {1},
    )
    path = tmp_path / "ones.json"
    path.write_text(AutomatonModel.from_domain(a).model_dump_json())
    return path


class TestBases:
    def test_classify_golden(self, run):
        result = run("base", "classify", "--base", GOLDEN)
        assert result.exit_code == 0
        assert result.output.strip() == "pisot=true parry=simple dstar=(10)"

    def test_classify_json(self, run):
        result = run("base", "classify", "--base", "int:10", "--json")
        report = json.loads(result.output)
        assert report["base"] == "int:10"
        assert report["canonical_alphabet"] == list(range(10))
        assert report["dstar"] == "(9)"

    def test_bad_base(self, run):
        result = run("base", "classify", "--base", "int:1")
        assert result.exit_code == 1
        assert "error:" in result.output

    def test_missing_option(self, run):
        assert run("base", "classify").exit_code == 2

    def test_expand(self, run):
        result = run("expand", "--base", GOLDEN, "--value", "q:[0,1/2]")
        assert result.output.strip() == "0*(100)"

    def test_expand_labelled(self, run):
        result = run("expand", "--base", GOLDEN, "--value", "half-phi:q:[0,1/2]")
        assert result.output.strip() == "0*(100)"

    def test_expand_rational(self, run):
        assert run("expand", "--base", "int:2", "--value", "1/3").output.strip() == "0*(01)"

    def test_normalize(self, run):
        result = run("normalize", "--base", GOLDEN, "--word", "2*", "--digits", "0,1,2")
        assert result.exit_code == 0
        assert result.output.strip() == "10*01(0)"


class TestAutomata:
    def test_empty(self, run, infinitely_many_ones):
        assert run("aut", "empty", str(infinitely_many_ones)).output.strip() == "false"

    def test_complement_is_disjoint(self, run, infinitely_many_ones, tmp_path):
        comp = tmp_path / "comp.json"
        both = tmp_path / "both.json"
        assert run("aut", "complement", str(infinitely_many_ones), "-o", str(comp)).exit_code == 0
        assert run("aut", "intersect", str(infinitely_many_ones), str(comp), "-o", str(both)).exit_code == 0
        assert run("aut", "empty", str(both)).output.strip() == "true"

    def test_union_with_complement(self, run, infinitely_many_ones, tmp_path):
        comp = tmp_path / "comp.json"
        run("aut", "complement", str(infinitely_many_ones), "--method", "rank", "-o", str(comp))
        result = run("aut", "union", str(infinitely_many_ones), str(comp))
        a = AutomatonModel.model_validate_json(result.output).to_domain()
        assert a.initial

    def test_unroll(self, run, infinitely_many_ones, tmp_path):
        dot = tmp_path / "unrolled.dot"
        result = run("aut", "unroll", str(infinitely_many_ones), "-m", "3", "--dot", str(dot))
        assert json.loads(result.output)["n_states"] == 6
        assert dot.read_text().startswith('digraph "automaton" {')

    def test_unroll_needs_positive_copies(self, run, infinitely_many_ones):
        assert run("aut", "unroll", str(infinitely_many_ones), "-m", "0").exit_code == 2

    def test_dot(self, run, infinitely_many_ones):
        text = run("aut", "dot", str(infinitely_many_ones)).output
        assert text.startswith('digraph "automaton" {')
        assert "doublecircle" in text

    def test_invalid_document(self, run, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"n_states": "many"}')
        result = run("aut", "empty", str(path))
        assert result.exit_code == 1
        assert "AutomatonModel" in result.output

    def test_complement_cap(self, run, infinitely_many_ones, restore_limits):
        result = run("--complement-cap", "1", "aut", "complement", str(infinitely_many_ones), "--method", "rank")
        assert result.exit_code == 1
        assert "error:" in result.output


class TestRealSets:
    def test_universe_member(self, run, tmp_path):
        path = tmp_path / "universe.json"
        assert run("rs", "universe", "--base", "int:2", "-n", "2", "-o", str(path)).exit_code == 0
        assert RealSetModel.model_validate_json(path.read_text()).arity == 2
        assert run("rs", "member", "--set", str(path), "--point", "1/2,-3").output.strip() == "true"

    def test_output_is_deterministic(self, run):
        first = run("rs", "order", "--base", GOLDEN).output
        second = run("rs", "order", "--base", GOLDEN).output
        assert first == second

    def test_integers(self, run, tmp_path):
        path = tmp_path / "integers.json"
        run("rs", "integers", "--base", GOLDEN, "-o", str(path))
        assert run("rs", "member", "--set", str(path), "--point", "q:[0,1]").output.strip() == "true"
        assert run("rs", "member", "--set", str(path), "--point", "1/2").output.strip() == "false"

    def test_add(self, run, tmp_path):
        path = tmp_path / "add.json"
        run("rs", "add", "--base", GOLDEN, "-o", str(path))
        point = "1,q:[0,1],q:[1,1]"
        assert run("rs", "member", "--set", str(path), "--point", point).output.strip() == "true"
        assert run("rs", "member", "--set", str(path), "--point", "1,1,q:[0,1]").output.strip() == "false"

    def test_parse_point(self, golden, phi):
        assert parse_point(golden, "1/2, q:[0,1]") == (golden.field.scalar(0.5), phi)

    def test_parse_point_spacing_and_labels(self, golden, phi):
        half = golden.field.scalar(0.5)
        assert parse_point(golden, "q:[0,1] ,  1/2") == (phi, half)
        assert parse_point(golden, "phi:q:[0,1], half:1/2") == (phi, half)
        assert parse_point(golden, " q:[1/2, 0] ") == (half,)

    def test_member_with_spaced_point(self, run, tmp_path):
        path = tmp_path / "add.json"
        run("rs", "add", "--base", GOLDEN, "-o", str(path))
        result = run("rs", "member", "--set", str(path), "--point", "1, q:[0,1], q:[1,1]")
        assert result.output.strip() == "true"


class TestLogic:
    def test_decide(self, run):
        result = run("logic", "decide", "--base", "int:2", "--formula", "E x. x + x = 1")
        assert result.exit_code == 0
        assert result.output.strip() == "true"

    def test_decide_false(self, run):
        assert run("logic", "decide", "--base", "int:2", "--formula", "E x. x < x").output.strip() == "false"

    def test_decide_free_variable(self, run):
        result = run("logic", "decide", "--base", "int:2", "--formula", "x = 1")
        assert result.exit_code == 1
        assert "unbound" in result.output

    def test_syntax_error(self, run):
        result = run("logic", "decide", "--base", "int:2", "--formula", "E x. x + = 1")
        assert result.exit_code == 1
        assert "position 9" in result.output

    def test_compile(self, run, tmp_path):
        path = tmp_path / "half.json"
        result = run("logic", "compile", "--base", "int:2", "--formula", "x + x = 1", "-o", str(path))
        assert "tracks: x" in result.output
        assert run("rs", "member", "--set", str(path), "--point", "1/2").output.strip() == "true"
        assert run("rs", "member", "--set", str(path), "--point", "1").output.strip() == "false"

    def test_synthesize(self, run, tmp_path):
        path = tmp_path / "universe.json"
        run("rs", "universe", "--base", "int:2", "-o", str(path))
        result = run("logic", "synthesize", "--automaton", str(path), "--variables", "t")
        assert result.exit_code == 0
        assert parse_formula(result.output.strip()).free_vars() == ("t",)


class TestGdifs:
    def test_dimension(self, run):
        assert run("gdifs", "dimension", "--example", "pascal").output.strip() == "1.584963"
        assert run("gdifs", "dimension", "--example", "cantor-ifs").output.strip() == "0.630930"

    def test_dimension_not_strongly_connected(self, run):
        assert run("gdifs", "dimension", "--example", "cantor").exit_code == 1

    def test_source_required(self, run):
        assert run("gdifs", "dimension").exit_code == 2

    def test_render(self, run, tmp_path):
        path = tmp_path / "pascal.pbm"
        result = run("gdifs", "render", "--example", "pascal", "--depth", "3", "--resolution", "8", "-o", str(path))
        assert result.output.strip() == "27 pixels set"
        with Image.open(path) as image:
            assert image.size == (8, 8)
            assert image.mode == "1"
            assert int((~np.array(image)).sum()) == 27

    def test_render_needs_slice(self, run, tmp_path):
        result = run("gdifs", "render", "--example", "menger", "-o", str(tmp_path / "menger.png"))
        assert result.exit_code == 2

    def test_from_automaton(self, run, tmp_path):
        g = cantor_gdifs()
        path = tmp_path / "cantor.json"
        path.write_text(AutomatonModel.from_domain(to_automaton(g)).model_dump_json())
        result = run("gdifs", "from-automaton", "--automaton", str(path), "--base", "int:3")
        rebuilt = GdifsModel.model_validate_json(result.output).to_domain()
        assert rebuilt.edges == g.edges
        assert rebuilt.selected == g.selected

    def test_gdifs_file(self, run, tmp_path):
        path = tmp_path / "cantor.json"
        path.write_text(GdifsModel.from_domain(cantor_gdifs()).model_dump_json())
        result = run("gdifs", "render", "--gdifs", str(path), "--depth", "2", "--resolution", "18",
                     "-o", str(tmp_path / "cantor.png"))
        assert result.exit_code == 0

    def test_kernel_of_empty_set(self, run, ternary, tmp_path):
        source = tmp_path / "empty.json"
        source.write_text(RealSetModel.from_domain(empty_set(ternary, 1)).model_dump_json())
        report = tmp_path / "kernel.json"
        graph = tmp_path / "graph.json"
        result = run("gdifs", "kernel", "--set", str(source), "-c", "1", "-o", str(report), "--gdifs-out", str(graph))
        assert result.output.strip() == "classes=1 status=complete"
        assert json.loads(report.read_text())["status"] == "complete"
        assert GdifsModel.model_validate_json(graph.read_text()).vertices == ["empty"]

    def test_kernel_set_needs_bound(self, run, ternary, tmp_path):
        source = tmp_path / "empty.json"
        source.write_text(RealSetModel.from_domain(empty_set(ternary, 1)).model_dump_json())
        assert run("gdifs", "kernel", "--set", str(source)).exit_code == 2
