import json

import pytest

import lpviz.cli as cli
from lpviz.examples import example, example_names
from lpviz.scene import SceneOptions, build_scene, serialize_scene
from lpviz.simplex import simplex_solve


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExamplesCommand:
    def test_lists_every_catalog_entry(self, capsys):
        code, out, err = run(capsys, "examples")
        assert code == 0 and err == ""
        for name in example_names():
            assert name in out
        assert "Dantzig walks all 8 corners" in out


class TestSolveCommand:
    def test_lego_text_output(self, capsys):
        code, out, err = run(capsys, "solve", "--example", "lego_2d")
        assert code == 0 and err == ""
        assert "--- iteration 0 (phase 2) ---" in out
        assert "pivot: entering x1, leaving x4" in out
        assert "status: optimal" in out
        assert "optimal value: 52" in out
        assert "solution: x1 = 2, x2 = 2" in out
        assert "distinct corner points visited: 3" in out
        assert "z  = 52 - 2 x3 - 6 x4" in out

    def test_squashed_cube_visits_every_corner(self, capsys):
        code, out, _ = run(capsys, "solve", "--example", "klee_minty_3d")
        assert code == 0
        assert "optimal value: 125" in out
        assert "distinct corner points visited: 8" in out

    def test_pivot_rule_changes_the_outcome(self, capsys):
        code, out, _ = run(capsys, "solve", "--example", "cycling_beale")
        assert code == 0
        assert "status: cycling_detected" in out
        code, out, _ = run(capsys, "solve", "--example", "cycling_beale", "--rule", "bland")
        assert code == 0
        assert "status: optimal" in out
        assert "optimal value: 1" in out

    def test_tableau_form(self, capsys):
        code, out, _ = run(capsys, "solve", "--example", "lego_2d", "--form", "tableau")
        assert code == 0
        assert "rhs" in out

    def test_infeasible_program_from_inline_spec(self, capsys):
        code, out, _ = run(
            capsys, "solve", "--lp", "A=[[1,1],[-1,-1]];b=[1,-3];c=[1,1]"
        )
        assert code == 0
        assert "status: infeasible" in out
        assert "(phase 1)" in out

    def test_json_output_is_exact(self, capsys):
        code, out, err = run(capsys, "solve", "--example", "lego_2d", "--json")
        assert code == 0 and err == ""
        obj = json.loads(out)
        assert obj["status"] == "optimal"
        assert obj["optimal_value"] == "52"
        assert obj["optimal_solution"] == ["2", "2"]
        assert len(obj["iterations"]) == 3

    def test_decimals_in_inline_spec_read_exactly(self, capsys):
        code, out, _ = run(
            capsys, "solve", "--lp", "A=[[0.1]];b=[0.3];c=[1]", "--json"
        )
        assert code == 0
        assert json.loads(out)["optimal_value"] == "3"

    def test_file_input(self, capsys, tmp_path):
        path = tmp_path / "prog.json"
        path.write_text('{"A": [[2, 2], [2, 1]], "b": [8, 6], "c": [16, 10]}')
        code, out, _ = run(capsys, "solve", str(path))
        assert code == 0
        assert "optimal value: 52" in out


class TestRenderCommand:
    def test_writes_a_self_contained_page(self, capsys, tmp_path):
        target = tmp_path / "lego.html"
        code, out, err = run(capsys, "render", "--example", "lego_2d", "-o", str(target))
        assert code == 0 and err == ""
        assert f"wrote {target}" in out
        html = target.read_text(encoding="utf-8")
        entry = example("lego_2d")
        doc = build_scene(entry.lp, simplex_solve(entry.lp))
        assert serialize_scene(doc).decode("utf-8") in html
        assert 'id="scene-data"' in html

    def test_render_options_reach_the_scene(self, capsys, tmp_path):
        target = tmp_path / "terse.html"
        code, _, _ = run(
            capsys,
            "render",
            "--example",
            "lego_2d",
            "-o",
            str(target),
            "--form",
            "tableau",
            "--no-basic-sol",
            "--no-show-basis",
            "--ticks",
            "4",
        )
        assert code == 0
        entry = example("lego_2d")
        doc = build_scene(
            entry.lp,
            simplex_solve(entry.lp),
            SceneOptions(
                form="tableau", basic_sol=False, show_basis=False, objective_ticks=4
            ),
        )
        assert serialize_scene(doc).decode("utf-8") in target.read_text(encoding="utf-8")

    def test_two_runs_are_byte_identical(self, capsys, tmp_path):
        a, b = tmp_path / "a.html", tmp_path / "b.html"
        run(capsys, "render", "--example", "klee_minty_3d", "-o", str(a))
        run(capsys, "render", "--example", "klee_minty_3d", "-o", str(b))
        assert a.read_bytes() == b.read_bytes()


class TestBnbCommand:
    def test_writes_one_page_per_node_plus_index(self, capsys, tmp_path):
        outdir = tmp_path / "tree"
        code, out, err = run(
            capsys,
            "bnb",
            "--lp",
            "A=[[6,4],[1,2]];b=[24,6];c=[5,4]",
            "-o",
            str(outdir),
        )
        assert code == 0 and err == ""
        names = sorted(p.name for p in outdir.iterdir())
        assert names == [
            "index.html",
            "node_000.html",
            "node_001.html",
            "node_002.html",
            "node_003.html",
            "node_004.html",
        ]
        index = (outdir / "index.html").read_text(encoding="utf-8")
        assert 'href="node_003.html"' in index
        node = (outdir / "node_003.html").read_text(encoding="utf-8")
        assert '"kind":"bnb_node"' in node

    def test_unbounded_root_is_a_user_error(self, capsys, tmp_path):
        code, out, err = run(
            capsys,
            "bnb",
            "--example",
            "unbounded_2d",
            "-o",
            str(tmp_path / "nodes"),
        )
        assert code == 1
        assert out == ""
        assert "error:" in err and "unbounded" in err


class TestErrorPaths:
    def test_no_input_source(self, capsys):
        code, out, err = run(capsys, "solve")
        assert code == 1 and out == ""
        assert err.startswith("error:")

    def test_two_input_sources(self, capsys, tmp_path):
        path = tmp_path / "p.json"
        path.write_text('{"A": [[1]], "b": [1], "c": [1]}')
        code, _, err = run(capsys, "solve", str(path), "--example", "lego_2d")
        assert code == 1
        assert "exactly one" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "solve", "/no/such/file.json")
        assert code == 1
        assert "error:" in err

    def test_bad_json_file(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{oops")
        code, _, err = run(capsys, "solve", str(path))
        assert code == 1
        assert "invalid JSON" in err

    def test_unknown_example_lists_names(self, capsys):
        code, _, err = run(capsys, "solve", "--example", "nope")
        assert code == 1
        assert "lego_2d" in err

    def test_malformed_inline_spec(self, capsys):
        code, _, err = run(capsys, "solve", "--lp", "A=[[1]];b=[1]")
        assert code == 1
        assert "error:" in err

    def test_bad_flag_value_exits_one(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["solve", "--example", "lego_2d", "--rule", "magic"])
        assert exc.value.code == 1
        err = capsys.readouterr().err
        assert "invalid choice" in err

    def test_dimension_gate_on_render(self, capsys, tmp_path):
        code, _, err = run(
            capsys,
            "render",
            "--example",
            "cycling_beale",
            "-o",
            str(tmp_path / "x.html"),
        )
        assert code == 1
        assert "2 or 3" in err

    def test_internal_failure_exits_two(self, capsys, monkeypatch):
        def boom(*args, **kwargs):
            raise RuntimeError("wires crossed")

        monkeypatch.setattr(cli, "simplex_solve", boom)
        code, _, err = run(capsys, "solve", "--example", "lego_2d")
        assert code == 2
        assert "RuntimeError" in err
