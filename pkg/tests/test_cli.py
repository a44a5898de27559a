"""End-to-end CLI behavior: exit codes, messages, and the demo pipeline."""

import json

import pytest

from algdd.cli import main
from algdd.forest import vote_oracle
from algdd import iris

from helpers import parse_dot


def _iris_args(ws, expression=None):
    args = [
        "--decl", str(ws / "iris.decl.json"),
        "--diagrams",
        str(ws / "T1.dd.json"), str(ws / "T2.dd.json"),
        str(ws / "T3.dd.json"), str(ws / "Expert.dd.json"),
    ]
    if expression is None:
        args += ["--calc", str(ws / "composition.calc")]
    else:
        args += ["--expr", expression]
    return args


@pytest.fixture()
def ws(tmp_path, capsys):
    assert main(["demo-iris", "--workspace", str(tmp_path)]) == 0
    capsys.readouterr()
    return tmp_path


class TestDemoIris:
    def test_materializes_fixture_files(self, tmp_path, capsys):
        assert main(["demo-iris", "--workspace", str(tmp_path)]) == 0
        out = capsys.readouterr().out
        for name in ("iris.decl.json", "T1.dd.json", "T2.dd.json", "T3.dd.json",
                      "Expert.dd.json", "iris.forest.json", "composition.calc"):
            assert (tmp_path / name).exists()
            assert name in out


class TestValidate:
    def test_all_fixture_files_pass(self, ws, capsys):
        files = [str(p) for p in sorted(ws.iterdir())]
        assert main(["validate", *files]) == 0
        out = capsys.readouterr().out
        assert out.count("OK ") == len(files)

    def test_cyclic_diagram_fails(self, ws, tmp_path, capsys):
        doc = json.loads((ws / "T1.dd.json").read_text())
        doc["declaration"] = {
            "features": ["sepal_length", "sepal_width", "petal_length", "petal_width"],
            "categories": ["setosa", "versicolor", "virginica"],
        }
        first = next(k for k, v in doc["nodes"].items() if v["kind"] == "predicate")
        doc["nodes"][first]["true"] = first
        bad = tmp_path / "bad.dd.json"
        bad.write_text(json.dumps(doc))
        assert main(["validate", str(bad)]) == 1
        assert "cyclic" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert main(["validate", "nope.dd.json"]) == 1
        assert "no such file" in capsys.readouterr().err

    def test_unknown_extension(self, tmp_path, capsys):
        stray = tmp_path / "model.txt"
        stray.write_text("?")
        assert main(["validate", str(stray)]) == 1
        assert "unknown model type" in capsys.readouterr().err

    def test_usage_error_exits_2(self):
        with pytest.raises(SystemExit) as info:
            main(["validate"])
        assert info.value.code == 2


class TestComposeClassify:
    def test_expert_path_prediction(self, ws, tmp_path, capsys):
        composed = tmp_path / "composed.json"
        assert main(["compose", *_iris_args(ws), "-o", str(composed)]) == 0
        assert main([
            "classify", "--composed", str(composed),
            "--input", "sepal_length=5.0,sepal_width=4.0,petal_length=3.5,petal_width=1.0",
        ]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "setosa"
        assert out[1] == "setosa=8 versicolor=1 virginica=0"

    def test_off_path_matches_vote_oracle(self, ws, tmp_path, capsys):
        composed = tmp_path / "composed.json"
        main(["compose", *_iris_args(ws), "-o", str(composed)])
        capsys.readouterr()
        x = {"sepal_length": 6.0, "sepal_width": 3.0,
             "petal_length": 5.2, "petal_width": 2.1}
        pairs = ",".join(f"{k}={v}" for k, v in x.items())
        assert main(["classify", "--composed", str(composed), "--input", pairs]) == 0
        category = capsys.readouterr().out.splitlines()[0]
        assert category == vote_oracle(iris.forest(), x)

    def test_compose_to_stdout(self, ws, capsys):
        assert main(["compose", *_iris_args(ws, expression="T1")]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["kind"] == "decision-diagram-graph"
        assert doc["node_counts"] == {"inner": 2, "terminal": 3}

    def test_prune_flag(self, ws, capsys):
        assert main(["compose", *_iris_args(ws), "--prune-infeasible"]) == 0
        pruned = json.loads(capsys.readouterr().out)
        assert main(["compose", *_iris_args(ws)]) == 0
        plain = json.loads(capsys.readouterr().out)
        assert len(pruned["nodes"]) <= len(plain["nodes"])

    def test_bad_expression_exits_1(self, ws, capsys):
        assert main(["compose", *_iris_args(ws, expression="norm(T1")]) == 1
        err = capsys.readouterr().err
        assert "error:" in err and "at 7" in err

    def test_bad_input_pair(self, ws, tmp_path, capsys):
        composed = tmp_path / "composed.json"
        main(["compose", *_iris_args(ws), "-o", str(composed)])
        assert main(["classify", "--composed", str(composed), "--input", "spam"]) == 1
        assert "name=value" in capsys.readouterr().err


class TestExports:
    def test_dot_from_models_parses(self, ws, capsys):
        assert main(["dot", *_iris_args(ws)]) == 0
        nodes, edges = parse_dot(capsys.readouterr().out)
        assert nodes and edges

    def test_dot_from_composed_document(self, ws, tmp_path, capsys):
        composed = tmp_path / "composed.json"
        main(["compose", *_iris_args(ws), "-o", str(composed)])
        capsys.readouterr()
        assert main(["dot", "--composed", str(composed)]) == 0
        parse_dot(capsys.readouterr().out)

    def test_codegen_c_compiles(self, ws, tmp_path, capsys):
        out_file = tmp_path / "eval.c"
        assert main(["codegen", "--target", "c", *_iris_args(ws),
                     "-o", str(out_file)]) == 0
        source = out_file.read_text()
        assert "goto" in source and "evaluate_argmax" in source

    def test_codegen_js(self, ws, capsys):
        assert main(["codegen", "--target", "js", *_iris_args(ws, expression="T2")]) == 0
        source = capsys.readouterr().out
        assert "switch (node)" in source and "function evaluate(" in source

    def test_codegen_requires_target(self, ws):
        with pytest.raises(SystemExit) as info:
            main(["codegen", *_iris_args(ws)])
        assert info.value.code == 2
