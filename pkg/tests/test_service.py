"""HTTP service endpoints, error mapping, store atomicity, CLI parity."""

import copy
import io
from contextlib import redirect_stdout

import pytest
from fastapi.testclient import TestClient

from algdd.cli import main
from algdd.service import ModelStore, create_app

SETOSA_PATH = {"sepal_length": 5.0, "sepal_width": 4.0,
               "petal_length": 3.5, "petal_width": 1.0}
OFF_PATH = {"sepal_length": 6.3, "sepal_width": 2.8,
            "petal_length": 5.1, "petal_width": 1.9}
COMPOSITION = "norm(T1 + T2 + T3) + Expert"


@pytest.fixture()
def ws(tmp_path):
    assert main(["demo-iris", "--workspace", str(tmp_path)]) == 0
    return tmp_path


@pytest.fixture()
def client(ws):
    store = ModelStore(ws)
    return TestClient(create_app(store), raise_server_exceptions=False)


def cli_stdout(args) -> str:
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        assert main(args) == 0
    return buffer.getvalue()


class TestReads:
    def test_declaration(self, client):
        body = client.get("/api/declaration").json()
        assert body["features"][0] == "sepal_length"
        assert body["categories"] == ["setosa", "versicolor", "virginica"]

    def test_diagram_list_and_default_expression(self, client):
        body = client.get("/api/diagrams").json()
        assert body["diagrams"] == ["Expert", "T1", "T2", "T3"]
        assert body["default_expression"] == COMPOSITION

    def test_get_diagram(self, client):
        body = client.get("/api/diagrams/T1").json()
        assert body["name"] == "T1"
        assert body["nodes"][body["root"]]["kind"] == "predicate"

    def test_get_unknown_diagram_is_404(self, client):
        response = client.get("/api/diagrams/Nope")
        assert response.status_code == 404
        assert "Nope" in response.json()["error"]

    def test_empty_workspace_has_no_declaration(self, tmp_path):
        client = TestClient(create_app(ModelStore(tmp_path / "empty")),
                            raise_server_exceptions=False)
        assert client.get("/api/declaration").status_code == 404


class TestComposeClassify:
    def test_classify_expert_path(self, client):
        response = client.post(
            "/api/classify",
            json={"expression": COMPOSITION, "features": SETOSA_PATH},
        )
        assert response.status_code == 200
        body = response.json()
        assert body["category"] == "setosa"
        assert body["weights"]["setosa"] == 8.0

    def test_compose_returns_graph_and_counts(self, client):
        response = client.post("/api/compose", json={"expression": "T1"})
        body = response.json()
        assert body["node_counts"] == {"inner": 2, "terminal": 3}
        assert body["graph"].startswith("{")

    def test_parse_error_is_400_with_location(self, client):
        response = client.post("/api/compose", json={"expression": "norm(T1"})
        assert response.status_code == 400
        assert response.json()["location"] == 7

    def test_unknown_diagram_is_404(self, client):
        response = client.post("/api/compose", json={"expression": "Ghost"})
        assert response.status_code == 404

    def test_missing_body_field_is_400(self, client):
        response = client.post("/api/classify", json={"expression": "T1"})
        assert response.status_code == 400

    def test_missing_feature_is_400(self, client):
        response = client.post(
            "/api/classify",
            json={"expression": COMPOSITION,
                  "features": {"petal_length": 9.9}},
        )
        assert response.status_code == 400
        assert "missing feature" in response.json()["error"]

    def test_prune_flag(self, client):
        plain = client.post("/api/compose", json={"expression": COMPOSITION}).json()
        pruned = client.post(
            "/api/compose",
            json={"expression": COMPOSITION, "prune_infeasible": True},
        ).json()
        def total(body):
            return body["node_counts"]["inner"] + body["node_counts"]["terminal"]
        assert total(pruned) <= total(plain)


class TestEditing:
    def test_put_persists_and_recomposes(self, client, ws):
        doc = client.get("/api/diagrams/Expert").json()
        doc["nodes"]["setosa8"]["weights"]["setosa"] = 0.0
        assert client.put("/api/diagrams/Expert", json=doc).status_code == 200
        assert '"setosa": 0.0' in (ws / "Expert.dd.json").read_text()
        body = client.post(
            "/api/classify",
            json={"expression": COMPOSITION, "features": SETOSA_PATH},
        ).json()
        assert body["category"] == "versicolor"  # forest-only prediction

    def test_invalid_put_is_400_and_keeps_old_state(self, client):
        doc = client.get("/api/diagrams/T1").json()
        broken = copy.deepcopy(doc)
        pred = next(k for k, v in broken["nodes"].items() if v["kind"] == "predicate")
        del broken["nodes"][pred]["true"]
        response = client.put("/api/diagrams/T1", json=broken)
        assert response.status_code == 400
        assert response.json()["location"] == pred
        assert client.get("/api/diagrams/T1").json() == doc

    def test_constraint_violation_message(self, client):
        doc = client.get("/api/diagrams/T1").json()
        pred = next(k for k, v in doc["nodes"].items() if v["kind"] == "predicate")
        doc["nodes"][pred]["true"] = pred  # self loop
        response = client.put("/api/diagrams/T1", json=doc)
        assert response.status_code == 400
        assert "cyclic" in response.json()["error"]

    def test_name_mismatch(self, client):
        doc = client.get("/api/diagrams/T1").json()
        doc["name"] = "T9"
        assert client.put("/api/diagrams/T1", json=doc).status_code == 400

    def test_new_diagram_roundtrip(self, client):
        doc = {
            "root": "only",
            "nodes": {"only": {"kind": "result", "weights": {"virginica": 2}}},
        }
        assert client.put("/api/diagrams/Fresh", json=doc).status_code == 200
        assert "Fresh" in client.get("/api/diagrams").json()["diagrams"]
        body = client.post(
            "/api/classify", json={"expression": "Fresh", "features": {}}
        ).json()
        assert body["category"] == "virginica"


class TestCliParity:
    """The CLI and the HTTP service must emit byte-identical documents."""

    def _cli_args(self, ws):
        return [
            "--decl", str(ws / "iris.decl.json"),
            "--diagrams",
            str(ws / "T1.dd.json"), str(ws / "T2.dd.json"),
            str(ws / "T3.dd.json"), str(ws / "Expert.dd.json"),
        ]

    @pytest.mark.parametrize(
        "expression", ["T1", "T2", "T3", "Expert", "norm(T1 + T2 + T3)", COMPOSITION]
    )
    def test_graph_documents_identical(self, ws, client, expression):
        cli_text = cli_stdout(["compose", *self._cli_args(ws), "--expr", expression])
        http_text = client.post(
            "/api/compose", json={"expression": expression}
        ).json()["graph"]
        assert cli_text == http_text

    @pytest.mark.parametrize(
        "expression", ["T1", "Expert", COMPOSITION]
    )
    def test_dot_identical(self, ws, client, expression):
        cli_text = cli_stdout(["dot", *self._cli_args(ws), "--expr", expression])
        http_text = client.get("/api/dot", params={"expression": expression}).text
        assert cli_text == http_text

    def test_codegen_identical(self, ws, client):
        cli_text = cli_stdout([
            "codegen", "--target", "js", *self._cli_args(ws), "--expr", COMPOSITION,
        ])
        http_text = client.post(
            "/api/codegen", json={"expression": COMPOSITION, "target": "js"}
        ).text
        assert cli_text == http_text

    def test_classification_agrees(self, ws, client):
        composed = ws / "composed.json"
        cli_stdout(["compose", *self._cli_args(ws), "--expr", COMPOSITION,
                    "-o", str(composed)])
        for x in (SETOSA_PATH, OFF_PATH):
            pairs = ",".join(f"{k}={v}" for k, v in x.items())
            cli_out = cli_stdout(["classify", "--composed", str(composed),
                                  "--input", pairs])
            http_body = client.post(
                "/api/classify", json={"expression": COMPOSITION, "features": x}
            ).json()
            assert cli_out.splitlines()[0] == http_body["category"]
