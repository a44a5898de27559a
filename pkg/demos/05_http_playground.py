"""A scripted tour of the HTTP playground, no browser required.

The service holds a workspace of model files and exposes the pipeline:
read the declaration, edit diagrams, compose, classify, export.  The
same workflow backs the web UI; here a test client drives it in-process.
Run `algdd demo-iris && algdd serve` for the real thing.
"""

import tempfile

from fastapi.testclient import TestClient

from algdd.iris import write_workspace
from algdd.service import ModelStore, create_app

EXPRESSION = "norm(T1 + T2 + T3) + Expert"
SETOSA_PATH = {"sepal_length": 5.0, "sepal_width": 4.0,
               "petal_length": 3.5, "petal_width": 1.0}


def main():
    workspace = tempfile.mkdtemp(prefix="algdd-demo-")
    write_workspace(workspace)
    client = TestClient(create_app(ModelStore(workspace)))

    print("GET /api/declaration")
    print(f"  {client.get('/api/declaration').json()}")
    print("GET /api/diagrams")
    print(f"  {client.get('/api/diagrams').json()}")

    body = client.post("/api/compose", json={"expression": EXPRESSION}).json()
    print(f"POST /api/compose -> node counts {body['node_counts']}")

    result = client.post(
        "/api/classify", json={"expression": EXPRESSION, "features": SETOSA_PATH}
    ).json()
    print(f"POST /api/classify on the expert path -> {result['category']}")
    print(f"  weights: {result['weights']}")

    # The expert editor workflow: zero out the decisive leaf and retry.
    expert = client.get("/api/diagrams/Expert").json()
    expert["nodes"]["setosa8"]["weights"]["setosa"] = 0.0
    client.put("/api/diagrams/Expert", json=expert)
    result = client.post(
        "/api/classify", json={"expression": EXPRESSION, "features": SETOSA_PATH}
    ).json()
    print(f"after zeroing the expert leaf -> {result['category']} "
          "(the forest speaks again)")

    dot = client.get("/api/dot", params={"expression": "T1"}).text
    print(f"GET /api/dot?expression=T1 -> {len(dot.splitlines())} lines of dot")

    js = client.post(
        "/api/codegen", json={"expression": EXPRESSION, "target": "js"}
    ).text
    print(f"POST /api/codegen (js) -> {len(js.splitlines())} lines; "
          "the web UI embeds exactly this evaluator")


if __name__ == "__main__":
    main()
