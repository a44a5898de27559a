"""Built-in Iris demo fixture: declaration, three trees, expert diagram.

The three trees mimic a small forest trained on the classic Iris
measurements (thresholds follow the usual petal/sepal split points).  The
expert diagram encodes a domain rule the forest did not learn: unusually
broad sepals on a short-to-medium petal mean Setosa, full stop.  Its single
decisive leaf carries a Setosa weight of 8, which dominates any normalized
forest vote; every other leaf is all-zero and leaves the forest's decision
untouched.
"""

from __future__ import annotations

from pathlib import Path

from .forest import ForestModel, Leaf, Split, forest_to_diagrams, forest_to_json
from .models import (
    Declaration,
    DiagramModel,
    PredicateNode,
    ResultNode,
    declaration_to_json,
    diagram_to_json,
    validate_diagram,
)

COMPOSITION = "norm(T1 + T2 + T3) + Expert"

DECLARATION_FILE = "iris.decl.json"
COMPOSITION_FILE = "composition.calc"
FOREST_FILE = "iris.forest.json"


def declaration() -> Declaration:
    return Declaration(
        features=("sepal_length", "sepal_width", "petal_length", "petal_width"),
        categories=("setosa", "versicolor", "virginica"),
    )


def forest() -> ForestModel:
    decl = declaration()
    t1 = Split(
        "petal_length", 2.45,
        Leaf("setosa"),
        Split("petal_width", 1.75, Leaf("versicolor"), Leaf("virginica")),
    )
    t2 = Split(
        "petal_width", 0.8,
        Leaf("setosa"),
        Split("petal_length", 4.95, Leaf("versicolor"), Leaf("virginica")),
    )
    t3 = Split(
        "petal_length", 2.6,
        Leaf("setosa"),
        Split(
            "petal_length", 4.85,
            Split("petal_width", 1.65, Leaf("versicolor"), Leaf("virginica")),
            Leaf("virginica"),
        ),
    )
    return ForestModel(declaration=decl, trees=(t1, t2, t3))


def expert_diagram() -> DiagramModel:
    """Expert rule: sepal_width > 3.8 and petal_length <= 4.0 forces Setosa."""
    decl = declaration()
    model = DiagramModel(
        name="Expert",
        declaration=decl,
        root="n0",
        nodes={
            "n0": PredicateNode(
                feature="sepal_width", threshold=3.8,
                true_succ="skip", false_succ="n1",
            ),
            "n1": PredicateNode(
                feature="petal_length", threshold=4.0,
                true_succ="setosa8", false_succ="skip",
            ),
            "setosa8": ResultNode(weights={"setosa": 8.0}),
            "skip": ResultNode(weights={}),
        },
    )
    validate_diagram(model)
    return model


def tree_diagrams() -> dict[str, DiagramModel]:
    return forest_to_diagrams(forest())


def all_diagrams() -> dict[str, DiagramModel]:
    diagrams = tree_diagrams()
    diagrams["Expert"] = expert_diagram()
    return diagrams


def write_workspace(directory: str | Path) -> list[Path]:
    """Materialize the fixture files in a workspace directory."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []

    def write(name: str, text: str) -> None:
        path = directory / name
        path.write_text(text)
        written.append(path)

    write(DECLARATION_FILE, declaration_to_json(declaration()))
    for name, model in all_diagrams().items():
        write(f"{name}.dd.json", diagram_to_json(model, decl_ref=DECLARATION_FILE))
    write(FOREST_FILE, forest_to_json(forest()))
    write(COMPOSITION_FILE, COMPOSITION + "\n")
    return written
