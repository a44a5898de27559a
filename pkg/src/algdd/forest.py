"""Random-forest import, tree-to-diagram transformation, and aggregation.

A forest is an ordered list of plain decision trees with categorical
leaves.  Each tree becomes a diagram whose leaves are one-hot weight
vectors (1 for the voted category); summing those diagrams component-wise
yields a single diagram whose terminals are exact vote counts, and the
predicted category is the argmax.  :func:`vote_oracle` reimplements
plurality voting by direct tree traversal and serves as the independent
reference the aggregation pipeline is tested against.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

from .core import Manager, NodeRef
from .errors import InputError, ParseError, ValidationError
from .models import (
    Declaration,
    DiagramModel,
    PredicateNode,
    ResultNode,
    load_declaration,
    validate_diagram,
)


class Leaf:
    __slots__ = ("category",)

    def __init__(self, category: str):
        self.category = category

    def __eq__(self, other):
        return isinstance(other, Leaf) and other.category == self.category

    def __repr__(self):
        return f"Leaf({self.category!r})"


class Split:
    """Binary test: ``feature <= threshold`` takes the true child."""

    __slots__ = ("feature", "threshold", "true_child", "false_child")

    def __init__(self, feature, threshold, true_child, false_child):
        self.feature = feature
        self.threshold = float(threshold)
        self.true_child = true_child
        self.false_child = false_child

    def __eq__(self, other):
        return (
            isinstance(other, Split)
            and other.feature == self.feature
            and other.threshold == self.threshold
            and other.true_child == self.true_child
            and other.false_child == self.false_child
        )

    def __repr__(self):
        return (
            f"Split({self.feature!r}, {self.threshold!r}, "
            f"{self.true_child!r}, {self.false_child!r})"
        )


TreeModel = object  # Leaf | Split


@dataclass(frozen=True)
class ForestModel:
    declaration: Declaration
    trees: tuple


@dataclass(frozen=True)
class ClassificationResult:
    """Predicted category plus the weight vector of the reached terminal."""

    category: str
    weights: tuple[float, ...]


def argmax_index(weights: Sequence[float]) -> int:
    """Index of the largest component; ties go to the lowest index."""
    best = 0
    for i in range(1, len(weights)):
        if weights[i] > weights[best]:
            best = i
    return best


def _parse_tree(raw, decl: Declaration, path: str) -> TreeModel:
    if not isinstance(raw, dict):
        raise ParseError(f"tree node at {path} must be an object", location=path)
    if "leaf" in raw:
        category = raw["leaf"]
        if category not in decl.categories:
            raise ValidationError(
                f"unresolved reference: category '{category}' at {path}",
                location=path,
            )
        return Leaf(category)
    for key in ("feature", "threshold", "true", "false"):
        if key not in raw:
            raise ParseError(f"tree node at {path}: missing '{key}'", location=path)
    if raw["feature"] not in decl.features:
        raise ValidationError(
            f"unresolved reference: feature '{raw['feature']}' at {path}",
            location=path,
        )
    threshold = raw["threshold"]
    if isinstance(threshold, bool) or not isinstance(threshold, (int, float)):
        raise ParseError(f"tree node at {path}: threshold must be a number", location=path)
    return Split(
        raw["feature"],
        threshold,
        _parse_tree(raw["true"], decl, path + ".true"),
        _parse_tree(raw["false"], decl, path + ".false"),
    )


def parse_forest(text: str, decl: Declaration | None = None,
                 *, base_dir: str | Path | None = None) -> ForestModel:
    """Parse a forest document: {"declaration": ..., "trees": [tree, ...]}."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed forest document: {exc.msg}", location=exc.pos) from None
    if not isinstance(doc, dict):
        raise ParseError("forest document must be an object")
    if decl is None:
        embedded = doc.get("declaration")
        if isinstance(embedded, dict):
            decl = Declaration(
                tuple(embedded.get("features", ())),
                tuple(embedded.get("categories", ())),
            )
        elif isinstance(embedded, str):
            decl = load_declaration(Path(base_dir or ".") / embedded)
        else:
            raise ParseError("forest document has no usable 'declaration'")
    trees = doc.get("trees")
    if not isinstance(trees, list) or not trees:
        raise ParseError("forest document needs a non-empty 'trees' list")
    parsed = tuple(
        _parse_tree(t, decl, f"trees[{i}]") for i, t in enumerate(trees)
    )
    return ForestModel(declaration=decl, trees=parsed)


def _tree_to_json(tree: TreeModel):
    if isinstance(tree, Leaf):
        return {"leaf": tree.category}
    return {
        "feature": tree.feature,
        "threshold": tree.threshold,
        "true": _tree_to_json(tree.true_child),
        "false": _tree_to_json(tree.false_child),
    }


def forest_to_json(forest: ForestModel) -> str:
    doc = {
        "declaration": {
            "features": list(forest.declaration.features),
            "categories": list(forest.declaration.categories),
        },
        "trees": [_tree_to_json(t) for t in forest.trees],
    }
    return json.dumps(doc, indent=2) + "\n"


def load_forest(path: str | Path, decl: Declaration | None = None) -> ForestModel:
    path = Path(path)
    return parse_forest(path.read_text(), decl, base_dir=path.parent)


def tree_to_diagram(tree: TreeModel, decl: Declaration, name: str) -> DiagramModel:
    """Diagram model isomorphic to the tree, with one-hot result leaves."""
    nodes: dict[str, object] = {}

    def rec(node: TreeModel) -> str:
        nid = f"n{len(nodes)}"
        if isinstance(node, Leaf):
            nodes[nid] = ResultNode(weights={node.category: 1.0})
        else:
            nodes[nid] = None  # reserve the id so preorder numbering holds
            true_id = rec(node.true_child)
            false_id = rec(node.false_child)
            nodes[nid] = PredicateNode(
                feature=node.feature,
                threshold=node.threshold,
                true_succ=true_id,
                false_succ=false_id,
            )
        return nid

    root = rec(tree)
    model = DiagramModel(name=name, declaration=decl, root=root, nodes=nodes)
    validate_diagram(model)
    return model


def forest_to_diagrams(forest: ForestModel, prefix: str = "T") -> dict[str, DiagramModel]:
    """One diagram model per tree, named ``T1..Tk`` in forest order."""
    return {
        f"{prefix}{i + 1}": tree_to_diagram(tree, forest.declaration, f"{prefix}{i + 1}")
        for i, tree in enumerate(forest.trees)
    }


def aggregate(mgr: Manager, diagrams: Sequence[NodeRef]) -> NodeRef:
    """Left fold of component-wise addition; terminals become vote counts."""
    if not diagrams:
        raise InputError("cannot aggregate an empty list of diagrams")
    acc = diagrams[0]
    for ref in diagrams[1:]:
        acc = mgr.apply2("+", acc, ref)
    return acc


def classify(
    mgr: Manager, f: NodeRef, x: Mapping[str, float], decl: Declaration
) -> ClassificationResult:
    """Evaluate a weight-vector diagram and pick the argmax category."""
    weights = mgr.eval_features(f, x)
    if not isinstance(weights, tuple) or len(weights) != len(decl.categories):
        raise InputError("diagram does not evaluate to per-category weights")
    return ClassificationResult(
        category=decl.categories[argmax_index(weights)],
        weights=weights,
    )


def vote_oracle(forest: ForestModel, x: Mapping[str, float]) -> str:
    """Plurality vote by direct tree traversal (the independent reference).

    Uses the same ``feature <= threshold`` branch convention and the same
    lowest-index tie-break as the diagram pipeline.
    """
    counts = [0] * len(forest.declaration.categories)
    index = {c: i for i, c in enumerate(forest.declaration.categories)}
    for tree in forest.trees:
        node = tree
        while isinstance(node, Split):
            try:
                xv = x[node.feature]
            except KeyError:
                raise InputError(
                    f"input is missing feature '{node.feature}'"
                ) from None
            node = node.true_child if xv <= node.threshold else node.false_child
        counts[index[node.category]] += 1
    return forest.declaration.categories[argmax_index(counts)]
