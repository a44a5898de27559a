"""Shared oracles, generators, and harnesses for the test suite.

Everything here is deliberately independent of the code paths it checks:
the table expansion walks raw node links, the model/tree walks interpret
the user-facing models directly, and the generated-code harnesses go
through the system toolchain.
"""

from __future__ import annotations

import re
import subprocess
from itertools import product
from pathlib import Path

from algdd.forest import Leaf, Split, ForestModel
from algdd.models import Declaration, DiagramModel, PredicateNode

#: Fixed threshold grid for random models, so duplicate predicates occur.
THRESHOLD_GRID = (0.5, 1.5, 2.5, 3.5, 4.5)


# --------------------------------------------------------------------------
# semantic oracles


def all_assignments(n: int):
    """All truth assignments, in the table-index order (variable 0 is the
    most significant bit)."""
    for i in range(1 << n):
        yield [bool((i >> (n - 1 - v)) & 1) for v in range(n)]


def full_table(mgr, ref) -> list:
    """Expand a diagram into its complete value table by walking raw node
    links (no apply, no eval); index convention matches all_assignments."""
    n = len(mgr.variables)

    def expand(r, level):
        if level == n:
            assert r.is_terminal
            return [r.value]
        if r.is_terminal or r.var_index > level:
            half = expand(r, level + 1)
            return half + half
        return expand(r.lo, level + 1) + expand(r.hi, level + 1)

    return expand(ref, 0)


def model_walk(model: DiagramModel, x) -> tuple:
    """Interpret a diagram model directly on a feature vector."""
    node = model.nodes[model.root]
    while isinstance(node, PredicateNode):
        taken = x[node.feature] <= node.threshold
        node = model.nodes[node.true_succ if taken else node.false_succ]
    return node.weight_vector(model.declaration)


def tree_walk(tree, x) -> str:
    """Interpret a forest tree directly on a feature vector."""
    node = tree
    while isinstance(node, Split):
        node = node.true_child if x[node.feature] <= node.threshold else node.false_child
    return node.category


# --------------------------------------------------------------------------
# random model generation (seeded by the caller)


def random_tree(rng, features, categories, max_depth, leaf_p=0.3):
    if max_depth == 0 or rng.random() < leaf_p:
        return Leaf(rng.choice(categories))
    return Split(
        rng.choice(features),
        rng.choice(THRESHOLD_GRID),
        random_tree(rng, features, categories, max_depth - 1, leaf_p),
        random_tree(rng, features, categories, max_depth - 1, leaf_p),
    )


def random_forest_model(
    rng, *, max_trees=50, max_depth=8, max_features=10, n_categories=None
) -> ForestModel:
    n_features = rng.randint(1, max_features)
    n_cats = n_categories or rng.randint(2, 4)
    decl = Declaration(
        features=tuple(f"f{i}" for i in range(n_features)),
        categories=tuple(f"c{i}" for i in range(n_cats)),
    )
    n_trees = rng.randint(1, max_trees)
    trees = tuple(
        random_tree(rng, decl.features, decl.categories, rng.randint(1, max_depth))
        for _ in range(n_trees)
    )
    return ForestModel(declaration=decl, trees=trees)


def random_input(rng, features) -> dict:
    # Land exactly on grid thresholds sometimes, to exercise the <= boundary.
    return {
        f: rng.choice(THRESHOLD_GRID) if rng.random() < 0.2 else rng.uniform(0.0, 5.0)
        for f in features
    }


#: Forest profiles for the semantics-preservation suite.  Aggregated vote
#: diagrams grow exponentially in the number of distinct predicates (the
#: kernel has no reordering or path pruning by design), so the sampler
#: pushes each bound (50 trees, depth 8, 10 features) in a profile where
#: the other dimensions stay small enough to aggregate in milliseconds.
_FOREST_PROFILES = (
    # (min_trees, max_trees, min_feats, max_feats, min_depth, max_depth)
    (20, 50, 1, 3, 2, 8),   # many trees over a narrow predicate space
    (2, 8, 6, 10, 2, 4),    # wide feature space, few trees
    (3, 12, 2, 4, 6, 8),    # deep trees
    (5, 18, 3, 5, 3, 5),    # balanced middle
)


def sample_bounded_forest(
    rng, *, profile=None, trees=None, features=None, depth=None
) -> ForestModel:
    """Draw one forest; explicit keyword values pin a bound exactly."""
    if profile is None:
        profile = rng.randrange(len(_FOREST_PROFILES))
    lo_t, hi_t, lo_f, hi_f, lo_d, hi_d = _FOREST_PROFILES[profile]
    n_features = features if features is not None else rng.randint(lo_f, hi_f)
    decl = Declaration(
        features=tuple(f"f{i}" for i in range(n_features)),
        categories=tuple(f"c{i}" for i in range(rng.randint(2, 4))),
    )
    n_trees = trees if trees is not None else rng.randint(lo_t, hi_t)
    tree_list = tuple(
        random_tree(
            rng,
            decl.features,
            decl.categories,
            depth if depth is not None else rng.randint(lo_d, hi_d),
        )
        for _ in range(n_trees)
    )
    return ForestModel(declaration=decl, trees=tree_list)


def feasible_cells(features, pairs):
    """Representative feature vectors, one per cell of the partition the
    predicates induce.  Every feasible combination of predicate outcomes is
    realized by exactly one representative."""
    per_feature: dict[str, list[float]] = {f: [] for f in features}
    for feature, threshold in pairs:
        per_feature[feature].append(threshold)
    axes = []
    for f in features:
        thresholds = sorted(set(per_feature[f]))
        reps = thresholds + [(thresholds[-1] + 1.0) if thresholds else 0.0]
        axes.append([(f, v) for v in reps])
    for combo in product(*axes):
        yield dict(combo)


# --------------------------------------------------------------------------
# dot grammar checker


_DOT_HEADER = re.compile(r'^digraph "(?P<name>(?:[^"\\]|\\.)*)" \{$')
_DOT_NODE = re.compile(
    r'^  (?P<id>n\d+) \[label="(?P<label>(?:[^"\\]|\\.)*)", shape=(?P<shape>box|ellipse)\];$'
)
_DOT_EDGE = re.compile(
    r"^  (?P<src>n\d+) -> (?P<dst>n\d+)(?P<dashed> \[style=dashed\])?;$"
)


def parse_dot(text: str):
    """Validate emitted dot text against the digraph grammar subset we emit;
    returns (nodes, edges) with shapes and edge styles."""
    lines = text.splitlines()
    assert lines, "empty dot output"
    assert _DOT_HEADER.match(lines[0]), f"bad header: {lines[0]!r}"
    assert lines[-1] == "}", f"bad footer: {lines[-1]!r}"
    assert text.endswith("}\n")
    nodes: dict[str, tuple[str, str]] = {}
    edges: list[tuple[str, str, bool]] = []
    for line in lines[1:-1]:
        m = _DOT_NODE.match(line)
        if m:
            assert m["id"] not in nodes, f"duplicate node {m['id']}"
            nodes[m["id"]] = (m["label"], m["shape"])
            continue
        m = _DOT_EDGE.match(line)
        if m:
            edges.append((m["src"], m["dst"], bool(m["dashed"])))
            continue
        raise AssertionError(f"line matches no dot rule: {line!r}")
    for src, dst, _ in edges:
        assert src in nodes and dst in nodes, f"edge {src}->{dst} references unknown node"
    return nodes, edges


# --------------------------------------------------------------------------
# generated-code harnesses


_C_VECTOR_MAIN = """
#include <stdio.h>

int main(void) {{
    double features[{n_features}];
    for (;;) {{
        for (int i = 0; i < {n_features}; ++i) {{
            if (scanf("%lf", &features[i]) != 1) return 0;
        }}
        const double *w = evaluate(features);
        for (int i = 0; i < {dim}; ++i) {{
            printf("%.17g%c", w[i], i + 1 < {dim} ? ' ' : '\\n');
        }}
    }}
}}
"""

_C_SCALAR_MAIN = """
#include <stdio.h>

int main(void) {{
    double features[{n_features}];
    for (;;) {{
        for (int i = 0; i < {n_features}; ++i) {{
            if (scanf("%lf", &features[i]) != 1) return 0;
        }}
        printf("%.17g\\n", (double)evaluate(features));
    }}
}}
"""


def _format_inputs(inputs: list[list[float]]) -> str:
    return "\n".join(" ".join(repr(v) for v in row) for row in inputs) + "\n"


def run_c_evaluator(
    source: str, inputs: list[list[float]], tmp_path: Path, *, dim: int | None
) -> list:
    """Compile an emitted C evaluator with the system toolchain and run it
    on whitespace-separated feature rows; returns per-row outputs."""
    n_features = len(inputs[0])
    main = _C_VECTOR_MAIN if dim is not None else _C_SCALAR_MAIN
    c_file = tmp_path / "evaluator.c"
    c_file.write_text(source + main.format(n_features=n_features, dim=dim))
    binary = tmp_path / "evaluator"
    subprocess.run(
        ["cc", "-O1", "-o", str(binary), str(c_file)],
        check=True,
        capture_output=True,
    )
    out = subprocess.run(
        [str(binary)],
        input=_format_inputs(inputs),
        capture_output=True,
        text=True,
        check=True,
    ).stdout
    rows = [line.split() for line in out.strip().splitlines()]
    if dim is None:
        return [float(row[0]) for row in rows]
    return [tuple(float(v) for v in row) for row in rows]


_JS_MAIN = """
const lines = require("fs").readFileSync(0, "utf8").trim().split("\\n");
for (const line of lines) {
    if (!line) continue;
    const features = line.trim().split(/\\s+/).map(Number);
    const w = evaluate(features);
    if (Array.isArray(w)) {
        console.log(w.map(v => v.toPrecision(17)).join(" "));
    } else {
        console.log(String(Number(w)));
    }
}
"""


def run_js_evaluator(
    source: str, inputs: list[list[float]], tmp_path: Path, *, dim: int | None
) -> list:
    """Run an emitted JavaScript evaluator under node on feature rows."""
    js_file = tmp_path / "evaluator.js"
    js_file.write_text(source + _JS_MAIN)
    out = subprocess.run(
        ["node", str(js_file)],
        input=_format_inputs(inputs),
        capture_output=True,
        text=True,
        check=True,
    ).stdout
    rows = out.strip().splitlines()
    if dim is None:
        return [float(row) for row in rows]
    return [tuple(float(v) for v in row.split()) for row in rows]
