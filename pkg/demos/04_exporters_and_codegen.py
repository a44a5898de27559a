"""Exporters: dot, the graph interchange document, and generated code.

All three walk the diagram once per shared node.  The C evaluator is a
goto program (one label per node, conditional jumps); JavaScript has no
goto, so its evaluator loops over a node-id switch, which is the same
control flow spelled structurally.  Sources land in demos/out/.
"""

from pathlib import Path

from algdd import compose, generate_code, to_dot, to_graph_doc
from algdd.iris import COMPOSITION, all_diagrams, declaration

OUT = Path(__file__).parent / "out"


def main():
    decl = declaration()
    mgr, root = compose(decl, all_diagrams(), COMPOSITION)
    counts = mgr.node_count(root)
    OUT.mkdir(exist_ok=True)

    dot_text = to_dot(mgr, root, name="iris_composed")
    (OUT / "iris_composed.dot").write_text(dot_text)
    print(f"dot: {counts.total} nodes, {2 * counts.inner} edges "
          f"-> {OUT / 'iris_composed.dot'}")
    print("  render with: dot -Tpng -O demos/out/iris_composed.dot")

    doc_text = to_graph_doc(mgr, root, feature_order=decl.features)
    (OUT / "iris_composed.graph.json").write_text(doc_text)
    print(f"graph document: {len(doc_text.splitlines())} lines "
          f"-> {OUT / 'iris_composed.graph.json'}")

    for target, filename in (("c", "evaluate.c"), ("js", "evaluate.js")):
        source = generate_code(mgr, root, target, feature_order=decl.features)
        (OUT / filename).write_text(source)
        blocks = counts.inner + counts.terminal
        print(f"{target}: {blocks} node blocks -> {OUT / filename}")

    print("\nfirst lines of the C evaluator:")
    for line in (OUT / "evaluate.c").read_text().splitlines()[:14]:
        print(f"  {line}")


if __name__ == "__main__":
    main()
