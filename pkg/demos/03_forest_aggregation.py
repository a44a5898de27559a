"""From a random forest to one diagram, then overriding it with expertise.

The pipeline in five steps:

1. each decision tree becomes a diagram whose leaves are one-hot weight
   vectors (a vote for one category),
2. component-wise addition folds the trees into a single diagram whose
   terminals are exact vote counts,
3. normalization turns counts into shares in [0, 1],
4. a hand-written expert diagram is added on top; its one decisive leaf
   carries weight 8 for Setosa, which no normalized share can outvote,
   while its all-zero leaves change nothing,
5. argmax picks the category.

The demo shows an input where the forest itself says "versicolor" but the
expert rule (very broad sepals, short petals) forces "setosa", and that
removing the expert restores the forest's answer.
"""

from algdd import (
    aggregate,
    classify,
    compile_diagram,
    compose,
    manager_for,
    vote_oracle,
)
from algdd.iris import COMPOSITION, all_diagrams, declaration, forest


def main():
    decl = declaration()
    diagrams = all_diagrams()
    iris_forest = forest()

    trees = {name: diagrams[name] for name in ("T1", "T2", "T3")}
    mgr = manager_for(decl, trees.values())
    refs = [compile_diagram(mgr, m) for m in trees.values()]
    agg = aggregate(mgr, refs)
    print(f"forest of {len(refs)} trees aggregates into "
          f"{mgr.node_count(agg).total} nodes; every terminal sums to 3:")
    for value in mgr.terminal_values(agg):
        print(f"  votes {value}")

    composed_mgr, composed = compose(decl, diagrams, COMPOSITION)
    print(f"\ncomposition {COMPOSITION!r} has "
          f"{composed_mgr.node_count(composed).total} nodes")

    x = {"sepal_length": 5.0, "sepal_width": 4.0, "petal_length": 3.5, "petal_width": 1.0}
    print(f"\ninput {x}")
    print(f"  plurality vote over the raw trees: {vote_oracle(iris_forest, x)}")
    result = classify(composed_mgr, composed, x, decl)
    print(f"  with the expert diagram added:     {result.category} "
          f"(weights {result.weights})")

    forest_only_mgr, forest_only = compose(decl, diagrams, "norm(T1 + T2 + T3)")
    off_path = {"sepal_length": 6.3, "sepal_width": 2.8, "petal_length": 5.1,
                "petal_width": 1.9}
    print(f"\ninput off the expert path {off_path}")
    print(f"  forest only: {classify(forest_only_mgr, forest_only, off_path, decl).category}")
    print(f"  composed:    {classify(composed_mgr, composed, off_path, decl).category}"
          "  (all-zero expert leaves change nothing)")


if __name__ == "__main__":
    main()
