"""Two classic diagrams, side by side.

A decision diagram stores a function of Boolean tests as a DAG: one test
per node, shared subgraphs, and one terminal per distinct output value.
Because the store is hash-consed and reduced, each function has exactly
one diagram, so building "(x1 and x2) or x3" twice yields the same handle.

Swapping the algebra changes nothing structural: the arithmetic twin
"(x1 * x2) + x3" over 0/1-valued inputs needs one more inner node and a
third terminal for the value 2, and that is the entire difference.
"""

from algdd import Manager, boolean_algebra, real_algebra, to_dot

VARS = [("x1", 0.5), ("x2", 0.5), ("x3", 0.5)]


def main():
    mgr = Manager(boolean_algebra(), VARS)
    x1, x2, x3 = (mgr.var(i) for i in range(3))
    f = mgr.apply2("or", mgr.apply2("and", x1, x2), x3)

    counts = mgr.node_count(f)
    print(f"(x1 and x2) or x3 -> {counts.inner} inner nodes, {counts.terminal} terminals")
    print("truth table:")
    for a in (False, True):
        for b in (False, True):
            for c in (False, True):
                value = mgr.eval_assignment(f, [a, b, c])
                print(f"  {int(a)}{int(b)}{int(c)} -> {int(value)}")

    # Canonicity in action: an independently built diagram is the same object.
    again = mgr.apply2("or", x3, mgr.apply2("and", x2, x1))
    print(f"rebuilt commuted variant is the identical handle: {again == f}")

    arith = Manager(real_algebra(), VARS)
    y1, y2, y3 = (arith.var(i) for i in range(3))
    g = arith.apply2("+", arith.apply2("*", y1, y2), y3)
    counts = arith.node_count(g)
    print(f"\n(x1 * x2) + x3  -> {counts.inner} inner nodes, {counts.terminal} terminals")
    print(f"terminal values: {sorted(arith.terminal_values(g))}")
    print(f"eval at (1,1,1): {arith.eval_assignment(g, [True, True, True])}")

    print("\ndot output for the Boolean diagram:\n")
    print(to_dot(mgr, f, name="and_or"))


if __name__ == "__main__":
    main()
