"""The same kernel, four carrier sets.

The diagram algorithms never look inside terminal values; they only call
the algebra's named operations.  So the one kernel serves classical logic,
probabilistic fuzzy logic (certainties in [0, 1] with a*b as conjunction),
plain real arithmetic, and per-category weight vectors with an explicit
normalization step.  Even an RGB color mixer is just the vector algebra
with components read as [0..255] channels.
"""

from algdd import (
    Manager,
    fuzzy_algebra,
    weights_algebra,
)

VARS = [("urgent_words", 0.5), ("known_sender", 0.5)]


def fuzzy_demo():
    print("== probabilistic fuzzy logic ==")
    mgr = Manager(fuzzy_algebra(), VARS)
    # A spam score: "urgent wording AND NOT a known sender", but every
    # test only shifts certainty instead of deciding outright.
    urgent = mgr.mk(0, mgr.constant(0.9), mgr.constant(0.2))
    stranger = mgr.apply1("not", mgr.mk(1, mgr.constant(0.95), mgr.constant(0.1)))
    spam = mgr.apply2("and", urgent, stranger)
    for u in (False, True):
        for k in (False, True):
            score = mgr.eval_assignment(spam, [u, k])
            print(f"  urgent={int(u)} known={int(k)} -> spam certainty {score:.3f}")
    print(f"  terminals: {sorted(mgr.terminal_values(spam))}")


def color_demo():
    print("\n== RGB colors are vectors too ==")
    rgb = weights_algebra(("red", "green", "blue"))
    mgr = Manager(rgb, VARS)
    warm = mgr.mk(0, mgr.constant((200.0, 60.0, 0.0)), mgr.constant((40.0, 40.0, 40.0)))
    tint = mgr.constant((55.0, 0.0, 120.0))
    mixed = mgr.apply2("+", warm, tint)
    for u in (False, True):
        print(f"  urgent={int(u)} -> {mgr.eval_assignment(mixed, [u, False])}")


def weights_demo():
    print("\n== category weights with normalization ==")
    alg = weights_algebra(("cat", "dog", "bird"))
    mgr = Manager(alg, VARS)
    votes = mgr.mk(0, mgr.constant((3.0, 1.0, 0.0)), mgr.constant((1.0, 1.0, 2.0)))
    shares = mgr.apply1("norm", votes)
    for u in (False, True):
        print(f"  raw votes   {mgr.eval_assignment(votes, [u, False])}")
        print(f"  vote shares {mgr.eval_assignment(shares, [u, False])}")


if __name__ == "__main__":
    fuzzy_demo()
    color_demo()
    weights_demo()
