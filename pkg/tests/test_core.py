"""Kernel tests: hash consing, reduction, lifted operations, canonicity."""

import random

import pytest

from algdd.algebra import boolean_algebra, real_algebra, weights_algebra
from algdd.core import Manager, NodeCount, ordered_predicates
from algdd.errors import (
    ConfigurationError,
    DomainError,
    InputError,
    OwnershipError,
)

from helpers import all_assignments, full_table

BOOLS3 = [("x1", 0.5), ("x2", 0.5), ("x3", 0.5)]


def boolean_manager(n=3):
    return Manager(boolean_algebra(), BOOLS3[:n])


def real_manager(n=3):
    return Manager(real_algebra(), BOOLS3[:n])


class TestConstants:
    def test_hash_consing(self):
        mgr = real_manager()
        assert mgr.constant(0.0) == mgr.constant(0)
        assert mgr.constant(0.0) != mgr.constant(1.0)

    def test_vector_terminal(self):
        mgr = Manager(weights_algebra(3))
        ref = mgr.constant((1, 0, 0))
        assert ref.is_terminal and ref.value == (1.0, 0.0, 0.0)

    def test_carrier_mismatch(self):
        with pytest.raises(DomainError):
            boolean_manager().constant(1.5)
        with pytest.raises(DomainError):
            Manager(weights_algebra(2)).constant(True)

    def test_three_distinct_arithmetic_terminals(self):
        mgr = real_manager()
        refs = {mgr.constant(v).index for v in (0, 1, 2)}
        assert len(refs) == 3


class TestMk:
    def test_redundant_test_elimination(self):
        mgr = boolean_manager()
        t = mgr.constant(True)
        assert mgr.mk(0, t, t) == t

    def test_uniqueness(self):
        mgr = boolean_manager()
        a, b = mgr.constant(True), mgr.constant(False)
        assert mgr.mk(1, a, b) == mgr.mk(1, a, b)

    def test_ordering_violation_is_an_assertion(self):
        mgr = boolean_manager()
        upper = mgr.var(0)
        with pytest.raises(AssertionError):
            mgr.mk(1, upper, mgr.constant(False))


class TestBooleanAndOrExample:
    """(x1 and x2) or x3: three inner nodes over terminals {0, 1}."""

    def build(self, mgr):
        return mgr.apply2(
            "or", mgr.apply2("and", mgr.var(0), mgr.var(1)), mgr.var(2)
        )

    def test_structure(self):
        mgr = boolean_manager()
        f = self.build(mgr)
        assert mgr.node_count(f) == NodeCount(inner=3, terminal=2)

    def test_semantics_exhaustive(self):
        mgr = boolean_manager()
        f = self.build(mgr)
        for bits in all_assignments(3):
            expected = (bits[0] and bits[1]) or bits[2]
            assert mgr.eval_assignment(f, bits) == expected

    def test_matches_truth_table_construction(self):
        mgr = boolean_manager()
        table = [(b[0] and b[1]) or b[2] for b in all_assignments(3)]
        assert mgr.build_from_table(table) == self.build(mgr)
        mgr.check_invariants()


class TestArithmeticExample:
    """(x1 * x2) + x3 with 0/1 inputs: four inner nodes, terminals {0, 1, 2}."""

    def build(self, mgr):
        return mgr.apply2(
            "+", mgr.apply2("*", mgr.var(0), mgr.var(1)), mgr.var(2)
        )

    def test_structure_and_terminals(self):
        mgr = real_manager()
        f = self.build(mgr)
        assert mgr.node_count(f) == NodeCount(inner=4, terminal=3)
        assert sorted(mgr.terminal_values(f)) == [0.0, 1.0, 2.0]

    def test_semantics(self):
        mgr = real_manager()
        f = self.build(mgr)
        assert mgr.eval_assignment(f, [True, True, True]) == 2.0
        for bits in all_assignments(3):
            expected = float(bits[0] * bits[1] + bits[2])
            assert mgr.eval_assignment(f, bits) == expected


class TestApply:
    def test_or_with_zero_is_identity(self):
        mgr = boolean_manager()
        f = mgr.apply2("and", mgr.var(0), mgr.var(2))
        assert mgr.apply2("or", f, mgr.constant(False)) == f

    def test_unknown_operation(self):
        mgr = boolean_manager()
        with pytest.raises(ConfigurationError):
            mgr.apply2("nand", mgr.var(0), mgr.var(1))

    def test_cross_manager_operands_rejected(self):
        a, b = boolean_manager(), boolean_manager()
        with pytest.raises(OwnershipError):
            a.apply2("and", a.var(0), b.var(0))

    def test_one_hot_sum_gives_vote_counts(self):
        # Two "trees": x1 picks between one-hot vectors; their sum must
        # tally votes pointwise (checked by exhaustive enumeration).
        mgr = Manager(weights_algebra(2), BOOLS3[:2])
        t1 = mgr.mk(0, mgr.constant((1, 0)), mgr.constant((0, 1)))
        t2 = mgr.mk(1, mgr.constant((0, 1)), mgr.constant((0, 1)))
        agg = mgr.apply2("+", t1, t2)
        for bits in all_assignments(2):
            votes = [0, 0]
            votes[0 if bits[0] else 1] += 1
            votes[1] += 1
            assert mgr.eval_assignment(agg, bits) == tuple(float(v) for v in votes)

    def test_lifting_law_on_random_diagrams(self):
        rng = random.Random(20240817)
        for _ in range(25):
            n = rng.randint(1, 6)
            mgr = Manager(real_algebra(), [(f"x{i}", 0.5) for i in range(n)])
            table_f = [float(rng.randint(-3, 3)) for _ in range(1 << n)]
            table_g = [float(rng.randint(-3, 3)) for _ in range(1 << n)]
            f = mgr.build_from_table(table_f)
            g = mgr.build_from_table(table_g)
            for op in ("+", "-", "*"):
                fn = mgr.algebra.binary(op)
                result = full_table(mgr, mgr.apply2(op, f, g))
                for rv, fv, gv in zip(result, table_f, table_g):
                    assert rv == fn(fv, gv)
            mgr.check_invariants()

    def test_apply1_norm_single_terminal(self):
        mgr = Manager(weights_algebra(3))
        ref = mgr.apply1("norm", mgr.constant((1, 1, 2)))
        assert ref.value == (0.25, 0.25, 0.5)

    def test_apply1_not_is_involution(self):
        mgr = boolean_manager()
        f = mgr.apply2("or", mgr.var(0), mgr.var(1))
        assert mgr.apply1("not", mgr.apply1("not", f)) == f

    def test_apply1_merges_terminals(self):
        # Distinct vote counts can normalize to the same distribution.
        mgr = Manager(weights_algebra(2), BOOLS3[:1])
        f = mgr.mk(0, mgr.constant((1, 1)), mgr.constant((2, 2)))
        normed = mgr.apply1("norm", f)
        assert normed.is_terminal and normed.value == (0.5, 0.5)

    def test_apply1_norm_terminal_sums(self):
        mgr = Manager(weights_algebra(3), BOOLS3)
        t = [mgr.var(i) for i in range(3)]
        hot = [
            mgr.apply2("*", v, mgr.constant(tuple(1.0 if j == i else 0.0 for j in range(3))))
            for i, v in enumerate(t)
        ]
        agg = mgr.apply2("+", mgr.apply2("+", hot[0], hot[1]), hot[2])
        normed = mgr.apply1("norm", agg)
        for value in mgr.terminal_values(normed):
            total = sum(value)
            assert total == 0.0 or abs(total - 1.0) <= 1e-9


class TestEvaluation:
    def test_constant_ignores_assignment(self):
        mgr = boolean_manager()
        assert mgr.eval_assignment(mgr.constant(True), []) is True

    def test_missing_variable(self):
        mgr = boolean_manager()
        f = mgr.var(2)
        with pytest.raises(InputError):
            mgr.eval_assignment(f, {0: True})

    def test_feature_boundary_goes_true(self):
        mgr = Manager(weights_algebra(2), [("petal_length", 2.45)])
        f = mgr.mk(0, mgr.constant((1, 0)), mgr.constant((0, 1)))
        assert mgr.eval_features(f, {"petal_length": 1.0}) == (1.0, 0.0)
        assert mgr.eval_features(f, {"petal_length": 2.45}) == (1.0, 0.0)
        assert mgr.eval_features(f, {"petal_length": 3.0}) == (0.0, 1.0)

    def test_missing_feature(self):
        mgr = Manager(weights_algebra(2), [("petal_length", 2.45)])
        f = mgr.mk(0, mgr.constant((1, 0)), mgr.constant((0, 1)))
        with pytest.raises(InputError):
            mgr.eval_features(f, {"petal_width": 1.0})


class TestInspection:
    def test_constant_counts(self):
        mgr = boolean_manager()
        assert mgr.node_count(mgr.constant(True)) == NodeCount(inner=0, terminal=1)

    def test_iter_nodes_topological(self):
        mgr = real_manager()
        f = mgr.apply2("+", mgr.apply2("*", mgr.var(0), mgr.var(1)), mgr.var(2))
        order = mgr.iter_nodes(f)
        position = {ref.index: i for i, ref in enumerate(order)}
        assert order[0] == f
        assert len(position) == len(order)
        for ref in order:
            if not ref.is_terminal:
                assert position[ref.index] < position[ref.hi.index]
                assert position[ref.index] < position[ref.lo.index]
                # Edges respect the variable order.
                for child in (ref.hi, ref.lo):
                    assert child.is_terminal or child.var_index > ref.var_index

    def test_iter_nodes_deterministic(self):
        mgr = real_manager()
        f = mgr.apply2("+", mgr.var(0), mgr.var(2))
        assert [r.index for r in mgr.iter_nodes(f)] == [
            r.index for r in mgr.iter_nodes(f)
        ]


class TestBuildFromTable:
    def test_constant_table(self):
        mgr = boolean_manager()
        assert mgr.build_from_table([True] * 8) == mgr.constant(True)

    def test_xor_has_three_inner_nodes(self):
        mgr = boolean_manager(2)
        table = [b[0] != b[1] for b in all_assignments(2)]
        f = mgr.build_from_table(table)
        assert mgr.node_count(f) == NodeCount(inner=3, terminal=2)

    def test_wrong_length(self):
        with pytest.raises(InputError):
            boolean_manager().build_from_table([True, False])

    def test_canonicity_all_two_variable_functions(self):
        # Semantic equality must coincide with handle equality.
        mgr = boolean_manager(2)
        tables = [
            [bool((i >> (3 - a)) & 1) for a in range(4)] for i in range(16)
        ]
        refs = [mgr.build_from_table(t) for t in tables]
        for i in range(16):
            for j in range(16):
                assert (refs[i] == refs[j]) == (tables[i] == tables[j])
        mgr.check_invariants()


class TestIte:
    def test_matches_shannon_semantics(self):
        rng = random.Random(7)
        mgr = boolean_manager()
        for _ in range(50):
            t = mgr.build_from_table([rng.random() < 0.5 for _ in range(8)])
            e = mgr.build_from_table([rng.random() < 0.5 for _ in range(8)])
            v = rng.randrange(3)
            result = mgr.ite(v, t, e)
            for bits in all_assignments(3):
                expected = mgr.eval_assignment(t if bits[v] else e, bits)
                assert mgr.eval_assignment(result, bits) == expected
        mgr.check_invariants()

    def test_out_of_order_condition(self):
        # The condition variable sits below the operands' top variables.
        mgr = boolean_manager()
        t = mgr.var(0)
        e = mgr.apply1("not", mgr.var(0))
        result = mgr.ite(2, t, e)
        for bits in all_assignments(3):
            expected = bits[0] if bits[2] else (not bits[0])
            assert mgr.eval_assignment(result, bits) == expected


class TestCache:
    def test_clearing_preserves_identity(self):
        mgr = real_manager()
        f = mgr.apply2("*", mgr.var(0), mgr.var(1))
        g = mgr.apply2("+", f, mgr.var(2))
        mgr.clear_cache()
        assert mgr.apply2("+", f, mgr.var(2)) == g

    def test_repeated_calls_hit_cache(self):
        mgr = real_manager()
        f = mgr.apply2("*", mgr.var(0), mgr.var(1))
        before = len(mgr)
        assert mgr.apply2("*", mgr.var(0), mgr.var(1)) == f
        assert len(mgr) == before


class TestPruneInfeasible:
    def build_with_infeasible_path(self, mgr):
        # f <= 2 true followed by f <= 5 is decided: the false branch is
        # unreachable by any real input.
        inner = mgr.mk(1, mgr.constant((1, 0)), mgr.constant((0, 1)))
        return mgr.mk(0, inner, mgr.constant((0, 1)))

    def test_implied_true_branch_collapses(self):
        mgr = Manager(weights_algebra(2), [("f", 2.0), ("f", 5.0)])
        f = self.build_with_infeasible_path(mgr)
        pruned = mgr.prune_infeasible(f)
        assert mgr.node_count(pruned).inner == 1
        assert mgr.node_count(f).inner == 2
        for x in ({"f": 1.0}, {"f": 2.0}, {"f": 3.0}, {"f": 5.0}, {"f": 9.0}):
            assert mgr.eval_features(pruned, x) == mgr.eval_features(f, x)

    def test_implied_false_branch_collapses(self):
        # Variables registered out of canonical order put f <= 5 above
        # f <= 2; then the f > 5 branch decides the deeper test (false).
        mgr = Manager(weights_algebra(2), [("f", 5.0), ("f", 2.0)])
        inner = mgr.mk(1, mgr.constant((1, 0)), mgr.constant((0, 1)))
        f = mgr.mk(0, mgr.constant((1, 0)), inner)
        pruned = mgr.prune_infeasible(f)
        assert mgr.node_count(pruned).inner == 1
        for x in ({"f": 1.0}, {"f": 2.0}, {"f": 4.0}, {"f": 5.0}, {"f": 7.0}):
            assert mgr.eval_features(pruned, x) == mgr.eval_features(f, x)

    def test_feasible_only_diagram_unchanged(self):
        mgr = Manager(weights_algebra(2), [("f", 2.0), ("g", 5.0)])
        inner = mgr.mk(1, mgr.constant((1, 0)), mgr.constant((0, 1)))
        f = mgr.mk(0, inner, mgr.constant((0, 1)))
        assert mgr.prune_infeasible(f) == f

    def test_idempotent(self):
        mgr = Manager(weights_algebra(2), [("f", 2.0), ("f", 5.0)])
        f = self.build_with_infeasible_path(mgr)
        once = mgr.prune_infeasible(f)
        assert mgr.prune_infeasible(once) == once


class TestOrderedPredicates:
    def test_declaration_order_then_threshold(self):
        pairs = [("b", 5.0), ("a", 2.0), ("b", 1.0), ("a", 0.5)]
        assert ordered_predicates(["a", "b"], pairs) == [
            ("a", 0.5),
            ("a", 2.0),
            ("b", 1.0),
            ("b", 5.0),
        ]

    def test_duplicates_collapse(self):
        assert ordered_predicates(["a"], [("a", 1.0), ("a", 1.0)]) == [("a", 1.0)]

    def test_undeclared_feature(self):
        with pytest.raises(ConfigurationError):
            ordered_predicates(["a"], [("zz", 1.0)])

    def test_duplicate_variable_registration(self):
        with pytest.raises(ConfigurationError):
            Manager(boolean_algebra(), [("x", 1.0), ("x", 1.0)])
