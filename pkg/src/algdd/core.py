"""Canonical decision-diagram kernel.

A :class:`Manager` owns an ordered universe of predicate variables and a
hash-consed node store.  Reduction (no duplicate nodes, no redundant tests)
is enforced at construction time, so two diagrams represent the same
function over the manager's variables if and only if their handles are
equal.  Binary and unary operations on the terminal algebra are lifted to
diagrams by memoized Shannon expansion.

A manager is single-threaded: callers need exclusive access for every
operation.  The node store and operation cache grow for the manager's
lifetime; there is no garbage collection of dead nodes, which is fine for
desk-scale workloads but a known scalability limitation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .algebra import Algebra
from .errors import ConfigurationError, InputError, OwnershipError

#: Variable index used for terminals when comparing levels.
_TERMINAL_LEVEL = 1 << 30


@dataclass(frozen=True)
class PredicateVar:
    """One position in the global variable order: a feature/threshold test."""

    index: int
    feature: str
    threshold: float


@dataclass(frozen=True)
class NodeCount:
    inner: int
    terminal: int

    @property
    def total(self) -> int:
        return self.inner + self.terminal


class _Node:
    __slots__ = ("var", "hi", "lo", "value")

    def __init__(self, var, hi, lo, value):
        self.var = var  # None for terminals
        self.hi = hi
        self.lo = lo
        self.value = value


class NodeRef:
    """Opaque handle to a canonical node, valid only within its manager.

    Handle equality coincides with semantic equality of the represented
    functions (for diagrams owned by the same manager).
    """

    __slots__ = ("manager", "index")

    def __init__(self, manager: "Manager", index: int):
        self.manager = manager
        self.index = index

    def __eq__(self, other):
        return (
            isinstance(other, NodeRef)
            and other.manager is self.manager
            and other.index == self.index
        )

    def __hash__(self):
        return hash((id(self.manager), self.index))

    def __repr__(self):
        node = self.manager._nodes[self.index]
        if node.var is None:
            return f"<NodeRef {self.index}: terminal {node.value!r}>"
        pv = self.manager._vars[node.var]
        return (
            f"<NodeRef {self.index}: {pv.feature}<={pv.threshold!r}"
            f" ? {node.hi} : {node.lo}>"
        )

    @property
    def is_terminal(self) -> bool:
        return self.manager._nodes[self.index].var is None

    @property
    def value(self):
        node = self.manager._nodes[self.index]
        if node.var is not None:
            raise InputError("not a terminal node")
        return node.value

    @property
    def var_index(self) -> int:
        node = self.manager._nodes[self.index]
        if node.var is None:
            raise InputError("terminal nodes have no variable")
        return node.var

    @property
    def var(self) -> PredicateVar:
        return self.manager._vars[self.var_index]

    @property
    def hi(self) -> "NodeRef":
        return NodeRef(self.manager, self.manager._nodes[self.index].hi)

    @property
    def lo(self) -> "NodeRef":
        return NodeRef(self.manager, self.manager._nodes[self.index].lo)


def ordered_predicates(
    feature_order: Sequence[str], pairs: Iterable[tuple[str, float]]
) -> list[tuple[str, float]]:
    """Sort (feature, threshold) pairs into the global variable order.

    Features follow their declaration order; within a feature, thresholds
    ascend.  This groups same-feature predicates, which both the pruning
    pass and readable dot output rely on.
    """
    position = {f: i for i, f in enumerate(feature_order)}
    unknown = [f for f, _ in pairs if f not in position]
    if unknown:
        raise ConfigurationError(f"undeclared feature(s): {sorted(set(unknown))}")
    return sorted(set(pairs), key=lambda p: (position[p[0]], p[1]))


class Manager:
    """Diagram universe: variable order, unique node table, operation cache."""

    def __init__(self, algebra: Algebra, variables: Iterable[tuple[str, float]] = ()):
        self.algebra = algebra
        self._vars: list[PredicateVar] = []
        self._var_index: dict[tuple[str, float], int] = {}
        self._nodes: list[_Node] = []
        self._terminal_ids: dict = {}  # algebra key -> node id
        self._unique: dict[tuple[int, int, int], int] = {}
        self._cache: dict = {}
        for feature, threshold in variables:
            self.add_variable(feature, threshold)

    # -- variable universe -------------------------------------------------

    def add_variable(self, feature: str, threshold: float) -> int:
        """Append a predicate variable to the order; returns its index."""
        key = (feature, float(threshold))
        if key in self._var_index:
            raise ConfigurationError(
                f"predicate {feature} <= {threshold} already registered"
            )
        index = len(self._vars)
        self._vars.append(PredicateVar(index, key[0], key[1]))
        self._var_index[key] = index
        return index

    def variable_index(self, feature: str, threshold: float) -> int:
        try:
            return self._var_index[(feature, float(threshold))]
        except KeyError:
            raise ConfigurationError(
                f"predicate {feature} <= {threshold} is not registered"
            ) from None

    @property
    def variables(self) -> tuple[PredicateVar, ...]:
        return tuple(self._vars)

    def variable(self, index: int) -> PredicateVar:
        return self._vars[index]

    # -- node construction -------------------------------------------------

    def _terminal(self, value) -> int:
        key = self.algebra.key(value)
        node_id = self._terminal_ids.get(key)
        if node_id is None:
            node_id = len(self._nodes)
            self._nodes.append(_Node(None, -1, -1, value))
            self._terminal_ids[key] = node_id
        return node_id

    def constant(self, value) -> NodeRef:
        """Canonical terminal for a carrier value (hash-consed)."""
        return NodeRef(self, self._terminal(self.algebra.validate(value)))

    def _top(self, node_id: int) -> int:
        var = self._nodes[node_id].var
        return _TERMINAL_LEVEL if var is None else var

    def _mk(self, var: int, hi: int, lo: int) -> int:
        if hi == lo:
            return hi
        if not (var < self._top(hi) and var < self._top(lo)):
            raise AssertionError(
                f"ordering violation: variable {var} above levels "
                f"{self._top(hi)}/{self._top(lo)}"
            )
        key = (var, hi, lo)
        node_id = self._unique.get(key)
        if node_id is None:
            node_id = len(self._nodes)
            self._nodes.append(_Node(var, hi, lo, None))
            self._unique[key] = node_id
        return node_id

    def mk(self, var: int, hi: NodeRef, lo: NodeRef) -> NodeRef:
        """Reduced unique node for (var, hi, lo); collapses hi == lo."""
        self._own(hi)
        self._own(lo)
        return NodeRef(self, self._mk(var, hi.index, lo.index))

    def var(self, index: int) -> NodeRef:
        """Indicator diagram for one variable: one on true, zero on false."""
        one = self._terminal(self.algebra.one)
        zero = self._terminal(self.algebra.zero)
        return NodeRef(self, self._mk(index, one, zero))

    def _own(self, ref: NodeRef) -> int:
        if not isinstance(ref, NodeRef) or ref.manager is not self:
            raise OwnershipError("node reference belongs to a different manager")
        return ref.index

    # -- lifted operations ---------------------------------------------------

    def apply2(self, op: str, f: NodeRef, g: NodeRef) -> NodeRef:
        """Lift a binary carrier operation to diagrams (memoized)."""
        fn = self.algebra.binary(op)
        return NodeRef(self, self._apply2(op, fn, self._own(f), self._own(g)))

    def _apply2(self, op: str, fn: Callable, a: int, b: int) -> int:
        key = ("b", op, a, b)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        na = self._nodes[a]
        nb = self._nodes[b]
        if na.var is None and nb.var is None:
            result = self._terminal(self.algebra.validate(fn(na.value, nb.value)))
        else:
            level = min(self._top(a), self._top(b))
            a_hi, a_lo = (na.hi, na.lo) if na.var == level else (a, a)
            b_hi, b_lo = (nb.hi, nb.lo) if nb.var == level else (b, b)
            result = self._mk(
                level,
                self._apply2(op, fn, a_hi, b_hi),
                self._apply2(op, fn, a_lo, b_lo),
            )
        self._cache[key] = result
        return result

    def apply1(self, op: str, f: NodeRef) -> NodeRef:
        """Map a unary carrier operation over all terminals, re-canonicalized."""
        fn = self.algebra.unary(op)
        return NodeRef(self, self._apply1(op, fn, self._own(f)))

    def _apply1(self, op: str, fn: Callable, a: int) -> int:
        key = ("u", op, a)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        node = self._nodes[a]
        if node.var is None:
            result = self._terminal(self.algebra.validate(fn(node.value)))
        else:
            result = self._mk(
                node.var,
                self._apply1(op, fn, node.hi),
                self._apply1(op, fn, node.lo),
            )
        self._cache[key] = result
        return result

    def ite(self, var: int, hi: NodeRef, lo: NodeRef) -> NodeRef:
        """Diagram of "if variable then hi else lo" for arbitrary operands.

        Unlike :meth:`mk`, the operands may themselves test ``var`` or
        variables above it; the result is re-ordered and reduced.  This is
        the workhorse for compiling user-authored graphs whose tests appear
        in any order.
        """
        return NodeRef(self, self._ite(var, self._own(hi), self._own(lo)))

    def _ite(self, var: int, t: int, e: int) -> int:
        key = ("i", var, t, e)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        nt = self._nodes[t]
        ne = self._nodes[e]
        level = min(var, self._top(t), self._top(e))
        if level == var:
            # Both operands start at or below var: restrict each to the
            # matching branch (a deeper second test of var cannot exist
            # thanks to the ordering invariant).
            hi = nt.hi if nt.var == var else t
            lo = ne.lo if ne.var == var else e
            result = self._mk(var, hi, lo)
        else:
            t_hi, t_lo = (nt.hi, nt.lo) if nt.var == level else (t, t)
            e_hi, e_lo = (ne.hi, ne.lo) if ne.var == level else (e, e)
            result = self._mk(
                level,
                self._ite(var, t_hi, e_hi),
                self._ite(var, t_lo, e_lo),
            )
        self._cache[key] = result
        return result

    # -- evaluation ----------------------------------------------------------

    def eval_assignment(self, f: NodeRef, bits) -> object:
        """Evaluate under a truth assignment of the predicate variables.

        ``bits`` is a sequence indexed by variable index, or a mapping from
        variable index to bool.  Every variable on the traversed path must
        be covered.
        """
        node = self._nodes[self._own(f)]
        while node.var is not None:
            try:
                taken = bits[node.var]
            except (IndexError, KeyError):
                raise InputError(
                    f"assignment is missing variable {node.var} "
                    f"({self._vars[node.var].feature} <= "
                    f"{self._vars[node.var].threshold})"
                ) from None
            node = self._nodes[node.hi if taken else node.lo]
        return node.value

    def eval_features(self, f: NodeRef, x: Mapping[str, float]) -> object:
        """Evaluate on a feature vector; each test takes the true branch iff
        ``x[feature] <= threshold`` (boundary values satisfy the test)."""
        node = self._nodes[self._own(f)]
        while node.var is not None:
            pv = self._vars[node.var]
            try:
                xv = x[pv.feature]
            except KeyError:
                raise InputError(f"input is missing feature '{pv.feature}'") from None
            node = self._nodes[node.hi if xv <= pv.threshold else node.lo]
        return node.value

    # -- inspection ----------------------------------------------------------

    def iter_nodes(self, f: NodeRef) -> list[NodeRef]:
        """Reachable nodes in topological order (every parent before its
        children); deterministic for a given diagram."""
        order: list[int] = []
        seen: set[int] = set()

        def visit(node_id: int) -> None:
            if node_id in seen:
                return
            seen.add(node_id)
            node = self._nodes[node_id]
            if node.var is not None:
                visit(node.hi)
                visit(node.lo)
            order.append(node_id)

        visit(self._own(f))
        return [NodeRef(self, i) for i in reversed(order)]

    def node_count(self, f: NodeRef) -> NodeCount:
        inner = terminal = 0
        for ref in self.iter_nodes(f):
            if ref.is_terminal:
                terminal += 1
            else:
                inner += 1
        return NodeCount(inner, terminal)

    def terminal_values(self, f: NodeRef) -> list:
        return [ref.value for ref in self.iter_nodes(f) if ref.is_terminal]

    # -- construction from semantics ------------------------------------------

    def build_from_table(self, table: Sequence) -> NodeRef:
        """Canonical diagram for an explicit function table.

        ``table`` lists one carrier value per full assignment of all
        registered variables; entry ``i`` is the assignment where variable
        ``v`` is true iff bit ``(i >> (n - 1 - v)) & 1`` is set (variable 0
        is the most significant bit).  This is the independent construction
        path used to cross-check diagrams built through apply.
        """
        n = len(self._vars)
        if len(table) != 1 << n:
            raise InputError(
                f"table length {len(table)} != 2^{n} for {n} variables"
            )
        values = [self.algebra.validate(v) for v in table]

        def build(level: int, start: int, size: int) -> int:
            if level == n:
                return self._terminal(values[start])
            half = size >> 1
            lo = build(level + 1, start, half)
            hi = build(level + 1, start + half, half)
            return self._mk(level, hi, lo)

        return NodeRef(self, build(0, 0, len(values)))

    # -- optional passes -------------------------------------------------------

    def prune_infeasible(self, f: NodeRef) -> NodeRef:
        """Drop same-feature tests whose outcome an ancestor already implies.

        Along each path the pass tracks, per feature, the tightest known
        bounds: "feature <= u" established by a true branch and
        "feature > l" established by a false branch.  A test against
        threshold ``t`` with ``t >= u`` is forced true, one with ``t <= l``
        is forced false.  Feasible inputs are unaffected; only paths no
        feature vector can take are rewritten.
        """
        memo: dict = {}

        def rec(node_id: int, env: tuple) -> int:
            node = self._nodes[node_id]
            if node.var is None:
                return node_id
            key = (node_id, env)
            hit = memo.get(key)
            if hit is not None:
                return hit
            pv = self._vars[node.var]
            bounds = dict(env)
            upper, lower = bounds.get(pv.feature, (float("inf"), float("-inf")))
            if pv.threshold >= upper:
                result = rec(node.hi, env)
            elif pv.threshold <= lower:
                result = rec(node.lo, env)
            else:
                hi_bounds = dict(bounds)
                hi_bounds[pv.feature] = (min(upper, pv.threshold), lower)
                lo_bounds = dict(bounds)
                lo_bounds[pv.feature] = (upper, max(lower, pv.threshold))
                result = self._mk(
                    node.var,
                    rec(node.hi, tuple(sorted(hi_bounds.items()))),
                    rec(node.lo, tuple(sorted(lo_bounds.items()))),
                )
            memo[key] = result
            return result

        return NodeRef(self, rec(self._own(f), ()))

    # -- bookkeeping -------------------------------------------------------------

    def clear_cache(self) -> None:
        """Drop the operation cache; canonical node identities are unaffected."""
        self._cache.clear()

    def check_invariants(self) -> None:
        """Scan the whole store for reduction/ordering violations (test aid)."""
        seen_inner: dict[tuple[int, int, int], int] = {}
        seen_terminal: dict = {}
        for node_id, node in enumerate(self._nodes):
            if node.var is None:
                key = self.algebra.key(node.value)
                assert key not in seen_terminal, f"duplicate terminal {node.value!r}"
                seen_terminal[key] = node_id
                continue
            assert node.hi != node.lo, f"redundant test at node {node_id}"
            assert node.var < self._top(node.hi), f"ordering violated at {node_id}"
            assert node.var < self._top(node.lo), f"ordering violated at {node_id}"
            key = (node.var, node.hi, node.lo)
            assert key not in seen_inner, f"duplicate inner node {node_id}"
            seen_inner[key] = node_id
        assert seen_inner == self._unique
        assert seen_terminal == self._terminal_ids

    def __len__(self) -> int:
        return len(self._nodes)
