"""The three model languages and their compilation into kernel diagrams.

* Declaration documents (``*.decl.json``) list the feature and category
  identifiers everything else refers to.
* Diagram documents (``*.dd.json``) are acyclic graphs of predicate nodes
  (feature/threshold tests with one true and one false successor) and
  result nodes (per-category weights).
* Calculation text (``*.calc``) is an infix expression over diagram names
  with ``+ - * /``, ``norm(...)``, and parentheses.

Parsing and validation are pure; compiling into a manager requires
exclusive access to it.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Union

from .algebra import weights_algebra
from .core import Manager, NodeRef, ordered_predicates
from .errors import ParseError, UnknownDiagramError, ValidationError


# --------------------------------------------------------------------------
# Declaration


@dataclass(frozen=True)
class Declaration:
    """Ordered feature and category identifiers."""

    features: tuple[str, ...]
    categories: tuple[str, ...]

    def __post_init__(self):
        for kind, names in (("feature", self.features), ("category", self.categories)):
            if not names:
                raise ValidationError(f"declaration has no {kind}s")
            seen = set()
            for name in names:
                if not isinstance(name, str) or not name:
                    raise ValidationError(f"invalid {kind} identifier {name!r}")
                if name in seen:
                    raise ValidationError(f"duplicate {kind} '{name}'")
                seen.add(name)

    def feature_index(self, name: str) -> int:
        return self.features.index(name)

    def category_index(self, name: str) -> int:
        return self.categories.index(name)


def _load_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed {what}: {exc.msg}", location=exc.pos) from None


def parse_declaration(text: str) -> Declaration:
    doc = _load_json(text, "declaration document")
    if not isinstance(doc, dict):
        raise ParseError("declaration document must be an object")
    for key in ("features", "categories"):
        if key not in doc:
            raise ParseError(f"declaration document is missing '{key}'")
        if not isinstance(doc[key], list):
            raise ParseError(f"'{key}' must be a list of identifiers")
    return Declaration(tuple(doc["features"]), tuple(doc["categories"]))


def declaration_to_json(decl: Declaration) -> str:
    return json.dumps(
        {"features": list(decl.features), "categories": list(decl.categories)},
        indent=2,
    ) + "\n"


def load_declaration(path: str | Path) -> Declaration:
    return parse_declaration(Path(path).read_text())


# --------------------------------------------------------------------------
# Diagram models


@dataclass(frozen=True)
class PredicateNode:
    feature: str
    threshold: float
    true_succ: str
    false_succ: str


@dataclass(frozen=True)
class ResultNode:
    """Leaf with a per-category weight map; omitted categories weigh 0."""

    weights: Mapping[str, float]

    def weight_vector(self, decl: Declaration) -> tuple[float, ...]:
        return tuple(float(self.weights.get(c, 0.0)) for c in decl.categories)


DiagramNode = Union[PredicateNode, ResultNode]


@dataclass(frozen=True)
class DiagramModel:
    name: str
    declaration: Declaration
    root: str
    nodes: Mapping[str, DiagramNode]

    def predicates(self) -> set[tuple[str, float]]:
        return {
            (n.feature, n.threshold)
            for n in self.nodes.values()
            if isinstance(n, PredicateNode)
        }


def validate_diagram(model: DiagramModel) -> None:
    """Check every structural invariant; raises ValidationError on the first
    violation, with the offending node id as the location."""
    decl = model.declaration
    nodes = model.nodes
    if model.root not in nodes:
        raise ValidationError(f"unknown node '{model.root}' (root)", location=model.root)
    features = set(decl.features)
    categories = set(decl.categories)
    for nid, node in nodes.items():
        if isinstance(node, PredicateNode):
            for succ in (node.true_succ, node.false_succ):
                if succ not in nodes:
                    raise ValidationError(
                        f"unknown node '{succ}' (successor of '{nid}')",
                        location=nid,
                    )
            if node.feature not in features:
                raise ValidationError(
                    f"unresolved reference: feature '{node.feature}' in node '{nid}'",
                    location=nid,
                )
        else:
            for cat in node.weights:
                if cat not in categories:
                    raise ValidationError(
                        f"unresolved reference: category '{cat}' in node '{nid}'",
                        location=nid,
                    )

    # Cycle check over the whole graph, then reachability from the root.
    WHITE, GREY, BLACK = 0, 1, 2
    color = {nid: WHITE for nid in nodes}

    def successors(nid: str) -> tuple[str, ...]:
        node = nodes[nid]
        if isinstance(node, PredicateNode):
            return (node.true_succ, node.false_succ)
        return ()

    def scan(start: str) -> None:
        stack = [(start, iter(successors(start)))]
        color[start] = GREY
        while stack:
            nid, succs = stack[-1]
            advanced = False
            for succ in succs:
                if color[succ] == GREY:
                    raise ValidationError(
                        f"cyclic model: node '{succ}' reaches itself",
                        location=succ,
                    )
                if color[succ] == WHITE:
                    color[succ] = GREY
                    stack.append((succ, iter(successors(succ))))
                    advanced = True
                    break
            if not advanced:
                color[nid] = BLACK
                stack.pop()

    for nid in nodes:
        if color[nid] == WHITE:
            scan(nid)

    reachable: set[str] = set()
    frontier = [model.root]
    while frontier:
        nid = frontier.pop()
        if nid in reachable:
            continue
        reachable.add(nid)
        frontier.extend(successors(nid))
    for nid in nodes:
        if nid not in reachable:
            raise ValidationError(f"unreachable node '{nid}'", location=nid)


def _parse_node(nid: str, raw) -> DiagramNode:
    if not isinstance(raw, dict):
        raise ParseError(f"node '{nid}' must be an object", location=nid)
    kind = raw.get("kind")
    if kind == "predicate":
        for key in ("feature", "threshold", "true", "false"):
            if key not in raw:
                raise ParseError(f"node '{nid}': missing '{key}'", location=nid)
        threshold = raw["threshold"]
        if isinstance(threshold, bool) or not isinstance(threshold, (int, float)):
            raise ParseError(f"node '{nid}': threshold must be a number", location=nid)
        return PredicateNode(
            feature=str(raw["feature"]),
            threshold=float(threshold),
            true_succ=str(raw["true"]),
            false_succ=str(raw["false"]),
        )
    if kind == "result":
        weights = raw.get("weights", {})
        if not isinstance(weights, dict):
            raise ParseError(f"node '{nid}': weights must be an object", location=nid)
        for cat, w in weights.items():
            if isinstance(w, bool) or not isinstance(w, (int, float)):
                raise ParseError(
                    f"node '{nid}': weight for '{cat}' must be a number",
                    location=nid,
                )
        return ResultNode(weights={c: float(w) for c, w in weights.items()})
    raise ParseError(f"node '{nid}': unknown kind {kind!r}", location=nid)


def parse_diagram(
    text: str,
    decl: Declaration | None = None,
    *,
    base_dir: str | Path | None = None,
    name: str | None = None,
) -> DiagramModel:
    """Parse and fully validate a diagram document.

    The document's "declaration" entry may be an inline object or a path
    relative to ``base_dir``; an explicit ``decl`` argument wins over both.
    """
    doc = _load_json(text, "diagram document")
    if not isinstance(doc, dict):
        raise ParseError("diagram document must be an object")
    return diagram_from_doc(doc, decl, base_dir=base_dir, name=name)


def diagram_from_doc(
    doc: dict,
    decl: Declaration | None = None,
    *,
    base_dir: str | Path | None = None,
    name: str | None = None,
) -> DiagramModel:
    """Build and validate a diagram model from an already-decoded document."""
    if decl is None:
        embedded = doc.get("declaration")
        if isinstance(embedded, dict):
            decl = Declaration(
                tuple(embedded.get("features", ())),
                tuple(embedded.get("categories", ())),
            )
        elif isinstance(embedded, str):
            path = Path(base_dir or ".") / embedded
            decl = load_declaration(path)
        else:
            raise ParseError("diagram document has no usable 'declaration'")
    doc_name = doc.get("name", name)
    if doc_name is None:
        raise ParseError("diagram document is missing 'name'")
    if "root" not in doc:
        raise ParseError("diagram document is missing 'root'")
    raw_nodes = doc.get("nodes")
    if not isinstance(raw_nodes, dict) or not raw_nodes:
        raise ParseError("diagram document needs a non-empty 'nodes' object")
    nodes = {str(nid): _parse_node(str(nid), raw) for nid, raw in raw_nodes.items()}
    model = DiagramModel(
        name=str(doc_name), declaration=decl, root=str(doc["root"]), nodes=nodes
    )
    validate_diagram(model)
    return model


def diagram_doc(model: DiagramModel) -> dict:
    """Document form of a diagram without the declaration entry."""
    nodes = {}
    for nid, node in model.nodes.items():
        if isinstance(node, PredicateNode):
            nodes[nid] = {
                "kind": "predicate",
                "feature": node.feature,
                "threshold": node.threshold,
                "true": node.true_succ,
                "false": node.false_succ,
            }
        else:
            nodes[nid] = {"kind": "result", "weights": dict(node.weights)}
    return {"name": model.name, "root": model.root, "nodes": nodes}


def diagram_to_json(model: DiagramModel, *, decl_ref: str | None = None) -> str:
    """Serialize a diagram document; ``decl_ref`` writes the declaration as a
    path instead of inlining it."""
    decl: object
    if decl_ref is not None:
        decl = decl_ref
    else:
        decl = {
            "features": list(model.declaration.features),
            "categories": list(model.declaration.categories),
        }
    base = diagram_doc(model)
    doc = {
        "name": base["name"],
        "declaration": decl,
        "root": base["root"],
        "nodes": base["nodes"],
    }
    return json.dumps(doc, indent=2) + "\n"


def load_diagram(path: str | Path, decl: Declaration | None = None) -> DiagramModel:
    path = Path(path)
    return parse_diagram(path.read_text(), decl, base_dir=path.parent)


# --------------------------------------------------------------------------
# Calculation expressions


@dataclass(frozen=True)
class DiagramRef:
    name: str


@dataclass(frozen=True)
class Assoc:
    """Flattened chain of an associative operator ('+' or '*')."""

    op: str
    operands: tuple

    def __post_init__(self):
        if len(self.operands) < 2:
            raise ValidationError("associative chains need at least two operands")


@dataclass(frozen=True)
class NonAssoc:
    op: str  # '-' or '/'
    left: "CalcExpr"
    right: "CalcExpr"


@dataclass(frozen=True)
class Norm:
    operand: "CalcExpr"


CalcExpr = Union[DiagramRef, Assoc, NonAssoc, Norm]

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[+\-*/()])"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(
                f"unexpected character {text[pos]!r}", location=pos
            )
        if match.lastgroup != "ws":
            tokens.append((match.lastgroup, match.group(), match.start()))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _CalcParser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def token(self):
        return self.tokens[self.pos]

    def advance(self):
        self.pos += 1

    def expect_punct(self, text: str):
        kind, value, loc = self.token
        if kind != "punct" or value != text:
            raise ParseError(f"expected '{text}', found {value or 'end of input'!r}", location=loc)
        self.advance()

    def parse(self) -> CalcExpr:
        expr = self.expr()
        kind, value, loc = self.token
        if kind != "end":
            raise ParseError(f"unexpected trailing input {value!r}", location=loc)
        return expr

    def expr(self) -> CalcExpr:
        node = self.term()
        while self.token[0] == "punct" and self.token[1] in "+-":
            op = self.token[1]
            self.advance()
            right = self.term()
            if op == "+":
                if isinstance(node, Assoc) and node.op == "+":
                    node = Assoc("+", node.operands + (right,))
                else:
                    node = Assoc("+", (node, right))
            else:
                node = NonAssoc("-", node, right)
        return node

    def term(self) -> CalcExpr:
        node = self.factor()
        while self.token[0] == "punct" and self.token[1] in "*/":
            op = self.token[1]
            self.advance()
            right = self.factor()
            if op == "*":
                if isinstance(node, Assoc) and node.op == "*":
                    node = Assoc("*", node.operands + (right,))
                else:
                    node = Assoc("*", (node, right))
            else:
                node = NonAssoc("/", node, right)
        return node

    def factor(self) -> CalcExpr:
        kind, value, loc = self.token
        if kind == "ident" and value == "norm":
            self.advance()
            self.expect_punct("(")
            inner = self.expr()
            self.expect_punct(")")
            return Norm(inner)
        if kind == "ident":
            self.advance()
            return DiagramRef(value)
        if kind == "punct" and value == "(":
            self.advance()
            inner = self.expr()
            self.expect_punct(")")
            return inner
        raise ParseError(
            f"expected a diagram name, 'norm', or '(', found {value or 'end of input'!r}",
            location=loc,
        )


def parse_calc(text: str) -> CalcExpr:
    """Parse a composition expression.

    ``norm(...)`` and parentheses bind tightest, then ``* /``, then ``+ -``;
    operators of equal precedence associate to the left, and ``+``/``*``
    chains are flattened.  ``norm`` is a reserved word.
    """
    return _CalcParser(text).parse()


def _prec(expr: CalcExpr) -> int:
    if isinstance(expr, (DiagramRef, Norm)):
        return 3
    if isinstance(expr, Assoc):
        return 2 if expr.op == "*" else 1
    return 2 if expr.op == "/" else 1


def calc_to_text(expr: CalcExpr) -> str:
    """Render an expression; reparsing the result recovers the same tree."""

    def render(e: CalcExpr, level: int, first: bool) -> str:
        text = _render(e)
        p = _prec(e)
        if p < level or (not first and p == level):
            return f"({text})"
        return text

    def _render(e: CalcExpr) -> str:
        if isinstance(e, DiagramRef):
            return e.name
        if isinstance(e, Norm):
            return f"norm({_render(e.operand)})"
        if isinstance(e, Assoc):
            level = _prec(e)
            parts = [
                render(op, level, i == 0) for i, op in enumerate(e.operands)
            ]
            return f" {e.op} ".join(parts)
        level = _prec(e)
        return (
            f"{render(e.left, level, True)} {e.op} {render(e.right, level, False)}"
        )

    return _render(expr)


def calc_names(expr: CalcExpr) -> set[str]:
    """Diagram names referenced anywhere in an expression."""
    if isinstance(expr, DiagramRef):
        return {expr.name}
    if isinstance(expr, Norm):
        return calc_names(expr.operand)
    if isinstance(expr, Assoc):
        names: set[str] = set()
        for op in expr.operands:
            names |= calc_names(op)
        return names
    return calc_names(expr.left) | calc_names(expr.right)


def load_calc(path: str | Path) -> CalcExpr:
    return parse_calc(Path(path).read_text())


# --------------------------------------------------------------------------
# Compilation


def compile_diagram(mgr: Manager, model: DiagramModel) -> NodeRef:
    """Compile a diagram model into the canonical kernel representation.

    The walk follows the acyclic model structure; tests that appear out of
    the global variable order (or repeat along a path) are handled by the
    kernel's ite, so the result is reduced and canonical.  Every predicate
    of the model must already be registered with the manager.
    """
    memo: dict[str, NodeRef] = {}

    def rec(nid: str) -> NodeRef:
        ref = memo.get(nid)
        if ref is not None:
            return ref
        node = model.nodes[nid]
        if isinstance(node, ResultNode):
            ref = mgr.constant(node.weight_vector(model.declaration))
        else:
            var = mgr.variable_index(node.feature, node.threshold)
            ref = mgr.ite(var, rec(node.true_succ), rec(node.false_succ))
        memo[nid] = ref
        return ref

    return rec(model.root)


def eval_calc(mgr: Manager, expr: CalcExpr, env: Mapping[str, NodeRef]) -> NodeRef:
    """Evaluate a composition expression over compiled diagrams."""
    if isinstance(expr, DiagramRef):
        try:
            return env[expr.name]
        except KeyError:
            raise UnknownDiagramError(expr.name) from None
    if isinstance(expr, Norm):
        return mgr.apply1("norm", eval_calc(mgr, expr.operand, env))
    if isinstance(expr, Assoc):
        refs = [eval_calc(mgr, op, env) for op in expr.operands]
        acc = refs[0]
        for ref in refs[1:]:
            acc = mgr.apply2(expr.op, acc, ref)
        return acc
    if isinstance(expr, NonAssoc):
        return mgr.apply2(
            expr.op,
            eval_calc(mgr, expr.left, env),
            eval_calc(mgr, expr.right, env),
        )
    raise TypeError(f"not a calc expression: {expr!r}")


def manager_for(
    decl: Declaration, models: Iterable[DiagramModel]
) -> Manager:
    """Fresh weights-algebra manager with every predicate of ``models``
    registered in the deterministic global order."""
    pairs: set[tuple[str, float]] = set()
    for model in models:
        pairs |= model.predicates()
    return Manager(
        weights_algebra(decl.categories),
        ordered_predicates(decl.features, pairs),
    )


def compose(
    decl: Declaration,
    diagrams: Mapping[str, DiagramModel],
    calc: str | CalcExpr,
    *,
    prune: bool = False,
) -> tuple[Manager, NodeRef]:
    """One-stop pipeline: parse/compile/evaluate a composition.

    Builds a fresh manager covering exactly the referenced diagrams, so the
    result is reproducible regardless of what else a caller has loaded.
    """
    expr = parse_calc(calc) if isinstance(calc, str) else calc
    names = sorted(calc_names(expr))
    for n in names:
        if n not in diagrams:
            raise UnknownDiagramError(n)
        if diagrams[n].declaration != decl:
            raise ValidationError(
                f"diagram '{n}' was declared against different features/categories"
            )
    referenced = [diagrams[n] for n in names]
    mgr = manager_for(decl, referenced)
    env = {n: compile_diagram(mgr, diagrams[n]) for n in names}
    root = eval_calc(mgr, expr, env)
    if prune:
        root = mgr.prune_infeasible(root)
    return mgr, root
