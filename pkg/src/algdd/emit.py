"""Exporters: dot text, a canonical graph interchange document, and
standalone evaluator source code in C and JavaScript.

All emitters are pure functions of the diagram (given exclusive read access
to its manager) and produce byte-identical output on repeated calls.  Every
shared node is emitted exactly once; node identifiers are the kernel
handles.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .algebra import algebra_by_name, weights_algebra
from .core import Manager, NodeRef
from .errors import CodegenError, ParseError

#: Graph name used by the CLI and the HTTP service for composed diagrams.
DOT_DEFAULT_NAME = "composed"


def fmt_real(x: float) -> str:
    """Shortest exact decimal; integral values drop the trailing '.0'."""
    if math.isfinite(x) and x == int(x) and abs(x) < 1e16:
        return str(int(x))
    return repr(x)


def _fmt_value(value) -> str:
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, tuple):
        return "(" + ", ".join(fmt_real(c) for c in value) + ")"
    return fmt_real(value)


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


# --------------------------------------------------------------------------
# dot


def to_dot(
    mgr: Manager,
    f: NodeRef,
    name: str = "dd",
    labels: Mapping[int, str] | None = None,
) -> str:
    """Render as a dot digraph.

    Inner nodes are ellipses labeled "feature <= threshold" (or the
    caller's per-variable label), terminals are boxes labeled with their
    value; solid edges are true branches, dashed edges false branches.
    """
    order = mgr.iter_nodes(f)
    lines = [f"digraph {_quote(name)} {{"]
    for ref in order:
        if ref.is_terminal:
            lines.append(
                f"  n{ref.index} [label={_quote(_fmt_value(ref.value))}, shape=box];"
            )
        else:
            pv = ref.var
            label = (labels or {}).get(
                pv.index, f"{pv.feature} <= {fmt_real(pv.threshold)}"
            )
            lines.append(f"  n{ref.index} [label={_quote(label)}, shape=ellipse];")
    for ref in order:
        if not ref.is_terminal:
            lines.append(f"  n{ref.index} -> n{ref.hi.index};")
            lines.append(f"  n{ref.index} -> n{ref.lo.index} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# graph interchange document


@dataclass(frozen=True)
class GraphDoc:
    """Parsed form of the interchange document."""

    algebra: str
    features: tuple[str, ...]
    categories: tuple[str, ...] | None
    variables: tuple[tuple[str, float], ...]
    root: int
    nodes: tuple  # dicts as stored in the document, topological order


def _encode_value(value):
    if isinstance(value, tuple):
        return list(value)
    return value


def _decode_value(raw):
    if isinstance(raw, list):
        return tuple(float(c) for c in raw)
    if isinstance(raw, bool):
        return raw
    return float(raw)


def _doc_features(mgr: Manager, feature_order: Sequence[str] | None) -> list[str]:
    if feature_order is not None:
        return list(feature_order)
    seen: list[str] = []
    for pv in mgr.variables:
        if pv.feature not in seen:
            seen.append(pv.feature)
    return seen


def to_graph_doc(
    mgr: Manager, f: NodeRef, feature_order: Sequence[str] | None = None
) -> str:
    """Serialize a diagram (with its variable universe) as a JSON document.

    The node list is topologically ordered with the kernel handles as ids,
    so the document is deterministic and can be rebuilt node for node.
    ``feature_order`` fixes the input indexing recorded in the document
    (declaration order, normally); it defaults to first-use order.
    """
    categories = mgr.algebra.categories
    nodes = []
    for ref in mgr.iter_nodes(f):
        if ref.is_terminal:
            nodes.append(
                {"id": ref.index, "kind": "terminal", "value": _encode_value(ref.value)}
            )
        else:
            pv = ref.var
            nodes.append(
                {
                    "id": ref.index,
                    "kind": "predicate",
                    "var": pv.index,
                    "feature": pv.feature,
                    "threshold": pv.threshold,
                    "true": ref.hi.index,
                    "false": ref.lo.index,
                }
            )
    counts = mgr.node_count(f)
    doc = {
        "kind": "decision-diagram-graph",
        "algebra": mgr.algebra.name,
        "features": _doc_features(mgr, feature_order),
        "categories": list(categories) if categories is not None else None,
        "variables": [
            {"feature": pv.feature, "threshold": pv.threshold} for pv in mgr.variables
        ],
        "root": f.index,
        "node_counts": {"inner": counts.inner, "terminal": counts.terminal},
        "nodes": nodes,
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_graph_doc(text: str) -> GraphDoc:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed graph document: {exc.msg}", location=exc.pos) from None
    if not isinstance(doc, dict) or doc.get("kind") != "decision-diagram-graph":
        raise ParseError("not a decision-diagram graph document")
    for key in ("algebra", "variables", "root", "nodes"):
        if key not in doc:
            raise ParseError(f"graph document is missing '{key}'")
    variables = tuple(
        (str(v["feature"]), float(v["threshold"])) for v in doc["variables"]
    )
    categories = doc.get("categories")
    return GraphDoc(
        algebra=str(doc["algebra"]),
        features=tuple(doc.get("features", ())),
        categories=tuple(categories) if categories is not None else None,
        variables=variables,
        root=int(doc["root"]),
        nodes=tuple(doc["nodes"]),
    )


def graph_doc_to_ref(mgr: Manager, doc: GraphDoc) -> NodeRef:
    """Rebuild a document's diagram inside ``mgr`` via mk/constant.

    The manager must know every variable of the document under the same
    order; rebuilding a document into the manager that produced it returns
    the identical handle.
    """
    var_map = {
        i: mgr.variable_index(f, t) for i, (f, t) in enumerate(doc.variables)
    }
    refs: dict[int, NodeRef] = {}
    for node in reversed(doc.nodes):
        nid = int(node["id"])
        if node["kind"] == "terminal":
            refs[nid] = mgr.constant(_decode_value(node["value"]))
        else:
            refs[nid] = mgr.mk(
                var_map[int(node["var"])],
                refs[int(node["true"])],
                refs[int(node["false"])],
            )
    return refs[doc.root]


def manager_from_graph_doc(doc: GraphDoc | str) -> tuple[Manager, NodeRef]:
    """Fresh manager plus root rebuilt from an interchange document."""
    if isinstance(doc, str):
        doc = parse_graph_doc(doc)
    if doc.algebra == "weights":
        algebra = weights_algebra(doc.categories or len_of_first_vector(doc))
    else:
        algebra = algebra_by_name(doc.algebra)
    mgr = Manager(algebra, doc.variables)
    return mgr, graph_doc_to_ref(mgr, doc)


def len_of_first_vector(doc: GraphDoc) -> int:
    for node in doc.nodes:
        if node["kind"] == "terminal":
            return len(node["value"])
    raise ParseError("graph document has no terminal nodes")


# --------------------------------------------------------------------------
# code generation


_TARGETS = ("c", "js")


def _feature_indices(mgr: Manager, feature_order: Sequence[str] | None) -> dict[str, int]:
    return {f: i for i, f in enumerate(_doc_features(mgr, feature_order))}


def _code_literal(value, target: str) -> str:
    if isinstance(value, bool):
        if target == "c":
            return "1" if value else "0"
        return "true" if value else "false"
    if not math.isfinite(value):
        raise CodegenError(f"cannot emit non-finite terminal value {value!r}")
    return repr(float(value))


def generate_code(
    mgr: Manager,
    f: NodeRef,
    target: str,
    *,
    feature_order: Sequence[str] | None = None,
    func_name: str = "evaluate",
) -> str:
    """Emit a standalone evaluator for the diagram.

    The "c" target is a literal goto program: one label per node,
    conditional jumps along the true/false branches.  The "js" target has
    no goto, so it uses the equivalent structured form, a loop over a
    node-id switch.  Vector-valued diagrams additionally get an argmax
    helper (ties resolve to the lowest index, matching the classifier).
    Inputs are feature values indexed per ``feature_order`` (declaration
    order, normally; first-use order when omitted).
    """
    if target not in _TARGETS:
        raise CodegenError(f"unknown codegen target '{target}' (expected one of {_TARGETS})")
    carrier = mgr.algebra.carrier
    if carrier not in ("boolean", "unit-interval", "real", "vector"):
        raise CodegenError(f"cannot generate {target} code for carrier '{carrier}'")
    order = mgr.iter_nodes(f)
    findex = _feature_indices(mgr, feature_order)
    if target == "c":
        return _generate_c(mgr, f, order, findex, carrier, func_name)
    return _generate_js(mgr, f, order, findex, carrier, func_name)


def _feature_comment(findex: dict[str, int], prefix: str) -> list[str]:
    return [
        f"{prefix} features[{i}] = {name}"
        for name, i in sorted(findex.items(), key=lambda kv: kv[1])
    ]


def _generate_c(mgr, f, order, findex, carrier, func_name) -> str:
    dim = mgr.algebra.dimension
    lines = ["/* Decision-diagram evaluator (generated; do not edit). */"]
    lines += [line + " */" for line in _feature_comment(findex, "/*")]
    lines.append("")
    return_type = {"boolean": "int", "unit-interval": "double", "real": "double"}.get(
        carrier, "const double *"
    )
    if carrier == "vector":
        for ref in order:
            if ref.is_terminal:
                values = ", ".join(_code_literal(c, "c") for c in ref.value)
                lines.append(
                    f"static const double {func_name}_v{ref.index}[{dim}] = {{{values}}};"
                )
        lines.append("")
    lines.append(f"{return_type} {func_name}(const double features[]) {{")
    lines.append("    (void)features;")
    lines.append(f"    goto n{f.index};")
    for ref in order:
        lines.append(f"n{ref.index}:")
        if ref.is_terminal:
            if carrier == "vector":
                lines.append(f"    return {func_name}_v{ref.index};")
            else:
                lines.append(f"    return {_code_literal(ref.value, 'c')};")
        else:
            pv = ref.var
            lines.append(
                f"    if (features[{findex[pv.feature]}] <= {repr(pv.threshold)})"
                f" goto n{ref.hi.index};"
            )
            lines.append(f"    goto n{ref.lo.index};")
    lines.append("}")
    if carrier == "vector":
        lines.append("")
        lines.append(f"int {func_name}_argmax(const double features[]) {{")
        lines.append(f"    const double *w = {func_name}(features);")
        lines.append("    int best = 0;")
        lines.append(f"    for (int i = 1; i < {dim}; ++i) {{")
        lines.append("        if (w[i] > w[best]) best = i;")
        lines.append("    }")
        lines.append("    return best;")
        lines.append("}")
    return "\n".join(lines) + "\n"


def _generate_js(mgr, f, order, findex, carrier, func_name) -> str:
    lines = ["// Decision-diagram evaluator (generated; do not edit)."]
    lines += _feature_comment(findex, "//")
    lines.append(f"function {func_name}(features) {{")
    lines.append(f"    let node = {f.index};")
    lines.append("    for (;;) {")
    lines.append("        switch (node) {")
    for ref in order:
        if ref.is_terminal:
            if carrier == "vector":
                literal = "[" + ", ".join(_code_literal(c, "js") for c in ref.value) + "]"
            else:
                literal = _code_literal(ref.value, "js")
            lines.append(f"        case {ref.index}:")
            lines.append(f"            return {literal};")
        else:
            pv = ref.var
            lines.append(f"        case {ref.index}:")
            lines.append(
                f"            node = features[{findex[pv.feature]}] <= "
                f"{repr(pv.threshold)} ? {ref.hi.index} : {ref.lo.index};"
            )
            lines.append("            break;")
    lines.append("        default:")
    lines.append('            throw new Error("unreachable node " + node);')
    lines.append("        }")
    lines.append("    }")
    lines.append("}")
    if carrier == "vector":
        lines.append("")
        lines.append(f"function {func_name}Argmax(features) {{")
        lines.append(f"    const w = {func_name}(features);")
        lines.append("    let best = 0;")
        lines.append("    for (let i = 1; i < w.length; i += 1) {")
        lines.append("        if (w[i] > w[best]) best = i;")
        lines.append("    }")
        lines.append("    return best;")
        lines.append("}")
    return "\n".join(lines) + "\n"
