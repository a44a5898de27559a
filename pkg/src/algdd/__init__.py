"""Algebraic decision diagrams with interchangeable algebras.

The kernel (:mod:`algdd.core`) keeps reduced ordered decision diagrams in a
hash-consed store, so structural equality is handle equality and carrier
operations lift to diagrams by memoized Shannon expansion.  On top of it:
ready-made algebras (:mod:`algdd.algebra`), the declaration/diagram/
composition model languages (:mod:`algdd.models`), a random-forest
aggregation pipeline (:mod:`algdd.forest`), exporters and code generators
(:mod:`algdd.emit`), and a CLI plus HTTP playground service
(:mod:`algdd.cli`, :mod:`algdd.service`).
"""

from .algebra import (
    Algebra,
    algebra_by_name,
    boolean_algebra,
    fuzzy_algebra,
    real_algebra,
    weights_algebra,
)
from .core import Manager, NodeCount, NodeRef, PredicateVar, ordered_predicates
from .errors import (
    AlgddError,
    ArithmeticDomainError,
    CodegenError,
    ConfigurationError,
    DimensionError,
    DomainError,
    InputError,
    OwnershipError,
    ParseError,
    UnknownDiagramError,
    ValidationError,
)
from .forest import (
    ClassificationResult,
    ForestModel,
    Leaf,
    Split,
    aggregate,
    argmax_index,
    classify,
    forest_to_diagrams,
    parse_forest,
    tree_to_diagram,
    vote_oracle,
)
from .models import (
    Assoc,
    CalcExpr,
    Declaration,
    DiagramModel,
    DiagramRef,
    NonAssoc,
    Norm,
    PredicateNode,
    ResultNode,
    calc_names,
    calc_to_text,
    compile_diagram,
    compose,
    declaration_to_json,
    diagram_to_json,
    eval_calc,
    manager_for,
    parse_calc,
    parse_declaration,
    parse_diagram,
    validate_diagram,
)
from .emit import (
    GraphDoc,
    generate_code,
    graph_doc_to_ref,
    manager_from_graph_doc,
    parse_graph_doc,
    to_dot,
    to_graph_doc,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
