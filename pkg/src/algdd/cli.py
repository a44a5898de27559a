"""Command-line entry point.

Subcommands: ``validate`` model files, ``compose`` diagrams into a graph
document, ``classify`` feature vectors against a composed document,
``dot``/``codegen`` exporters, ``demo-iris`` to materialize the bundled
fixture workspace, and ``serve`` for the HTTP playground.

Exit status: 0 on success, 1 on validation/parse/input errors (messages on
standard error), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import iris
from .emit import (
    DOT_DEFAULT_NAME,
    fmt_real,
    generate_code,
    manager_from_graph_doc,
    parse_graph_doc,
    to_dot,
    to_graph_doc,
)
from .errors import AlgddError, InputError
from .forest import argmax_index, load_forest
from .models import (
    Declaration,
    compose,
    load_calc,
    load_declaration,
    load_diagram,
    parse_calc,
)

ENV_WORKSPACE = "ALGDD_WORKSPACE"
ENV_PORT = "ALGDD_PORT"
DEFAULT_WORKSPACE = "workspace"
DEFAULT_PORT = 8000


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="algdd",
        description="Decision diagrams over pluggable algebras: validate, "
        "compose, classify, export, and serve.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate model files")
    p.add_argument("files", nargs="+", metavar="FILE")

    def composition_args(p, composed_ok=False):
        p.add_argument("--decl", metavar="FILE", help="declaration document")
        p.add_argument(
            "--diagrams", nargs="+", metavar="FILE", default=[],
            help="diagram documents referenced by the expression",
        )
        group = p.add_mutually_exclusive_group()
        group.add_argument("--calc", metavar="FILE", help="composition expression file")
        group.add_argument("--expr", metavar="TEXT", help="composition expression text")
        if composed_ok:
            p.add_argument(
                "--composed", metavar="FILE",
                help="use an already-composed graph document instead",
            )

    p = sub.add_parser("compose", help="compile a composition into a graph document")
    composition_args(p)
    p.add_argument("--prune-infeasible", action="store_true",
                   help="drop tests implied by same-feature ancestors")
    p.add_argument("-o", "--output", metavar="FILE")

    p = sub.add_parser("classify", help="classify one feature vector")
    p.add_argument("--composed", required=True, metavar="FILE",
                   help="graph document produced by compose")
    p.add_argument("--input", required=True, metavar="PAIRS",
                   help='feature values, e.g. "petal_length=1.4,petal_width=0.2,..."')

    p = sub.add_parser("dot", help="emit dot text for a composition")
    composition_args(p, composed_ok=True)
    p.add_argument("--name", default=DOT_DEFAULT_NAME, help="dot graph name")
    p.add_argument("-o", "--output", metavar="FILE")

    p = sub.add_parser("codegen", help="emit an evaluator in C or JavaScript")
    composition_args(p, composed_ok=True)
    p.add_argument("--target", required=True, choices=["c", "js"])
    p.add_argument("-o", "--output", metavar="FILE")

    p = sub.add_parser("demo-iris", help="write the bundled Iris fixture workspace")
    p.add_argument("--workspace", metavar="DIR",
                   default=os.environ.get(ENV_WORKSPACE, DEFAULT_WORKSPACE))

    p = sub.add_parser("serve", help="run the HTTP playground service")
    p.add_argument("--workspace", metavar="DIR",
                   default=os.environ.get(ENV_WORKSPACE, DEFAULT_WORKSPACE))
    p.add_argument("--port", type=int,
                   default=int(os.environ.get(ENV_PORT, DEFAULT_PORT)))
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui", metavar="DIR", default=os.environ.get("ALGDD_UI"),
                   help="directory of built web UI assets to serve at /")
    return parser


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 1


def _location_suffix(exc: AlgddError) -> str:
    loc = getattr(exc, "location", None)
    return f" (at {loc})" if loc is not None else ""


def _validate_one(path: Path) -> None:
    name = path.name
    if name.endswith(".decl.json"):
        load_declaration(path)
    elif name.endswith(".dd.json"):
        load_diagram(path)
    elif name.endswith(".forest.json"):
        load_forest(path)
    elif name.endswith(".calc"):
        load_calc(path)
    else:
        raise InputError(
            "unknown model type (expected *.decl.json, *.dd.json, "
            "*.forest.json, or *.calc)"
        )


def cmd_validate(args) -> int:
    status = 0
    for file in args.files:
        path = Path(file)
        try:
            _validate_one(path)
        except FileNotFoundError:
            print(f"{file}: no such file", file=sys.stderr)
            status = 1
        except AlgddError as exc:
            print(f"{file}: {exc}{_location_suffix(exc)}", file=sys.stderr)
            status = 1
        else:
            print(f"OK {file}")
    return status


def _load_composition(args) -> tuple[Declaration, dict, object]:
    if not args.decl:
        raise InputError("--decl is required")
    decl = load_declaration(args.decl)
    diagrams = {}
    for file in args.diagrams:
        model = load_diagram(file, decl)
        if model.name in diagrams:
            raise InputError(f"duplicate diagram name '{model.name}' ({file})")
        diagrams[model.name] = model
    if args.calc:
        expr = load_calc(args.calc)
    elif args.expr is not None:
        expr = parse_calc(args.expr)
    else:
        raise InputError("one of --calc or --expr is required")
    return decl, diagrams, expr


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_compose(args) -> int:
    decl, diagrams, expr = _load_composition(args)
    mgr, root = compose(decl, diagrams, expr, prune=args.prune_infeasible)
    _emit(to_graph_doc(mgr, root, feature_order=decl.features), args.output)
    return 0


def _parse_input_pairs(text: str) -> dict[str, float]:
    values: dict[str, float] = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise InputError(f"expected name=value, got {chunk!r}")
        name, _, raw = chunk.partition("=")
        try:
            values[name.strip()] = float(raw)
        except ValueError:
            raise InputError(f"not a number: {raw!r} (feature {name.strip()!r})") from None
    if not values:
        raise InputError("empty feature input")
    return values


def cmd_classify(args) -> int:
    doc = parse_graph_doc(Path(args.composed).read_text())
    mgr, root = manager_from_graph_doc(doc)
    x = _parse_input_pairs(args.input)
    weights = mgr.eval_features(root, x)
    if not isinstance(weights, tuple):
        raise InputError("composed diagram does not produce per-category weights")
    if doc.categories is None:
        raise InputError("graph document carries no category names")
    category = doc.categories[argmax_index(weights)]
    print(category)
    print(" ".join(f"{c}={fmt_real(w)}" for c, w in zip(doc.categories, weights)))
    return 0


def _composed_or_composition(args) -> tuple:
    """Returns (mgr, root, feature_order) from --composed or model files."""
    if getattr(args, "composed", None):
        doc = parse_graph_doc(Path(args.composed).read_text())
        mgr, root = manager_from_graph_doc(doc)
        return mgr, root, doc.features
    decl, diagrams, expr = _load_composition(args)
    mgr, root = compose(decl, diagrams, expr)
    return mgr, root, decl.features


def cmd_dot(args) -> int:
    mgr, root, _ = _composed_or_composition(args)
    _emit(to_dot(mgr, root, name=args.name), args.output)
    return 0


def cmd_codegen(args) -> int:
    mgr, root, feature_order = _composed_or_composition(args)
    _emit(
        generate_code(mgr, root, args.target, feature_order=feature_order),
        args.output,
    )
    return 0


def cmd_demo_iris(args) -> int:
    written = iris.write_workspace(args.workspace)
    for path in written:
        print(f"wrote {path}")
    print(f'compose with: "{iris.COMPOSITION}"')
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import ModelStore, create_app

    store = ModelStore(args.workspace)
    app = create_app(store, ui_dir=args.ui)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


_COMMANDS = {
    "validate": cmd_validate,
    "compose": cmd_compose,
    "classify": cmd_classify,
    "dot": cmd_dot,
    "codegen": cmd_codegen,
    "demo-iris": cmd_demo_iris,
    "serve": cmd_serve,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except FileNotFoundError as exc:
        return _fail(f"{exc.filename}: no such file")
    except AlgddError as exc:
        return _fail(f"{exc}{_location_suffix(exc)}")


def run() -> None:
    sys.exit(main())
