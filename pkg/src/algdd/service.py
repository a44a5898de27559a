"""HTTP playground service.

Serves a file-backed model store (one declaration, any number of diagrams)
and exposes the composition pipeline: compose, classify, dot, and code
generation.  Every request builds in a fresh manager, so results depend
only on the stored models and the request; store access is serialized by a
lock and a failed update never replaces previously valid state.
"""

from __future__ import annotations

import threading
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel

from .emit import DOT_DEFAULT_NAME, generate_code, to_dot, to_graph_doc
from .errors import (
    AlgddError,
    ConfigurationError,
    UnknownDiagramError,
    ValidationError,
)


class _NotFound(AlgddError):
    """Mapped to HTTP 404."""
from .forest import classify as classify_diagram
from .models import (
    Declaration,
    DiagramModel,
    compile_diagram,
    compose,
    diagram_doc,
    diagram_from_doc,
    diagram_to_json,
    load_declaration,
    load_diagram,
    manager_for,
)


class ModelStore:
    """In-memory models backed by a workspace directory.

    The workspace holds at most one ``*.decl.json`` plus any number of
    ``*.dd.json`` diagrams; saving a diagram writes it back as
    ``<name>.dd.json``.  All mutation happens under ``lock``.
    """

    def __init__(self, workspace: str | Path):
        self.workspace = Path(workspace)
        self.lock = threading.RLock()
        self.declaration: Declaration | None = None
        self.diagrams: dict[str, DiagramModel] = {}
        self.default_expression: str | None = None
        self._decl_file: str | None = None
        self.reload()

    def reload(self) -> None:
        with self.lock:
            declaration = None
            decl_file = None
            decl_paths = sorted(self.workspace.glob("*.decl.json"))
            if len(decl_paths) > 1:
                raise ConfigurationError(
                    f"workspace has {len(decl_paths)} declaration files; expected one"
                )
            if decl_paths:
                declaration = load_declaration(decl_paths[0])
                decl_file = decl_paths[0].name
            diagrams = {}
            for path in sorted(self.workspace.glob("*.dd.json")):
                model = load_diagram(path, declaration)
                diagrams[model.name] = model
            expression = None
            calc_paths = sorted(self.workspace.glob("*.calc"))
            if calc_paths:
                expression = calc_paths[0].read_text().strip()
            self.declaration = declaration
            self._decl_file = decl_file
            self.diagrams = diagrams
            self.default_expression = expression

    def put_diagram(self, model: DiagramModel) -> None:
        """Persist then publish; on write failure the old model survives."""
        with self.lock:
            path = self.workspace / f"{model.name}.dd.json"
            path.write_text(diagram_to_json(model, decl_ref=self._decl_file))
            self.diagrams[model.name] = model


class ComposeRequest(BaseModel):
    expression: str
    prune_infeasible: bool = False


class ClassifyRequest(BaseModel):
    expression: str
    features: dict[str, float]


class CodegenRequest(BaseModel):
    expression: str
    target: str


def _error_body(exc: Exception) -> dict:
    body = {"error": str(exc)}
    location = getattr(exc, "location", None)
    if location is not None:
        body["location"] = location
    return body


def create_app(store: ModelStore, ui_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="decision-diagram playground", docs_url=None, redoc_url=None)

    # The UI may be served from any static host, so the API answers
    # cross-origin requests.
    from fastapi.middleware.cors import CORSMiddleware

    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(AlgddError)
    async def algdd_error(request: Request, exc: AlgddError):
        status = 404 if isinstance(exc, (UnknownDiagramError, _NotFound)) else 400
        return JSONResponse(status_code=status, content=_error_body(exc))

    @app.exception_handler(RequestValidationError)
    async def body_error(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"error": "invalid request body", "location": str(exc.errors()[:1])},
        )

    @app.exception_handler(Exception)
    async def internal_error(request: Request, exc: Exception):
        return JSONResponse(status_code=500, content=_error_body(exc))

    def declaration_or_404() -> Declaration:
        if store.declaration is None:
            raise _NotFound("no declaration loaded in this workspace")
        return store.declaration

    @app.get("/api/declaration")
    def get_declaration():
        with store.lock:
            decl = declaration_or_404()
            return {"features": list(decl.features), "categories": list(decl.categories)}

    @app.get("/api/diagrams")
    def list_diagrams():
        with store.lock:
            return {
                "diagrams": sorted(store.diagrams),
                "default_expression": store.default_expression,
            }

    @app.get("/api/diagrams/{name}")
    def get_diagram(name: str):
        with store.lock:
            model = store.diagrams.get(name)
            if model is None:
                raise UnknownDiagramError(name)
            return diagram_doc(model)

    @app.put("/api/diagrams/{name}")
    def put_diagram(name: str, body: dict):
        with store.lock:
            decl = declaration_or_404()
            body_name = body.get("name")
            if body_name is not None and body_name != name:
                raise ValidationError(
                    f"document name '{body_name}' does not match URL name '{name}'"
                )
            model = diagram_from_doc({**body, "name": name}, decl)
            # Compile once against a fresh manager: a stored diagram must
            # always be compilable, not merely well-formed.
            compile_diagram(manager_for(decl, [model]), model)
            store.put_diagram(model)
            return diagram_doc(model)

    def _compose(expression: str, prune: bool = False):
        decl = declaration_or_404()
        mgr, root = compose(decl, store.diagrams, expression, prune=prune)
        return decl, mgr, root

    @app.post("/api/compose")
    def post_compose(req: ComposeRequest):
        with store.lock:
            decl, mgr, root = _compose(req.expression, req.prune_infeasible)
            counts = mgr.node_count(root)
            return {
                "graph": to_graph_doc(mgr, root, feature_order=decl.features),
                "node_counts": {"inner": counts.inner, "terminal": counts.terminal},
            }

    @app.post("/api/classify")
    def post_classify(req: ClassifyRequest):
        with store.lock:
            decl, mgr, root = _compose(req.expression)
            result = classify_diagram(mgr, root, req.features, decl)
            return {
                "category": result.category,
                "weights": dict(zip(decl.categories, result.weights)),
            }

    @app.get("/api/dot")
    def get_dot(expression: str, name: str = DOT_DEFAULT_NAME):
        with store.lock:
            _, mgr, root = _compose(expression)
            return PlainTextResponse(to_dot(mgr, root, name=name))

    @app.post("/api/codegen")
    def post_codegen(req: CodegenRequest):
        with store.lock:
            decl, mgr, root = _compose(req.expression)
            return PlainTextResponse(
                generate_code(mgr, root, req.target, feature_order=decl.features)
            )

    if ui_dir:
        ui_path = Path(ui_dir)
        if ui_path.is_dir():
            from fastapi.staticfiles import StaticFiles

            app.mount("/", StaticFiles(directory=ui_path, html=True), name="ui")

    return app
