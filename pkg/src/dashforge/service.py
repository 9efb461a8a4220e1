"""HTTP API over the document store.

Stateless between requests: every endpoint reads through the store, and
writers go through revision compare-and-set, so concurrent saves resolve
to exactly one winner and one 409. The editor UI is a separate static
app; enable CORS for its origin via the service config.
"""

from __future__ import annotations

import socket
from dataclasses import dataclass

from fastapi import Body, FastAPI, Query, Request
from fastapi.responses import HTMLResponse, JSONResponse

from .compose import MODES, UnknownPageError, compose_page, render_tree_to_wire
from .edits import (
    EditError,
    IllegalEditError,
    InvalidPayloadError,
    TargetNotFoundError,
    apply_edit,
    command_from_wire,
)
from .html_export import export_html
from .metrics import (
    MetricSeries,
    SeriesError,
    check_series,
    query_series,
    series_from_wire,
    series_to_wire,
)
from .model import ParseError, model_from_wire, model_to_wire
from .store import (
    DocumentStore,
    DuplicateModelError,
    FileStore,
    ModelNotFoundError,
    RevisionConflictError,
)
from .validation import validate_model


class PortInUseError(RuntimeError):
    def __init__(self, port: int):
        super().__init__(f"port {port} is already in use")
        self.port = port


@dataclass(frozen=True)
class ServiceConfig:
    port: int = 8632
    host: str = "127.0.0.1"
    data_dir: str = "./data"
    cors_origin: str | None = None


def _error(status: int, message: str, **extra) -> JSONResponse:
    body = {"error": message}
    body.update(extra)
    return JSONResponse(body, status_code=status)


def create_app(store: DocumentStore, cors_origin: str | None = None) -> FastAPI:
    app = FastAPI(title="dashforge", docs_url=None, redoc_url=None)

    if cors_origin:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=[cors_origin],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    # -- dashboards ---------------------------------------------------------

    @app.get("/api/dashboards")
    def list_dashboards():
        return [
            {"id": m.id, "name": m.name, "revision": m.revision}
            for m in store.list_models()
        ]

    @app.post("/api/dashboards")
    def create_dashboard(body: dict = Body(...)):
        try:
            model = model_from_wire(body)
        except ParseError as exc:
            return _error(422, exc.message, path=exc.path)
        report = validate_model(model)
        if not report.ok:
            first = report.violations[0]
            return _error(422, first.message, rule=first.rule, path=first.path)
        try:
            stored = store.put_model(model, expected_revision=None)
        except DuplicateModelError as exc:
            return _error(409, str(exc))
        return JSONResponse(
            {"id": stored.id, "revision": stored.revision}, status_code=201
        )

    @app.get("/api/dashboards/{model_id}")
    def get_dashboard(model_id: str):
        try:
            return model_to_wire(store.get_model(model_id))
        except ModelNotFoundError as exc:
            return _error(404, str(exc))

    @app.put("/api/dashboards/{model_id}")
    def put_dashboard(model_id: str, request: Request, body: dict = Body(...)):
        header = request.headers.get("if-match")
        if header is None or not header.strip().strip('"').isdigit():
            return _error(428, "If-Match header with the expected revision is required")
        expected = int(header.strip().strip('"'))
        try:
            model = model_from_wire(body)
        except ParseError as exc:
            return _error(422, exc.message, path=exc.path)
        if model.id != model_id:
            return _error(422, f"body id {model.id!r} does not match URL id {model_id!r}")
        report = validate_model(model)
        if not report.ok:
            first = report.violations[0]
            return _error(422, first.message, rule=first.rule, path=first.path)
        try:
            stored = store.put_model(model, expected_revision=expected)
        except ModelNotFoundError as exc:
            return _error(404, str(exc))
        except RevisionConflictError as exc:
            return _error(409, str(exc), revision=exc.actual)
        return {"revision": stored.revision}

    @app.delete("/api/dashboards/{model_id}", status_code=204)
    def delete_dashboard(model_id: str):
        try:
            store.delete_model(model_id)
        except ModelNotFoundError as exc:
            return _error(404, str(exc))

    # -- edits ----------------------------------------------------------------

    @app.post("/api/dashboards/{model_id}/edits")
    def edit_dashboard(model_id: str, body: dict = Body(...)):
        try:
            current = store.get_model(model_id)
        except ModelNotFoundError as exc:
            return _error(404, str(exc))
        expected = body.get("expectedRevision")
        if not isinstance(expected, int) or isinstance(expected, bool):
            return _error(422, "expectedRevision must be an integer")
        if expected != current.revision:
            return _error(
                409,
                f"expected revision {expected}, stored is {current.revision}",
                revision=current.revision,
            )
        try:
            command = command_from_wire(body.get("command"))
            edited = apply_edit(current, command)
        except (InvalidPayloadError,) as exc:
            return _error(422, str(exc), rule=exc.rule)
        except TargetNotFoundError as exc:
            return _error(422, str(exc), rule="TARGET_NOT_FOUND")
        except IllegalEditError as exc:
            return _error(422, str(exc), rule="ILLEGAL_EDIT")
        except EditError as exc:
            return _error(422, str(exc))
        try:
            stored = store.put_model(edited, expected_revision=expected)
        except RevisionConflictError as exc:
            return _error(409, str(exc), revision=exc.actual)
        return {"revision": stored.revision}

    # -- rendering ------------------------------------------------------------

    def _compose(model_id: str, page: str | None, mode: str, seed: int):
        model = store.get_model(model_id)
        page_ref = page if page is not None else model.pages[0].id
        provider = _store_provider(store)
        return compose_page(model, page_ref, provider, mode=mode, seed=seed)

    @app.get("/api/dashboards/{model_id}/render")
    def render_dashboard(
        model_id: str, page: str | None = None, mode: str = "full", seed: int = 0
    ):
        if mode not in MODES:
            return _error(422, f"mode must be one of {', '.join(MODES)}")
        try:
            tree = _compose(model_id, page, mode, seed)
        except ModelNotFoundError as exc:
            return _error(404, str(exc))
        except UnknownPageError as exc:
            return _error(404, f"no page with id {exc.page_id!r}")
        return render_tree_to_wire(tree)

    @app.get("/api/dashboards/{model_id}/export")
    def export_dashboard(
        model_id: str, page: str | None = None, mode: str = "full", seed: int = 0
    ):
        if mode not in MODES:
            return _error(422, f"mode must be one of {', '.join(MODES)}")
        try:
            tree = _compose(model_id, page, mode, seed)
        except ModelNotFoundError as exc:
            return _error(404, str(exc))
        except UnknownPageError as exc:
            return _error(404, f"no page with id {exc.page_id!r}")
        return HTMLResponse(export_html(tree))

    # -- metrics ----------------------------------------------------------------

    @app.get("/api/metrics/{series_id}")
    def get_metric(
        series_id: str,
        from_: float | None = Query(default=None, alias="from"),
        to: float | None = Query(default=None),
    ):
        window = None
        if from_ is not None or to is not None:
            window = (
                from_ if from_ is not None else float("-inf"),
                to if to is not None else float("inf"),
            )
        try:
            series = query_series(_series_lookup(store), series_id, window)
        except KeyError:
            return _error(404, f"no series with id {series_id!r}")
        return series_to_wire(series)

    @app.post("/api/metrics")
    def create_metric(body: dict = Body(...)):
        try:
            series = series_from_wire(body)
            check_series(series)
        except SeriesError as exc:
            return _error(422, str(exc))
        store.put_series(series)
        return JSONResponse({"id": series.id}, status_code=201)

    return app


def _store_provider(store: DocumentStore):
    def provider(metric_id: str) -> MetricSeries | None:
        try:
            return store.get_series(metric_id)
        except ModelNotFoundError:
            return None

    return provider


class _series_lookup:
    """Adapter giving ``query_series`` its ``get`` interface over a store."""

    def __init__(self, store: DocumentStore):
        self._store = store

    def get(self, series_id: str) -> MetricSeries | None:
        try:
            return self._store.get_series(series_id)
        except ModelNotFoundError:
            return None


def check_port_free(host: str, port: int) -> None:
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind((host, port))
    except OSError as exc:
        raise PortInUseError(port) from exc
    finally:
        probe.close()


def serve(config: ServiceConfig) -> None:
    """Run the service until interrupted; raises PortInUseError up front."""
    import uvicorn

    check_port_free(config.host, config.port)
    store = FileStore(config.data_dir)
    app = create_app(store, cors_origin=config.cors_origin)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
