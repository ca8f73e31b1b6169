"""HTTP surface over the registry: CRUD, analytics queries, and the live
server-sent event feed that keeps every connected client in sync."""

from __future__ import annotations

import asyncio
import json
from pathlib import Path

from fastapi import Body, FastAPI, Request
from fastapi.responses import JSONResponse, StreamingResponse
from fastapi.staticfiles import StaticFiles

from .model import DataKind, DuplicateIdError, UnknownItemError, ValidationFailed
from .registry import Event, Registry, ReplayGapError, UnknownRequestError
from .scenario import NotARequestError

KEEPALIVE_SECONDS = 15.0
POLL_SECONDS = 0.05


def _error_response(status: int, errors: list[dict]) -> JSONResponse:
    return JSONResponse(status_code=status, content={"errors": errors})


def _sse(event: Event) -> str:
    payload = json.dumps(event.to_document(), ensure_ascii=False)
    return f"id: {event.seq}\ndata: {payload}\n\n"


def create_app(registry: Registry, ui_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="teeda", docs_url=None, redoc_url=None)

    @app.exception_handler(ValidationFailed)
    async def _validation_failed(_request: Request, exc: ValidationFailed):
        return _error_response(400, [e.to_document() for e in exc.errors])

    @app.exception_handler(DuplicateIdError)
    async def _duplicate(_request: Request, exc: DuplicateIdError):
        return _error_response(409, [{"field": "id", "reason": f"DuplicateId: {exc.item_id!r}"}])

    @app.exception_handler(UnknownItemError)
    async def _unknown_item(_request: Request, exc: UnknownItemError):
        return _error_response(404, [{"field": "id", "reason": f"UnknownItem: {exc.item_id!r}"}])

    @app.exception_handler(UnknownRequestError)
    async def _unknown_request(_request: Request, exc: UnknownRequestError):
        return _error_response(404, [{"field": "id", "reason": f"UnknownRequest: {exc.item_id!r}"}])

    @app.exception_handler(NotARequestError)
    async def _not_a_request(_request: Request, exc: NotARequestError):
        return _error_response(400, [{"field": "id", "reason": f"NotARequest: {exc.item_id!r}"}])

    @app.post("/items", status_code=201)
    def create_item(payload: dict = Body(...)):
        return registry.create_item(payload).to_document()

    @app.get("/items")
    def list_items(kind: str | None = None):
        kind_filter = None
        if kind is not None:
            try:
                kind_filter = DataKind.parse(kind)
            except ValueError:
                return _error_response(400, [{"field": "kind", "reason": f"UnknownKind: {kind!r}"}])
        return registry.list_items(kind_filter)

    @app.get("/items/{item_id}")
    def get_item(item_id: str):
        return registry.get_item(item_id)

    @app.put("/items/{item_id}")
    def update_item(item_id: str, payload: dict = Body(...)):
        return registry.update_item(item_id, payload).to_document()

    @app.delete("/items/{item_id}")
    def delete_item(item_id: str):
        return registry.delete_item(item_id).to_document()

    @app.put("/items/{item_id}/category")
    def categorize(item_id: str, payload: dict = Body(...)):
        return registry.categorize(item_id, payload.get("category")).to_document()

    @app.get("/network")
    def get_network():
        return registry.get_network()

    @app.get("/stats")
    def get_stats():
        return registry.get_stats()

    @app.get("/report")
    def get_report():
        return registry.get_report()

    @app.get("/matches/{request_id}")
    def get_matches(request_id: str, top_k: int | None = None):
        return registry.get_matches(request_id, top_k)

    @app.get("/events")
    async def events(request: Request, since: int | None = None):
        if since is None:
            last_event_id = request.headers.get("last-event-id")
            if last_event_id is not None:
                since = int(last_event_id)
        if since is None:
            since = 0
        try:
            subscription = registry.subscribe(since)
        except ReplayGapError as exc:
            return _error_response(
                410, [{"field": "since", "reason": f"ReplayGap: {exc.since}"}]
            )

        async def stream():
            # polled rather than blocking so client disconnects cancel cleanly
            idle = 0.0
            try:
                while True:
                    event = subscription.try_next()
                    if event is None:
                        await asyncio.sleep(POLL_SECONDS)
                        idle += POLL_SECONDS
                        if idle >= KEEPALIVE_SECONDS:
                            idle = 0.0
                            yield ": keepalive\n\n"
                        continue
                    idle = 0.0
                    yield _sse(event)
            finally:
                subscription.close()

        return StreamingResponse(stream(), media_type="text/event-stream")

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
