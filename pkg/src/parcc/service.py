"""Stateless HTTP service exposing checking, inference, and placement.

Request bodies carry whole documents, so every call is self contained
and the process keeps no session state.  Scene and inventory payloads
go through the same validators as files on disk; structural problems
come back as 400 with a JSON path, semantic ones as 422.
"""

from __future__ import annotations

import os
from typing import Optional

import numpy as np
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .documents import demo_from_json, demo_to_json, inventory_from_json
from .errors import (
    DocumentError,
    EvaluationError,
    MetadataError,
    NoRelevantObjectsError,
    SamplingError,
    SpecSyntaxError,
    SynthesisError,
)
from .evaluate import explain
from .formula import parse_spec
from .geometry import DEFAULT_TAU
from .inference import InferenceParams, check_consistent_metadata, infer
from .synthesis import DEFAULT_BUDGET, Infeasible, place
from .templates import builtin_templates, load_template


class CheckRequest(BaseModel):
    spec: str
    demo: dict
    tau: float = DEFAULT_TAU


class InferRequest(BaseModel):
    demos: list[dict] = Field(min_length=1)
    template: str | dict = "original"
    max_len: Optional[int] = None
    p_c: float = 0.05
    epsilon: float = 0.01
    k_r: int = 100
    seed: Optional[int] = None
    tau: float = DEFAULT_TAU


class PlaceRequest(BaseModel):
    spec: str
    inventory: dict
    seed: Optional[int] = None
    budget: int = DEFAULT_BUDGET
    tau: float = DEFAULT_TAU


def _resolve_template(source: str | dict, max_len: Optional[int]) -> Template:
    # Unlike the CLI, the service never reads template descriptor files:
    # names must be built-ins, anything else travels inline as a dict.
    if isinstance(source, str) and source not in builtin_templates():
        known = ", ".join(sorted(builtin_templates()))
        raise DocumentError(f"unknown template {source!r}, expected one of: {known}")
    return load_template(source, max_len=max_len)


def create_app(frontend_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="parcc", version=__version__)

    @app.exception_handler(DocumentError)
    async def _document_error(request: Request, exc: DocumentError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"error": {"type": "DocumentError", "message": str(exc), "path": exc.path}},
        )

    @app.exception_handler(SpecSyntaxError)
    async def _syntax_error(request: Request, exc: SpecSyntaxError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={
                "error": {
                    "type": "SpecSyntaxError",
                    "message": str(exc),
                    "line": exc.line,
                    "column": exc.column,
                }
            },
        )

    for err_type in (
        MetadataError,
        EvaluationError,
        NoRelevantObjectsError,
        SamplingError,
        SynthesisError,
        ValueError,
    ):

        @app.exception_handler(err_type)
        async def _semantic_error(request: Request, exc: Exception) -> JSONResponse:
            return JSONResponse(
                status_code=422,
                content={"error": {"type": type(exc).__name__, "message": str(exc)}},
            )

    @app.get("/api/health")
    async def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.get("/api/templates")
    async def templates() -> dict:
        return {
            "templates": [t.to_descriptor() for t in builtin_templates().values()]
        }

    @app.post("/api/check")
    async def check(req: CheckRequest) -> dict:
        spec = parse_spec(req.spec)
        demo = demo_from_json(req.demo)
        reports = explain(spec, demo, tau=req.tau)
        return {
            "satisfied": not reports,
            "clauses_total": len(spec),
            "violations": [r.to_json() for r in reports],
        }

    @app.post("/api/infer")
    async def run_infer(req: InferRequest) -> dict:
        demos = [demo_from_json(d) for d in req.demos]
        check_consistent_metadata(demos)
        template = _resolve_template(req.template, req.max_len)
        params = InferenceParams(
            p_c=req.p_c, epsilon=req.epsilon, k_r=req.k_r, seed=req.seed
        )
        result = infer(demos, template, params, tau=req.tau)
        return {
            "spec": "\n".join(str(c) for c in result.spec),
            "clauses": [r.to_json() for r in result.reports],
            "enumerated": result.enumerated,
            "checked": result.checked,
            "params": params.to_json(),
            "template": template.to_descriptor(),
        }

    @app.post("/api/place")
    async def run_place(req: PlaceRequest) -> dict:
        spec = parse_spec(req.spec)
        inventory = inventory_from_json(req.inventory)
        rng = np.random.default_rng(req.seed)
        result = place(spec, inventory, rng, tau=req.tau, budget=req.budget)
        if isinstance(result, Infeasible):
            return {
                "placed": False,
                "infeasible": {
                    "proven": result.proven,
                    "reason": result.reason,
                    "best_satisfied": result.best_satisfied,
                    "clauses_total": result.clauses_total,
                },
            }
        return {"placed": True, "demo": demo_to_json(result)}

    if frontend_dir is not None:
        from fastapi.staticfiles import StaticFiles

        if not os.path.isdir(frontend_dir):
            raise ValueError(f"frontend directory {frontend_dir!r} does not exist")
        app.mount("/", StaticFiles(directory=frontend_dir, html=True), name="frontend")

    return app


app = create_app()
