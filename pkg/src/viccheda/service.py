"""Stateless HTTP/JSON service over the segmentation pipeline."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .errors import EmptyInput, InvalidPhoneme
from .resources import ResourceSet, load_resources, segment_text
from .scoring import Scorer
from .serialize import SCHEMA_VERSION, outcome_to_dict, solution_to_dict


class CellRef(BaseModel):
    span: tuple[int, int]
    form: str

    def key(self) -> tuple[int, int, str]:
        return (self.span[0], self.span[1], self.form)


class PruneConstraints(BaseModel):
    accepted: list[CellRef] = Field(default_factory=list)
    rejected: list[CellRef] = Field(default_factory=list)


class SegmentRequest(BaseModel):
    text: str
    scorer: Optional[str] = None
    dedup: bool = True
    max_solutions: Optional[int] = None


class PruneRequest(SegmentRequest):
    constraints: PruneConstraints = Field(default_factory=PruneConstraints)


def _run(res: ResourceSet, req: SegmentRequest):
    if not req.text.strip():
        raise HTTPException(status_code=422, detail="empty text")
    if req.scorer is not None and req.scorer not in Scorer._value2member_map_:
        raise HTTPException(status_code=422, detail=f"unknown scorer {req.scorer!r}")
    try:
        return segment_text(
            res,
            req.text,
            scorer=Scorer(req.scorer) if req.scorer else None,
            dedup=req.dedup,
            cap=req.max_solutions,
        )
    except InvalidPhoneme as exc:
        raise HTTPException(
            status_code=400,
            detail={"error": "InvalidPhoneme", "position": exc.position, "char": exc.char},
        ) from None
    except EmptyInput:
        raise HTTPException(status_code=422, detail="empty text") from None


def create_app(resources: Optional[ResourceSet] = None, static_dir=None) -> FastAPI:
    res = resources if resources is not None else load_resources()
    app = FastAPI(title="viccheda", version="1")

    @app.get("/api/health")
    def health():
        return {"status": "ok", "schema": SCHEMA_VERSION}

    @app.post("/api/segment")
    def api_segment(req: SegmentRequest):
        outcome = _run(res, req)
        return outcome_to_dict(outcome, include_lattice=True)

    @app.post("/api/prune")
    def api_prune(req: PruneRequest):
        accepted = {c.key() for c in req.constraints.accepted}
        rejected = {c.key() for c in req.constraints.rejected}
        overlap = accepted & rejected
        if overlap:
            raise HTTPException(
                status_code=400,
                detail={"error": "ConflictingConstraint", "cells": sorted(overlap)},
            )
        outcome = _run(res, req)
        n = len(outcome.text)
        for span0, span1, form in accepted | rejected:
            if not (0 <= span0 <= span1 <= n):
                raise HTTPException(
                    status_code=400,
                    detail={"error": "SpanOutOfRange", "span": [span0, span1], "form": form},
                )
        kept = []
        for sol in outcome.solutions:
            cells = {(s.span[0], s.span[1], s.form) for s in sol.segments}
            if accepted <= cells and not (rejected & cells):
                kept.append(sol)
        for i, sol in enumerate(kept, 1):
            sol.rank = i
        payload = {
            "schema": SCHEMA_VERSION,
            "text": outcome.text,
            "scorer": outcome.scorer.value,
            "dedup": outcome.dedup,
            "truncated": outcome.truncated,
            "solutions": [solution_to_dict(s) for s in kept],
        }
        if not kept:
            return JSONResponse(
                status_code=409,
                content={**payload, "reason": "constraints eliminate all solutions"},
            )
        return payload

    static = Path(static_dir) if static_dir else None
    if static and static.is_dir():
        app.mount("/", StaticFiles(directory=str(static), html=True), name="ui")
    return app
