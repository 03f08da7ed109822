"""HTTP prediction service over a persisted trained pipeline.

The loaded pipeline is immutable and shared across requests; hot reload swaps
a single reference.  All numbers a client sees come from the pipeline -- the
service never recomputes features client-side conventions could drift from.
"""

from __future__ import annotations

import json
import logging
import sys
import time
from datetime import datetime, timedelta, timezone
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .corpus import MAX_TEXT_CHARS, AccountSnapshot, MentionInfo, TweetRecord
from .features import DECORATION_SCHEMA, FAMILIES, breakdown
from .pipeline import TrainedPipeline, load_pipeline

MAX_COMPARE_VARIANTS = 20

logger = logging.getLogger("tweetcraft.service")


class AccountPayload(BaseModel):
    follower_count: int = Field(ge=0)
    post_count: int = Field(ge=0)
    favorite_count: int = Field(ge=0)
    listed_count: int = Field(ge=0)
    registered_at: datetime
    snapshot_at: datetime | None = None


class MentionPayload(BaseModel):
    username: str
    verified: bool = False
    follower_count: int = Field(default=0, ge=0)


class PredictRequest(BaseModel):
    text: str
    account: AccountPayload
    posted_at: datetime | None = None
    utc_offset_minutes: int = 0
    mentions_meta: list[MentionPayload] = Field(default_factory=list)


class ModelHolder:
    """Atomic reference to the currently served pipeline."""

    def __init__(self, pipeline: TrainedPipeline | None = None):
        self.pipeline = pipeline

    def swap(self, pipeline: TrainedPipeline) -> None:
        self.pipeline = pipeline


def _as_utc(dt: datetime) -> datetime:
    if dt.tzinfo is None:
        return dt.replace(tzinfo=timezone.utc)
    return dt.astimezone(timezone.utc)


def _to_record(request: PredictRequest) -> TweetRecord:
    posted_at = _as_utc(request.posted_at) if request.posted_at else datetime.now(timezone.utc)
    snapshot_at = (
        _as_utc(request.account.snapshot_at) if request.account.snapshot_at else posted_at
    )
    account = AccountSnapshot(
        follower_count=request.account.follower_count,
        post_count=request.account.post_count,
        favorite_count=request.account.favorite_count,
        listed_count=request.account.listed_count,
        registered_at=_as_utc(request.account.registered_at),
        snapshot_at=snapshot_at,
    )
    return TweetRecord(
        id="request",
        text=request.text,
        posted_at=posted_at,
        utc_offset_minutes=request.utc_offset_minutes,
        collected_at=posted_at + timedelta(days=22),
        retweet_count=0,
        favorite_count=0,
        account=account,
        mentions_meta=tuple(
            MentionInfo(m.username, m.verified, m.follower_count)
            for m in request.mentions_meta
        ),
    )


def _predict_payload(pipeline: TrainedPipeline, request: PredictRequest) -> dict:
    label, score, raw = pipeline.predict_record(_to_record(request))
    return {
        "label": label,
        "score": score,
        "feature_breakdown": breakdown(raw),
        "schema_version": pipeline.schema_version,
        "model_id": pipeline.model_id,
    }


def create_app(
    model_path: str | Path | None = None,
    pipeline: TrainedPipeline | None = None,
    static_dir: str | Path | None = None,
) -> FastAPI:
    if pipeline is None and model_path is not None:
        pipeline = load_pipeline(model_path)
    holder = ModelHolder(pipeline)

    app = FastAPI(title="tweetcraft prediction service")
    app.state.holder = holder

    @app.exception_handler(RequestValidationError)
    async def invalid_payload(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    @app.middleware("http")
    async def log_requests(request: Request, call_next):
        start = time.monotonic()
        response = await call_next(request)
        logger.info(
            json.dumps(
                {
                    "method": request.method,
                    "path": request.url.path,
                    "status": response.status_code,
                    "duration_ms": round((time.monotonic() - start) * 1000, 3),
                }
            )
        )
        return response

    def served_pipeline() -> TrainedPipeline | None:
        return holder.pipeline

    def validate_text(text: str) -> JSONResponse | None:
        if not text:
            return JSONResponse(status_code=400, content={"detail": "text must be non-empty"})
        if len(text) > MAX_TEXT_CHARS:
            return JSONResponse(
                status_code=413,
                content={"detail": f"text exceeds {MAX_TEXT_CHARS} characters"},
            )
        return None

    @app.post("/v1/predict")
    def predict(request: PredictRequest):
        current = served_pipeline()
        if current is None:
            return JSONResponse(status_code=503, content={"detail": "model not loaded"})
        error = validate_text(request.text)
        if error is not None:
            return error
        return JSONResponse(_predict_payload(current, request))

    @app.post("/v1/compare")
    def compare(requests: list[PredictRequest]):
        current = served_pipeline()
        if current is None:
            return JSONResponse(status_code=503, content={"detail": "model not loaded"})
        if not 1 <= len(requests) <= MAX_COMPARE_VARIANTS:
            return JSONResponse(
                status_code=400,
                content={"detail": f"expected 1..{MAX_COMPARE_VARIANTS} variants"},
            )
        for request in requests:
            error = validate_text(request.text)
            if error is not None:
                return error
        payloads = [_predict_payload(current, r) for r in requests]
        # Rank by score descending; sort is stable, so ties keep request order.
        order = sorted(range(len(payloads)), key=lambda i: -payloads[i]["score"])
        for rank, idx in enumerate(order, start=1):
            payloads[idx]["rank"] = rank
        return JSONResponse(payloads)

    @app.get("/v1/model")
    def model_info():
        current = served_pipeline()
        if current is None:
            return JSONResponse(status_code=503, content={"detail": "model not loaded"})
        return JSONResponse(
            {
                "id": current.model_id,
                "schema_version": current.schema_version,
                "families": list(FAMILIES),
                "feature_names": list(DECORATION_SCHEMA.names),
                "feature_families": {name: fam for name, fam in DECORATION_SCHEMA.entries},
                "include_families": list(current.include_families),
                "classifier_kind": current.classifier_kind,
                "training_metrics": current.metrics,
            }
        )

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/ui", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app


def serve(model_path: str | Path, host: str = "127.0.0.1", port: int = 8000,
          static_dir: str | Path | None = None, log_level: str = "info") -> None:
    """Run the service under uvicorn; structured request logs go to stderr."""
    import uvicorn

    logging.basicConfig(stream=sys.stderr, level=log_level.upper())
    app = create_app(model_path=model_path, static_dir=static_dir)
    uvicorn.run(app, host=host, port=port, log_level=log_level)
