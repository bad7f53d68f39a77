"""HTTP facade over the scoring engine.

Stateless request handling: every endpoint is a pure function of its body
plus the immutable service configuration, so concurrent requests need no
locking. Schema and validation problems come back as 400 with the JSON
path of the offending field; an empty reference page is 422 because the
document is well-formed but unscorable; renderer-bridge failures are 502.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from ..bridge import RendererBridge
from ..errors import BridgeError, EmptyReferenceError, RenderScoreError
from ..scoring import RewardWeights, score_batch, score_pair
from ..snapshot import snapshot_from_dict
from .models import (
    BatchRequest,
    BatchResponse,
    HealthResponse,
    RenderScoreRequest,
    ScoreRequest,
    ScoreResponse,
    WeightsModel,
)


@dataclass(frozen=True)
class ServiceConfig:
    workers: int = 8
    weights: RewardWeights = field(default_factory=RewardWeights)
    bridge_command: str | None = None
    bridge_timeout: float = 60.0
    tolerance: float = 0.0


def _error_body(kind: str, path: str, message: str) -> dict:
    return {"error": {"kind": kind, "path": path, "message": message}}


def _loc_path(loc: tuple) -> str:
    parts = []
    for segment in loc:
        if segment == "body":
            continue
        if isinstance(segment, int):
            parts.append(f"[{segment}]")
        else:
            parts.append(f".{segment}" if parts else str(segment))
    return "".join(parts)


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    cfg = config or ServiceConfig()
    app = FastAPI(title="renderscore", version="0.1.0")
    app.state.config = cfg

    def resolve_weights(weights: WeightsModel | None) -> RewardWeights:
        if weights is None:
            return cfg.weights
        return RewardWeights(weights.alpha, weights.beta, weights.gamma)

    @app.exception_handler(RenderScoreError)
    async def engine_error(request: Request, exc: RenderScoreError) -> JSONResponse:
        if isinstance(exc, EmptyReferenceError):
            status = 422
        elif isinstance(exc, BridgeError):
            status = 502
        else:
            status = 400
        return JSONResponse(_error_body(exc.kind, exc.path, exc.message), status)

    @app.exception_handler(RequestValidationError)
    async def request_error(request: Request, exc: RequestValidationError) -> JSONResponse:
        first = exc.errors()[0]
        return JSONResponse(
            _error_body("schema", _loc_path(tuple(first["loc"])), first["msg"]), 400
        )

    @app.get("/healthz", response_model=HealthResponse)
    def healthz() -> HealthResponse:
        return HealthResponse()

    @app.post("/v1/score", response_model=ScoreResponse)
    def score(req: ScoreRequest) -> ScoreResponse:
        candidate = snapshot_from_dict(req.candidate, path="candidate")
        reference = snapshot_from_dict(req.reference, path="reference")
        report = score_pair(
            candidate,
            reference,
            resolve_weights(req.weights),
            detail=req.detail,
            tolerance=cfg.tolerance,
        )
        return ScoreResponse.model_validate(report.to_dict())

    @app.post("/v1/batch", response_model=BatchResponse)
    def batch(req: BatchRequest) -> BatchResponse:
        result = score_batch(
            [(item.candidate, item.reference) for item in req.pairs],
            resolve_weights(req.weights),
            group_size=req.group_size,
            workers=cfg.workers,
            detail=req.detail,
            tolerance=cfg.tolerance,
        )
        return BatchResponse.model_validate(result.to_dict())

    @app.post("/v1/render-score", response_model=ScoreResponse)
    def render_score(req: RenderScoreRequest):
        if cfg.bridge_command is None:
            return JSONResponse(
                _error_body("bridge", "", "no renderer bridge configured"), 501
            )
        bridge = RendererBridge(cfg.bridge_command, cfg.bridge_timeout)
        candidate = bridge.render(req.candidate_html)
        reference = snapshot_from_dict(req.reference, path="reference")
        report = score_pair(
            candidate,
            reference,
            resolve_weights(req.weights),
            detail=req.detail,
            tolerance=cfg.tolerance,
        )
        return ScoreResponse.model_validate(report.to_dict())

    return app
