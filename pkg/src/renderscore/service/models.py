"""Pydantic wire models for the scoring service.

Snapshot bodies are accepted as raw objects and validated by the snapshot
parser itself, which reports precise JSON paths; pydantic handles the
envelope shape.
"""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, Field


class WeightsModel(BaseModel):
    alpha: float = Field(default=0.6, ge=0)
    beta: float = Field(default=0.2, ge=0)
    gamma: float = Field(default=0.2, ge=0)


class ScoreRequest(BaseModel):
    candidate: dict[str, Any]
    reference: dict[str, Any]
    weights: WeightsModel | None = None
    detail: bool = False


class BatchPairItem(BaseModel):
    candidate: dict[str, Any]
    reference: dict[str, Any]


class BatchRequest(BaseModel):
    pairs: list[BatchPairItem]
    weights: WeightsModel | None = None
    group_size: int | None = None
    detail: bool = False


class RenderScoreRequest(BaseModel):
    candidate_html: str
    reference: dict[str, Any]
    weights: WeightsModel | None = None
    detail: bool = False


class PairDiagnosticModel(BaseModel):
    reference_index: int
    candidate_index: int
    method: str
    text_sim: float
    geo_dist: float
    layout_score: float
    group_match: bool
    style_sim: float


class ScoreResponse(BaseModel):
    rda: float
    gda: float
    sda: float
    reward: float
    matched: int
    candidate_elements: int
    reference_elements: int
    unmatched_candidate: list[int]
    unmatched_reference: list[int]
    pairs: list[PairDiagnosticModel] | None = None


class ErrorInfo(BaseModel):
    kind: str
    path: str = ""
    message: str


class SlotErrorModel(BaseModel):
    error: ErrorInfo
    reward: float = 0.0


class BatchResponse(BaseModel):
    reports: list[ScoreResponse | SlotErrorModel]
    advantages: list[list[float]] | None = None


class HealthResponse(BaseModel):
    status: str = "ok"
