"""Reward combination, advantage normalization, and batch page scoring.

The combined reward is the weighted mean of the three page scores rescaled
to [0, 1]; weights are normalized by their sum so sweeping one coefficient
never pushes the reward out of range. Advantages are the per-group
mean/std normalization used by group-relative policy optimization, with a
zero-variance guard so uninformative rollout groups yield zero advantage.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Callable, Sequence

import numpy as np

from .association import AssociationMap, associate
from .errors import GroupSizeError, RenderScoreError, WeightError
from .layout import build_groups, layout_scores
from .snapshot import PageSnapshot, snapshot_from_dict
from .style import style_scores

VARIANCE_EPS = 1e-8


@dataclass(frozen=True)
class RewardWeights:
    """Non-negative coefficients for the layout, group, and style scores."""

    alpha: float = 0.6
    beta: float = 0.2
    gamma: float = 0.2

    def __post_init__(self) -> None:
        if min(self.alpha, self.beta, self.gamma) < 0:
            raise WeightError("reward weights must be non-negative")
        if self.total <= 0:
            raise WeightError("at least one reward weight must be positive")

    @property
    def total(self) -> float:
        return self.alpha + self.beta + self.gamma


DEFAULT_WEIGHTS = RewardWeights()


def combine_reward(
    rda: float, gda: float, sda: float, weights: RewardWeights = DEFAULT_WEIGHTS
) -> float:
    """Weighted combination of the three page scores, rescaled into [0, 1]."""
    return (weights.alpha * rda + weights.beta * gda + weights.gamma * sda) / (
        100.0 * weights.total
    )


@dataclass(frozen=True)
class AdvantageVector:
    values: tuple[float, ...]


def advantages(rewards: Sequence[float]) -> AdvantageVector:
    """Mean/std-normalize one group of rewards (population std).

    Groups with std below 1e-8 carry no learning signal and map to all
    zeros rather than amplifying float noise.
    """
    arr = np.asarray(rewards, dtype=np.float64)
    if arr.size == 0:
        return AdvantageVector(())
    std = float(arr.std())
    if std < VARIANCE_EPS:
        return AdvantageVector((0.0,) * arr.size)
    normalized = (arr - float(arr.mean())) / std
    return AdvantageVector(tuple(float(v) for v in normalized))


@dataclass(frozen=True)
class PairDiagnostic:
    """Per-pair detail merged across the association and the three metrics."""

    reference_index: int
    candidate_index: int
    method: str
    text_sim: float
    geo_dist: float
    layout_score: float
    group_match: bool
    style_sim: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "reference_index": self.reference_index,
            "candidate_index": self.candidate_index,
            "method": self.method,
            "text_sim": self.text_sim,
            "geo_dist": self.geo_dist,
            "layout_score": self.layout_score,
            "group_match": self.group_match,
            "style_sim": self.style_sim,
        }


@dataclass(frozen=True)
class ScoreReport:
    """The three page scores, the combined reward, and match diagnostics."""

    rda: float
    gda: float
    sda: float
    reward: float
    matched: int
    candidate_elements: int
    reference_elements: int
    unmatched_candidate: tuple[int, ...]
    unmatched_reference: tuple[int, ...]
    pairs: tuple[PairDiagnostic, ...] | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "rda": self.rda,
            "gda": self.gda,
            "sda": self.sda,
            "reward": self.reward,
            "matched": self.matched,
            "candidate_elements": self.candidate_elements,
            "reference_elements": self.reference_elements,
            "unmatched_candidate": list(self.unmatched_candidate),
            "unmatched_reference": list(self.unmatched_reference),
            "pairs": [p.to_dict() for p in self.pairs] if self.pairs is not None else None,
        }


@dataclass(frozen=True)
class SlotError:
    """Failure record for one batch slot; scores as reward 0 in its group."""

    kind: str
    message: str
    path: str = ""
    reward: float = field(default=0.0, init=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "error": {"kind": self.kind, "path": self.path, "message": self.message},
            "reward": self.reward,
        }


@dataclass(frozen=True)
class BatchResult:
    reports: tuple[ScoreReport | SlotError, ...]
    advantages: tuple[tuple[float, ...], ...] | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "reports": [r.to_dict() for r in self.reports],
            "advantages": [list(g) for g in self.advantages]
            if self.advantages is not None
            else None,
        }


Matcher = Callable[[PageSnapshot, PageSnapshot], AssociationMap]

SnapshotLike = Any  # PageSnapshot or a decoded snapshot JSON document


def score_pair(
    candidate: PageSnapshot,
    reference: PageSnapshot,
    weights: RewardWeights = DEFAULT_WEIGHTS,
    *,
    detail: bool = False,
    tolerance: float = 0.0,
    matcher: Matcher = associate,
) -> ScoreReport:
    """Score one candidate page against its reference page.

    Pure and deterministic: association, group construction, the three page
    scores, and the combined reward, in that order. ``detail`` adds the
    per-pair breakdown to the report.
    """
    assoc = matcher(candidate, reference)
    groups_cand = build_groups(candidate, tolerance)
    groups_ref = build_groups(reference, tolerance)
    layout = layout_scores(assoc, groups_cand, groups_ref, candidate, reference)
    style = style_scores(assoc, groups_ref, candidate, reference)
    reward = combine_reward(layout.rda, layout.gda, style.sda, weights)

    pairs: tuple[PairDiagnostic, ...] | None = None
    if detail:
        pairs = tuple(
            PairDiagnostic(
                reference_index=link.reference_index,
                candidate_index=link.candidate_index,
                method=link.method.value,
                text_sim=link.text_sim,
                geo_dist=link.geo_dist,
                layout_score=row.pair_score,
                group_match=row.group_match,
                style_sim=srow.element_sim,
            )
            for link, row, srow in zip(assoc.pairs, layout.per_pair, style.per_pair)
        )

    return ScoreReport(
        rda=layout.rda,
        gda=layout.gda,
        sda=style.sda,
        reward=reward,
        matched=len(assoc.pairs),
        candidate_elements=len(candidate.elements),
        reference_elements=len(reference.elements),
        unmatched_candidate=assoc.unmatched_candidate,
        unmatched_reference=assoc.unmatched_reference,
        pairs=pairs,
    )


def _resolve_snapshot(side: SnapshotLike, label: str) -> PageSnapshot:
    if isinstance(side, PageSnapshot):
        return side
    return snapshot_from_dict(side, path=label)


def _score_slot(
    item: tuple[SnapshotLike, SnapshotLike],
    weights: RewardWeights,
    detail: bool,
    tolerance: float,
) -> ScoreReport | SlotError:
    try:
        candidate = _resolve_snapshot(item[0], "candidate")
        reference = _resolve_snapshot(item[1], "reference")
        return score_pair(candidate, reference, weights, detail=detail, tolerance=tolerance)
    except RenderScoreError as exc:
        return SlotError(kind=exc.kind, message=exc.message, path=exc.path)
    except Exception as exc:  # noqa: BLE001 - one bad slot must not abort the batch
        return SlotError(kind="internal", message=str(exc))


def score_batch(
    items: Sequence[tuple[SnapshotLike, SnapshotLike]],
    weights: RewardWeights = DEFAULT_WEIGHTS,
    *,
    group_size: int | None = None,
    workers: int = 1,
    detail: bool = False,
    tolerance: float = 0.0,
) -> BatchResult:
    """Score (candidate, reference) pairs, optionally with grouped advantages.

    Items may be PageSnapshots or raw snapshot documents; parse failures are
    confined to their slot. Reports come back in input order no matter how
    many workers evaluate the batch, so results are reproducible across
    parallelism settings. When ``group_size`` is given, the batch length
    must divide evenly and each consecutive group is advantage-normalized
    (slot errors count as reward 0).
    """
    items = list(items)
    if group_size is not None:
        if group_size < 1:
            raise GroupSizeError(f"group size must be >= 1, got {group_size}")
        if len(items) % group_size != 0:
            raise GroupSizeError(
                f"batch of {len(items)} is not divisible by group size {group_size}"
            )
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")

    run = partial(_score_slot, weights=weights, detail=detail, tolerance=tolerance)
    if workers == 1 or len(items) <= 1:
        reports = [run(item) for item in items]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(run, items))

    grouped: tuple[tuple[float, ...], ...] | None = None
    if group_size is not None:
        rewards = [report.reward for report in reports]
        grouped = tuple(
            advantages(rewards[start : start + group_size]).values
            for start in range(0, len(rewards), group_size)
        )
    return BatchResult(tuple(reports), grouped)
