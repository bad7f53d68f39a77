"""Layout and style consistency scoring for rendered web pages.

Scores a candidate page snapshot against a reference snapshot on three
axes: relative element layout, alignment-group structure, and computed
style, then combines them into a single [0, 1] reward suitable for
reinforcement-learning rollouts. Ships with an HTTP batch service and a
corpus-tooling CLI.
"""

from .association import (
    SIZE_GAP_LIMIT,
    TEXT_MATCH_THRESHOLD,
    AssociationMap,
    AssociationPair,
    MatchMethod,
    associate,
    geo_distance,
    lcs_length,
    lcs_similarity,
)
from .bridge import RendererBridge
from .corpus import BinSpec, corpus_stats, filter_corpus
from .errors import (
    BridgeError,
    DomainError,
    EmptyReferenceError,
    GroupSizeError,
    RenderScoreError,
    SchemaError,
    ValidationError,
    WeightError,
)
from .layout import (
    Axis,
    AxisSet,
    GroupStats,
    HSide,
    LayoutPair,
    LayoutScores,
    QuadrantBias,
    VSide,
    axis_overlaps,
    build_groups,
    gda_page,
    layout_scores,
    pos_sim,
    quadrant,
    rda_page,
    rda_pair,
)
from .scoring import (
    DEFAULT_WEIGHTS,
    AdvantageVector,
    BatchResult,
    PairDiagnostic,
    RewardWeights,
    ScoreReport,
    SlotError,
    advantages,
    combine_reward,
    score_batch,
    score_pair,
)
from .snapshot import (
    ElementSnapshot,
    PageSnapshot,
    PageStats,
    Position,
    Rect,
    StyleAttrs,
    normalize_text,
    page_stats,
    parse_snapshot,
    snapshot_from_dict,
    snapshot_to_dict,
    snapshot_to_json,
    style_quality_score,
)
from .style import (
    DEFAULT_ATTRIBUTES,
    StylePair,
    StyleScores,
    bg_color_sim,
    color_sim,
    element_style_sim,
    scalar_sim,
    sda_page,
    style_scores,
)

__version__ = "0.1.0"

__all__ = [
    "AdvantageVector",
    "AssociationMap",
    "AssociationPair",
    "Axis",
    "AxisSet",
    "BatchResult",
    "BinSpec",
    "BridgeError",
    "DEFAULT_ATTRIBUTES",
    "DEFAULT_WEIGHTS",
    "DomainError",
    "ElementSnapshot",
    "EmptyReferenceError",
    "GroupSizeError",
    "GroupStats",
    "HSide",
    "LayoutPair",
    "LayoutScores",
    "MatchMethod",
    "PageSnapshot",
    "PageStats",
    "PairDiagnostic",
    "Position",
    "QuadrantBias",
    "Rect",
    "RenderScoreError",
    "RendererBridge",
    "RewardWeights",
    "SIZE_GAP_LIMIT",
    "SchemaError",
    "ScoreReport",
    "SlotError",
    "StyleAttrs",
    "StylePair",
    "StyleScores",
    "TEXT_MATCH_THRESHOLD",
    "VSide",
    "ValidationError",
    "WeightError",
    "advantages",
    "associate",
    "axis_overlaps",
    "bg_color_sim",
    "build_groups",
    "color_sim",
    "combine_reward",
    "corpus_stats",
    "element_style_sim",
    "filter_corpus",
    "gda_page",
    "geo_distance",
    "layout_scores",
    "lcs_length",
    "lcs_similarity",
    "normalize_text",
    "page_stats",
    "parse_snapshot",
    "pos_sim",
    "quadrant",
    "rda_page",
    "rda_pair",
    "scalar_sim",
    "score_batch",
    "score_pair",
    "sda_page",
    "snapshot_from_dict",
    "snapshot_to_dict",
    "snapshot_to_json",
    "style_quality_score",
    "style_scores",
]
