"""Style consistency metrics over associated element pairs.

Each pair is scored on four computed-style attributes (foreground color,
background color, font size, border radius); the per-pair score is their
arithmetic mean and the page score is the race-weight-normalized sum,
expressed in [0, 100]. The attribute list is configurable so further
computed styles can be added without changing the API.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .association import AssociationMap
from .errors import EmptyReferenceError
from .layout import GroupStats
from .snapshot import PageSnapshot, StyleAttrs

_RGB_DIAGONAL = 255.0 * math.sqrt(3.0)


def color_sim(a: Sequence[int], b: Sequence[int]) -> float:
    """RGB similarity: 1 - Euclidean distance over the unit color cube diagonal."""
    distance = math.sqrt(sum((ca - cb) ** 2 for ca, cb in zip(a, b)))
    return min(1.0, max(0.0, 1.0 - distance / _RGB_DIAGONAL))


def bg_color_sim(a: Sequence[float], b: Sequence[float]) -> float:
    """RGBA similarity with alpha folded in as a fourth normalized component.

    A fully transparent background differing from an opaque one is a visible
    style error, so alpha participates instead of short-circuiting.
    """
    deltas = [
        (a[0] - b[0]) / 255.0,
        (a[1] - b[1]) / 255.0,
        (a[2] - b[2]) / 255.0,
        a[3] - b[3],
    ]
    distance = math.sqrt(sum(d * d for d in deltas)) / 2.0
    return min(1.0, max(0.0, 1.0 - distance))


def scalar_sim(a: float, b: float) -> float:
    """Relative similarity of two non-negative scalars; (0, 0) compares equal."""
    if a == b:
        return 1.0
    return max(0.0, 1.0 - abs(a - b) / max(a, b))


_ATTRIBUTE_SIMS: dict[str, Callable[[StyleAttrs, StyleAttrs], float]] = {
    "color": lambda s, t: color_sim(s.color, t.color),
    "background_color": lambda s, t: bg_color_sim(s.background_color, t.background_color),
    "font_size": lambda s, t: scalar_sim(s.font_size, t.font_size),
    "border_radius": lambda s, t: scalar_sim(s.border_radius, t.border_radius),
}

DEFAULT_ATTRIBUTES: tuple[str, ...] = tuple(_ATTRIBUTE_SIMS)


@dataclass(frozen=True)
class StylePair:
    reference_index: int
    color_sim: float
    bg_sim: float
    font_sim: float
    radius_sim: float
    element_sim: float


@dataclass(frozen=True)
class StyleScores:
    sda: float
    per_pair: tuple[StylePair, ...]


def element_style_sim(
    s: StyleAttrs, t: StyleAttrs, attributes: Sequence[str] = DEFAULT_ATTRIBUTES
) -> float:
    """Mean attribute similarity between two style records."""
    return sum(_ATTRIBUTE_SIMS[name](s, t) for name in attributes) / len(attributes)


def style_scores(
    assoc: AssociationMap,
    groups_ref: GroupStats,
    candidate: PageSnapshot,
    reference: PageSnapshot,
    attributes: Sequence[str] = DEFAULT_ATTRIBUTES,
) -> StyleScores:
    """Page style score plus the per-pair attribute breakdown."""
    total = groups_ref.total_weight
    if total <= 0:
        raise EmptyReferenceError("reference page has no weighted elements")
    acc = 0.0
    rows: list[StylePair] = []
    for pair in assoc.pairs:
        s = candidate.elements[pair.candidate_index].styles
        t = reference.elements[pair.reference_index].styles
        element_sim = element_style_sim(s, t, attributes)
        acc += groups_ref.race_weights[pair.reference_index] * element_sim
        rows.append(
            StylePair(
                reference_index=pair.reference_index,
                color_sim=color_sim(s.color, t.color),
                bg_sim=bg_color_sim(s.background_color, t.background_color),
                font_sim=scalar_sim(s.font_size, t.font_size),
                radius_sim=scalar_sim(s.border_radius, t.border_radius),
                element_sim=element_sim,
            )
        )
    return StyleScores(sda=100.0 * acc / total, per_pair=tuple(rows))


def sda_page(
    assoc: AssociationMap,
    groups_ref: GroupStats,
    candidate: PageSnapshot,
    reference: PageSnapshot,
    attributes: Sequence[str] = DEFAULT_ATTRIBUTES,
) -> float:
    """Page-level style score in [0, 100]; unmatched elements contribute zero."""
    return style_scores(assoc, groups_ref, candidate, reference, attributes).sda
