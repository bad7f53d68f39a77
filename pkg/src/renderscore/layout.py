"""Layout consistency metrics: quadrant agreement, axis grouping, page scores.

Two page-level scores live here. The relative-layout score (RDA) checks,
for every associated element pair, that both elements sit in the same
horizontal and vertical page quadrant and then discounts by their left/top
offset. The group score (GDA) checks that each associated pair sits in
equally sized alignment groups, where an element's group is everyone
intersecting one of its six axis lines. Both scores weight each reference
element by its uniqueness (the race weight) so repeated list items cannot
dominate a page.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .association import AssociationMap
from .errors import DomainError, EmptyReferenceError
from .snapshot import ElementSnapshot, PageSnapshot


class HSide(str, Enum):
    LEFT = "left"
    RIGHT = "right"
    SPAN = "span"


class VSide(str, Enum):
    TOP = "top"
    BOTTOM = "bottom"
    SPAN = "span"


@dataclass(frozen=True)
class QuadrantBias:
    """Which side of the page center lines an element occupies."""

    h_side: HSide
    v_side: VSide

    @property
    def h_spans(self) -> bool:
        return self.h_side is HSide.SPAN

    @property
    def v_spans(self) -> bool:
        return self.v_side is VSide.SPAN


@dataclass(frozen=True)
class Axis:
    """An infinite alignment line: vertical at x=value or horizontal at y=value."""

    vertical: bool
    value: float


@dataclass(frozen=True)
class AxisSet:
    """The six alignment lines of one element's box."""

    left: float
    right: float
    h_center: float
    top: float
    bottom: float
    v_center: float

    @classmethod
    def of(cls, element: ElementSnapshot) -> AxisSet:
        box = element.box
        return cls(box.left, box.right, box.h_center, box.top, box.bottom, box.v_center)

    def lines(self) -> tuple[Axis, ...]:
        return (
            Axis(True, self.left),
            Axis(True, self.right),
            Axis(True, self.h_center),
            Axis(False, self.top),
            Axis(False, self.bottom),
            Axis(False, self.v_center),
        )


@dataclass(frozen=True)
class GroupStats:
    """Axis groups, race groups, group count, and race weights for one page.

    ``groups[i]`` is the set of element indices intersecting any of element
    i's six axis lines (always including i). ``race_groups[i]`` restricts
    that to elements sharing i's tag and class set. ``group_count`` counts
    race-group representatives in document order; ``race_weights[i]`` is
    1 / (len(race_groups[i]) * group_count).
    """

    groups: tuple[frozenset[int], ...]
    race_groups: tuple[frozenset[int], ...]
    group_count: int
    race_weights: tuple[float, ...]

    @property
    def total_weight(self) -> float:
        """Sum of race weights in document order; normalizer for page scores."""
        return sum(self.race_weights)


@dataclass(frozen=True)
class LayoutPair:
    reference_index: int
    pair_score: float
    group_match: bool


@dataclass(frozen=True)
class LayoutScores:
    rda: float
    gda: float
    per_pair: tuple[LayoutPair, ...]


def pos_sim(val1: float, val2: float, ref: float) -> float:
    """Positional similarity: 1 - |val1 - val2| / ref, floored at 0."""
    if ref <= 0:
        raise DomainError(f"pos_sim reference must be > 0, got {ref}")
    ratio = abs(val1 - val2) / ref
    return 0.0 if ratio > 1.0 else 1.0 - ratio


def quadrant(element: ElementSnapshot, page: PageSnapshot) -> QuadrantBias:
    """Assign an element to page quadrants relative to the center lines.

    Boundary-inclusive: a box whose edge lies exactly on a center line is
    counted as entirely on that side, so sub-pixel rendering noise cannot
    flip a flush element into "span".
    """
    center_x = page.page_width / 2
    center_y = page.page_height / 2
    box = element.box
    if box.right <= center_x:
        h_side = HSide.LEFT
    elif box.left >= center_x:
        h_side = HSide.RIGHT
    else:
        h_side = HSide.SPAN
    if box.bottom <= center_y:
        v_side = VSide.TOP
    elif box.top >= center_y:
        v_side = VSide.BOTTOM
    else:
        v_side = VSide.SPAN
    return QuadrantBias(h_side, v_side)


def axis_overlaps(element: ElementSnapshot, axis: Axis, tolerance: float = 0.0) -> bool:
    """True iff the axis line intersects the element's closed box."""
    box = element.box
    if axis.vertical:
        return box.left - tolerance <= axis.value <= box.right + tolerance
    return box.top - tolerance <= axis.value <= box.bottom + tolerance


def build_groups(page: PageSnapshot, tolerance: float = 0.0) -> GroupStats:
    """Compute axis groups, race groups, group count, and race weights.

    ``tolerance`` widens the closed-interval axis test by that many pixels
    on each side; the default 0 treats fractional-pixel output literally.
    """
    n = len(page.elements)
    if n == 0:
        return GroupStats((), (), 0, ())

    lefts = np.array([e.box.left for e in page.elements], dtype=np.float64)
    tops = np.array([e.box.top for e in page.elements], dtype=np.float64)
    widths = np.array([e.box.width for e in page.elements], dtype=np.float64)
    heights = np.array([e.box.height for e in page.elements], dtype=np.float64)
    rights = lefts + widths
    bottoms = tops + heights
    h_centers = lefts + widths / 2
    v_centers = tops + heights / 2

    groups: list[frozenset[int]] = []
    for i in range(n):
        mask = np.zeros(n, dtype=bool)
        for x in (lefts[i], rights[i], h_centers[i]):
            mask |= (lefts - tolerance <= x) & (x <= rights + tolerance)
        for y in (tops[i], bottoms[i], v_centers[i]):
            mask |= (tops - tolerance <= y) & (y <= bottoms + tolerance)
        groups.append(frozenset(int(j) for j in np.nonzero(mask)[0]))

    keys = [e.race_key for e in page.elements]
    race_groups = [
        frozenset(j for j in group if keys[j] == keys[i])
        for i, group in enumerate(groups)
    ]

    visited: set[int] = set()
    count = 0
    for i in range(n):
        if i not in visited:
            count += 1
            visited.add(i)
            visited.update(race_groups[i])

    weights = tuple(1.0 / (len(race_groups[i]) * count) for i in range(n))
    return GroupStats(tuple(groups), tuple(race_groups), count, weights)


def rda_pair(
    s: ElementSnapshot,
    t: ElementSnapshot,
    weight: float,
    candidate_page: PageSnapshot,
    reference_page: PageSnapshot,
) -> float:
    """Relative-layout score for one associated pair, in [0, 100 * weight].

    Zero on any quadrant disagreement; otherwise the weighted score is
    discounted by left/top offsets measured against half the reference
    page's width and height.
    """
    score = 100.0 * weight
    bias_s = quadrant(s, candidate_page)
    bias_t = quadrant(t, reference_page)
    if bias_s.h_side is not bias_t.h_side or bias_s.v_side is not bias_t.v_side:
        score = 0.0
    score *= pos_sim(s.box.left, t.box.left, reference_page.page_width / 2)
    score *= pos_sim(s.box.top, t.box.top, reference_page.page_height / 2)
    return score


def _check_reference_weight(groups_ref: GroupStats) -> float:
    total = groups_ref.total_weight
    if total <= 0:
        raise EmptyReferenceError("reference page has no weighted elements")
    return total


def rda_page(
    assoc: AssociationMap,
    groups_ref: GroupStats,
    candidate: PageSnapshot,
    reference: PageSnapshot,
) -> float:
    """Page-level relative-layout score in [0, 100].

    Race-weight-normalized sum of pair scores; unmatched reference elements
    contribute zero.
    """
    total = _check_reference_weight(groups_ref)
    acc = 0.0
    for pair in assoc.pairs:
        s = candidate.elements[pair.candidate_index]
        t = reference.elements[pair.reference_index]
        acc += rda_pair(s, t, groups_ref.race_weights[pair.reference_index], candidate, reference)
    return acc / total


def gda_page(
    assoc: AssociationMap, groups_cand: GroupStats, groups_ref: GroupStats
) -> float:
    """Page-level group score in [0, 100].

    Each associated pair contributes its reference race weight when its two
    axis groups have exactly equal size, else zero.
    """
    total = _check_reference_weight(groups_ref)
    acc = 0.0
    for pair in assoc.pairs:
        if len(groups_cand.groups[pair.candidate_index]) == len(
            groups_ref.groups[pair.reference_index]
        ):
            acc += groups_ref.race_weights[pair.reference_index]
    return 100.0 * acc / total


def layout_scores(
    assoc: AssociationMap,
    groups_cand: GroupStats,
    groups_ref: GroupStats,
    candidate: PageSnapshot,
    reference: PageSnapshot,
) -> LayoutScores:
    """Both layout scores plus the per-pair breakdown, in one pass."""
    total = _check_reference_weight(groups_ref)
    rda_acc = 0.0
    gda_acc = 0.0
    rows: list[LayoutPair] = []
    for pair in assoc.pairs:
        s = candidate.elements[pair.candidate_index]
        t = reference.elements[pair.reference_index]
        weight = groups_ref.race_weights[pair.reference_index]
        pair_score = rda_pair(s, t, weight, candidate, reference)
        group_match = len(groups_cand.groups[pair.candidate_index]) == len(
            groups_ref.groups[pair.reference_index]
        )
        rda_acc += pair_score
        if group_match:
            gda_acc += weight
        rows.append(LayoutPair(pair.reference_index, pair_score, group_match))
    return LayoutScores(
        rda=rda_acc / total, gda=100.0 * gda_acc / total, per_pair=tuple(rows)
    )
