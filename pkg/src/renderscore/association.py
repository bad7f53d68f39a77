"""One-to-one pairing of candidate page elements to reference page elements.

Matching runs in two phases over the reference elements in document order:
text-bearing elements claim the geometrically closest candidate whose text
similarity clears the 0.80 threshold; every remaining element falls back to
pure geometric proximity, gated by a 10 px size tolerance. Class names are
deliberately ignored: compiled stylesheets make them meaningless across
independently authored pages.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import EmptyReferenceError
from .snapshot import ElementSnapshot, PageSnapshot

TEXT_MATCH_THRESHOLD = 0.80
SIZE_GAP_LIMIT = 10.0


class MatchMethod(str, Enum):
    TEXT = "text"
    GEOMETRY = "geometry"


@dataclass(frozen=True)
class AssociationPair:
    """A matched (candidate, reference) element pair with match provenance.

    ``text_sim`` is always the LCS similarity of the two texts, recorded for
    diagnostics even when the match was geometric. ``geo_dist`` is the L1
    position-and-size distance at match time.
    """

    candidate_index: int
    reference_index: int
    method: MatchMethod
    text_sim: float
    geo_dist: float


@dataclass(frozen=True)
class AssociationMap:
    """One-to-one element association; pairs sorted by reference index."""

    pairs: tuple[AssociationPair, ...]
    unmatched_reference: tuple[int, ...]
    unmatched_candidate: tuple[int, ...]


def lcs_length(a: str, b: str) -> int:
    """Length of the longest common subsequence, O(len(a)*len(b)) DP."""
    if not a or not b:
        return 0
    if len(b) < len(a):
        a, b = b, a
    previous = [0] * (len(a) + 1)
    for ch_b in b:
        current = [0]
        for i, ch_a in enumerate(a):
            if ch_a == ch_b:
                current.append(previous[i] + 1)
            else:
                current.append(max(previous[i + 1], current[i]))
        previous = current
    return previous[-1]


def lcs_similarity(a: str, b: str) -> float:
    """LCS length normalized by the longer string; 0 when both are empty."""
    longest = max(len(a), len(b))
    if longest == 0:
        return 0.0
    if a == b:
        return 1.0
    return lcs_length(a, b) / longest


def geo_distance(s: ElementSnapshot, t: ElementSnapshot) -> tuple[float, float]:
    """L1 position-and-size distance, plus the larger of the two size deviations."""
    d_width = abs(s.box.width - t.box.width)
    d_height = abs(s.box.height - t.box.height)
    position_size = (
        abs(s.box.left - t.box.left) + abs(s.box.top - t.box.top) + d_width + d_height
    )
    return position_size, max(d_width, d_height)


def _text_eligible(ref_text: str, cand_text: str) -> float | None:
    """Similarity if the pair can text-match, else None.

    The length ratio bounds the similarity from above, so wildly different
    lengths are rejected without running the DP.
    """
    shorter, longer = sorted((len(ref_text), len(cand_text)))
    if longer == 0 or shorter / longer < TEXT_MATCH_THRESHOLD:
        return None
    sim = lcs_similarity(ref_text, cand_text)
    return sim if sim >= TEXT_MATCH_THRESHOLD else None


def associate(candidate: PageSnapshot, reference: PageSnapshot) -> AssociationMap:
    """Build the one-to-one candidate-to-reference element association.

    Phase 1 (text): each reference element with nonempty text takes, among
    unmatched candidates with nonempty text and LCS similarity >= 0.80, the
    one at the smallest position-and-size distance (ties to the lower
    candidate index). Text matches are not size-gated.

    Phase 2 (geometry): each still-unmatched reference element considers
    unmatched candidates of the same tag (or all unmatched candidates when
    no tag matches exist) and takes the distance minimizer, unless either
    of its size deviations exceeds 10 px, in which case the element has no
    valid association.

    Raises EmptyReferenceError when the reference page has no elements.
    """
    if not reference.elements:
        raise EmptyReferenceError("reference page has no visible elements")

    matched_candidates: set[int] = set()
    pairs: list[AssociationPair] = []
    remaining: list[ElementSnapshot] = []

    for ref in reference.elements:
        if not ref.text:
            remaining.append(ref)
            continue
        best: tuple[float, int] | None = None
        best_sim = 0.0
        for cand in candidate.elements:
            if cand.index in matched_candidates or not cand.text:
                continue
            sim = _text_eligible(ref.text, cand.text)
            if sim is None:
                continue
            distance, _ = geo_distance(cand, ref)
            key = (distance, cand.index)
            if best is None or key < best:
                best = key
                best_sim = sim
        if best is None:
            remaining.append(ref)
            continue
        distance, cand_index = best
        matched_candidates.add(cand_index)
        pairs.append(
            AssociationPair(cand_index, ref.index, MatchMethod.TEXT, best_sim, distance)
        )

    for ref in remaining:
        pool = [
            cand
            for cand in candidate.elements
            if cand.index not in matched_candidates and cand.tag == ref.tag
        ]
        if not pool:
            pool = [
                cand for cand in candidate.elements if cand.index not in matched_candidates
            ]
        if not pool:
            continue
        best_cand = min(pool, key=lambda cand: (geo_distance(cand, ref)[0], cand.index))
        distance, size_gap = geo_distance(best_cand, ref)
        if size_gap > SIZE_GAP_LIMIT:
            continue
        matched_candidates.add(best_cand.index)
        pairs.append(
            AssociationPair(
                best_cand.index,
                ref.index,
                MatchMethod.GEOMETRY,
                lcs_similarity(best_cand.text, ref.text),
                distance,
            )
        )

    pairs.sort(key=lambda p: p.reference_index)
    matched_references = {p.reference_index for p in pairs}
    return AssociationMap(
        pairs=tuple(pairs),
        unmatched_reference=tuple(
            e.index for e in reference.elements if e.index not in matched_references
        ),
        unmatched_candidate=tuple(
            e.index for e in candidate.elements if e.index not in matched_candidates
        ),
    )
