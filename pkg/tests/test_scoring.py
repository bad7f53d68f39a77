"""Reward combination, advantage normalization, pair and batch scoring."""

from __future__ import annotations

import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from renderscore import (
    DEFAULT_WEIGHTS,
    EmptyReferenceError,
    GroupSizeError,
    RewardWeights,
    ScoreReport,
    SlotError,
    WeightError,
    advantages,
    combine_reward,
    score_batch,
    score_pair,
    snapshot_to_dict,
)

from conftest import make_element, make_page, make_styles, random_page


class TestRewardWeights:
    def test_defaults(self):
        assert (DEFAULT_WEIGHTS.alpha, DEFAULT_WEIGHTS.beta, DEFAULT_WEIGHTS.gamma) == (
            0.6, 0.2, 0.2,
        )

    def test_all_zero_rejected(self):
        with pytest.raises(WeightError):
            RewardWeights(0, 0, 0)

    def test_negative_rejected(self):
        with pytest.raises(WeightError):
            RewardWeights(-0.1, 0.6, 0.5)


class TestCombineReward:
    def test_constant_inputs(self):
        assert combine_reward(50, 50, 50) == pytest.approx(0.5)

    def test_default_weights_on_pure_layout(self):
        assert combine_reward(100, 0, 0) == pytest.approx(0.6)

    def test_saturation(self):
        assert combine_reward(100, 100, 100, RewardWeights(0.3, 0.5, 1.2)) == pytest.approx(1.0)

    def test_weights_auto_normalized(self):
        assert combine_reward(80, 20, 50, RewardWeights(2, 2, 2)) == pytest.approx(
            combine_reward(80, 20, 50, RewardWeights(1 / 3, 1 / 3, 1 / 3))
        )

    @given(st.floats(0, 100), st.floats(0, 100), st.floats(0, 100),
           st.floats(0, 100), st.floats(0, 100), st.floats(0, 100))
    @settings(max_examples=60)
    def test_monotone_in_each_input(self, r1, g1, s1, r2, g2, s2):
        lo = combine_reward(min(r1, r2), min(g1, g2), min(s1, s2))
        hi = combine_reward(max(r1, r2), max(g1, g2), max(s1, s2))
        assert lo <= hi + 1e-12
        assert 0.0 <= lo <= 1.0 and 0.0 <= hi <= 1.0


class TestAdvantages:
    def test_zero_variance_guarded(self):
        assert advantages([0.7, 0.7, 0.7]).values == (0.0, 0.0, 0.0)

    def test_hand_computed_small_group(self):
        values = advantages([1.0, 2.0, 3.0]).values
        expected = 1.0 / math.sqrt(2 / 3)
        assert values[0] == pytest.approx(-expected, abs=1e-4)
        assert values[1] == pytest.approx(0.0, abs=1e-12)
        assert values[2] == pytest.approx(expected, abs=1e-4)

    def test_single_element_group(self):
        assert advantages([0.2]).values == (0.0,)

    def test_normalization_invariant(self):
        rng = random.Random(55)
        for _ in range(200):
            n = rng.choice([1, 3, 8])
            group = [rng.random() for _ in range(n)]
            out = np.array(advantages(group).values)
            if np.std(np.array(group)) > 1e-8:
                assert abs(out.mean()) < 1e-9
                assert abs(out.std() - 1.0) < 1e-9
            else:
                assert not out.any()


def two_element_fixture():
    """One perfect match plus one unmatched reference element."""
    ref = make_page([
        make_element(0, 100, 100, 200, 50, tag="h1"),
        make_element(1, 500, 600, 300, 80, tag="img"),
    ])
    cand = make_page([
        make_element(0, 100, 100, 200, 50, tag="h1"),
        make_element(1, 500, 600, 320, 80, tag="img"),  # size gap 20 > 10
    ])
    return cand, ref


class TestScorePair:
    def test_identity(self, identity_pages):
        for page in identity_pages:
            report = score_pair(page, page)
            assert report.rda == pytest.approx(100.0, abs=1e-9)
            assert report.gda == pytest.approx(100.0, abs=1e-9)
            assert report.sda == pytest.approx(100.0, abs=1e-9)
            assert report.reward == pytest.approx(1.0, abs=1e-9)

    def test_empty_candidate_scores_zero(self, flat_row_page):
        report = score_pair(make_page([]), flat_row_page)
        assert (report.rda, report.gda, report.sda, report.reward) == (0, 0, 0, 0)
        assert report.matched == 0

    def test_empty_reference_raises(self):
        with pytest.raises(EmptyReferenceError):
            score_pair(make_page([make_element(0, 0, 0, 5, 5)]), make_page([]))

    def test_two_element_half_match(self):
        cand, ref = two_element_fixture()
        report = score_pair(cand, ref)
        assert report.rda == pytest.approx(50.0)
        assert report.gda == pytest.approx(50.0)
        assert report.sda == pytest.approx(50.0)
        assert report.reward == pytest.approx(0.5)
        assert report.matched == 1
        assert report.unmatched_reference == (1,)
        assert report.unmatched_candidate == (1,)

    def test_detail_pairs_present_only_on_request(self):
        cand, ref = two_element_fixture()
        assert score_pair(cand, ref).pairs is None
        detailed = score_pair(cand, ref, detail=True)
        assert detailed.pairs is not None and len(detailed.pairs) == 1
        row = detailed.pairs[0]
        assert row.reference_index == 0 and row.candidate_index == 0
        assert row.group_match is True
        assert row.style_sim == pytest.approx(1.0)

    def test_report_round_trips_to_dict(self):
        cand, ref = two_element_fixture()
        payload = score_pair(cand, ref, detail=True).to_dict()
        assert set(payload) == {
            "rda", "gda", "sda", "reward", "matched", "candidate_elements",
            "reference_elements", "unmatched_candidate", "unmatched_reference", "pairs",
        }


class TestScoreBatch:
    def _batch(self, n=6):
        rng = random.Random(100)
        return [
            (random_page(rng, max_elements=12), random_page(rng, max_elements=12))
            for _ in range(n)
        ]

    def test_reports_in_input_order(self):
        items = self._batch()
        sequential = [score_pair(c, r) for c, r in items]
        result = score_batch(items, workers=4)
        assert list(result.reports) == sequential

    def test_advantages_per_group(self):
        result = score_batch(self._batch(6), group_size=3)
        assert result.advantages is not None and len(result.advantages) == 2
        for group in result.advantages:
            arr = np.array(group)
            if arr.std() > 0:
                assert abs(arr.mean()) < 1e-9

    def test_group_size_must_divide(self):
        with pytest.raises(GroupSizeError):
            score_batch(self._batch(5), group_size=3)

    def test_no_group_size_no_advantages(self):
        assert score_batch(self._batch(2)).advantages is None

    def test_malformed_slot_is_isolated(self):
        items = self._batch(5)
        bad = {"page": {"width": 1920, "height": 1080}, "elements": "nope"}
        items.insert(2, (bad, snapshot_to_dict(items[0][1])))
        result = score_batch(items, group_size=3)
        assert isinstance(result.reports[2], SlotError)
        assert result.reports[2].kind == "schema"
        assert result.reports[2].reward == 0.0
        assert sum(isinstance(r, ScoreReport) for r in result.reports) == 5

    def test_raw_documents_accepted(self):
        cand, ref = self._batch(1)[0]
        typed = score_batch([(cand, ref)]).reports[0]
        raw = score_batch([(snapshot_to_dict(cand), snapshot_to_dict(ref))]).reports[0]
        assert typed == raw

    def test_empty_reference_is_slot_error(self):
        cand, ref = self._batch(1)[0]
        empty = {"page": {"width": 1920, "height": 1080}, "elements": []}
        result = score_batch([(snapshot_to_dict(cand), empty)])
        assert isinstance(result.reports[0], SlotError)
        assert result.reports[0].kind == "empty_reference"

    def test_worker_counts_bit_identical(self):
        items = self._batch(16)
        results = [
            score_batch(items, group_size=4, workers=w) for w in (1, 8, 16)
        ]
        assert results[0] == results[1] == results[2]

    def test_weight_sweep_stays_in_unit_interval(self):
        cand, ref = two_element_fixture()
        for alpha in (0.0, 0.3, 0.6, 1.0, 3.0):
            report = score_pair(cand, ref, RewardWeights(alpha, 0.2, 0.2))
            assert 0.0 <= report.reward <= 1.0


class TestMatcherHook:
    def test_custom_matcher_strategy(self):
        """The association step is swappable without touching the metrics."""
        from renderscore import AssociationMap, associate

        calls = []

        def tracing_matcher(candidate, reference) -> AssociationMap:
            calls.append((len(candidate.elements), len(reference.elements)))
            return associate(candidate, reference)

        cand, ref = two_element_fixture()
        report = score_pair(cand, ref, matcher=tracing_matcher)
        assert calls == [(2, 2)]
        assert report == score_pair(cand, ref)
