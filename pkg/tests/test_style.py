"""Style metrics: attribute similarities and the page-level style score."""

from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from renderscore import (
    associate,
    bg_color_sim,
    build_groups,
    color_sim,
    element_style_sim,
    scalar_sim,
    sda_page,
    style_scores,
)

from conftest import make_element, make_page, make_styles, random_page

channels = st.integers(0, 255)
rgb = st.tuples(channels, channels, channels)


class TestColorSim:
    def test_identity(self):
        assert color_sim((0, 0, 0), (0, 0, 0)) == 1.0

    def test_black_vs_white_is_zero(self):
        assert color_sim((0, 0, 0), (255, 255, 255)) == pytest.approx(0.0)

    def test_red_vs_black(self):
        assert color_sim((255, 0, 0), (0, 0, 0)) == pytest.approx(1 - 1 / math.sqrt(3))

    @given(rgb, rgb)
    @settings(max_examples=100)
    def test_bounded_and_symmetric(self, a, b):
        value = color_sim(a, b)
        assert 0.0 <= value <= 1.0
        assert value == color_sim(b, a)


class TestBgColorSim:
    def test_identity(self):
        assert bg_color_sim((10, 20, 30, 0.5), (10, 20, 30, 0.5)) == 1.0

    def test_alpha_participates(self):
        opaque = (255, 255, 255, 1.0)
        transparent = (255, 255, 255, 0.0)
        assert bg_color_sim(opaque, transparent) == pytest.approx(0.5)

    @given(rgb, rgb, st.floats(0, 1), st.floats(0, 1))
    @settings(max_examples=100)
    def test_bounded_and_symmetric(self, a, b, alpha_a, alpha_b):
        pa = (*a, alpha_a)
        pb = (*b, alpha_b)
        value = bg_color_sim(pa, pb)
        assert 0.0 <= value <= 1.0
        assert value == bg_color_sim(pb, pa)


class TestScalarSim:
    def test_identity(self):
        assert scalar_sim(16, 16) == 1.0

    def test_relative_difference(self):
        assert scalar_sim(16, 12) == pytest.approx(0.75)

    def test_both_zero(self):
        assert scalar_sim(0, 0) == 1.0

    def test_zero_vs_positive(self):
        assert scalar_sim(0, 8) == 0.0

    @given(st.floats(0, 1000), st.floats(0, 1000))
    @settings(max_examples=100)
    def test_bounded_and_symmetric(self, a, b):
        value = scalar_sim(a, b)
        assert 0.0 <= value <= 1.0
        assert value == scalar_sim(b, a)


class TestSdaPage:
    def test_identity_is_exactly_100(self, identity_pages):
        for page in identity_pages:
            assoc = associate(page, page)
            assert sda_page(assoc, build_groups(page), page, page) == pytest.approx(
                100.0, abs=1e-9
            )

    def test_font_only_deviation(self):
        ref = make_page([make_element(0, 100, 100, 200, 50, text="Title",
                                      styles=make_styles(font_size=16.0))])
        cand = make_page([make_element(0, 100, 100, 200, 50, text="Title",
                                       styles=make_styles(font_size=12.0))])
        assoc = associate(cand, ref)
        score = sda_page(assoc, build_groups(ref), cand, ref)
        assert score == pytest.approx((1 + 1 + 0.75 + 1) / 4 * 100)

    def test_no_pairs_scores_zero(self, flat_row_page):
        assoc = associate(make_page([]), flat_row_page)
        assert sda_page(assoc, build_groups(flat_row_page), make_page([]), flat_row_page) == 0.0

    def test_breakdown_rows_follow_pairs(self):
        rng = random.Random(3)
        cand = random_page(rng, max_elements=15)
        ref = random_page(rng, max_elements=15)
        assoc = associate(cand, ref)
        result = style_scores(assoc, build_groups(ref), cand, ref)
        assert len(result.per_pair) == len(assoc.pairs)
        for row in result.per_pair:
            for value in (row.color_sim, row.bg_sim, row.font_sim, row.radius_sim,
                          row.element_sim):
                assert 0.0 <= value <= 1.0
            mean = (row.color_sim + row.bg_sim + row.font_sim + row.radius_sim) / 4
            assert row.element_sim == pytest.approx(mean)

    def test_growing_font_gap_never_increases_score(self):
        ref = make_page([make_element(0, 100, 100, 200, 50,
                                      styles=make_styles(font_size=16.0))])
        stats = build_groups(ref)
        previous = 101.0
        for font in (16.0, 14.0, 12.0, 8.0, 4.0, 1.0):
            cand = make_page([make_element(0, 100, 100, 200, 50,
                                           styles=make_styles(font_size=font))])
            assoc = associate(cand, ref)
            score = sda_page(assoc, stats, cand, ref)
            assert score <= previous + 1e-12
            previous = score

    def test_attribute_subset_configuration(self):
        a = make_styles(font_size=16.0)
        b = make_styles(font_size=12.0)
        assert element_style_sim(a, b, ("color", "background_color")) == 1.0
        assert element_style_sim(a, b, ("font_size",)) == pytest.approx(0.75)
