"""Shared fixtures: element/page builders, identity gallery, random pages."""

from __future__ import annotations

import random

import pytest

from renderscore import (
    ElementSnapshot,
    PageSnapshot,
    Position,
    Rect,
    StyleAttrs,
    normalize_text,
)

TAG_POOL = ("div", "span", "li", "p", "a", "button", "h1", "img")
CLASS_POOL = ((), ("item",), ("card",), ("nav-link",), ("item", "active"))
WORD_POOL = (
    "", "", "Home", "Products", "About Us", "Contact", "Read more",
    "Subscribe now", "Welcome to the demo page", "Pricing",
)


def make_styles(
    color=(0, 0, 0),
    bg=(255, 255, 255, 1.0),
    font_size=16.0,
    border_radius=0.0,
    position="static",
    font_empty=False,
) -> StyleAttrs:
    return StyleAttrs(
        color=tuple(color),
        background_color=tuple(bg),
        font_size=font_size,
        border_radius=border_radius,
        position=Position(position),
        font_empty=font_empty,
    )


def make_element(
    index: int,
    left: float,
    top: float,
    width: float,
    height: float,
    *,
    tag: str = "div",
    classes: tuple[str, ...] = (),
    text: str = "",
    parent: int | None = None,
    styles: StyleAttrs | None = None,
) -> ElementSnapshot:
    return ElementSnapshot(
        index=index,
        parent=parent,
        tag=tag,
        classes=classes,
        text=normalize_text(text),
        box=Rect(left, top, width, height),
        styles=styles or make_styles(),
        visible=True,
    )


def make_page(
    elements,
    width: float = 1920.0,
    height: float = 1080.0,
    url: str | None = None,
) -> PageSnapshot:
    return PageSnapshot(width, height, tuple(elements), url)


def random_page(rng: random.Random, max_elements: int = 50) -> PageSnapshot:
    """Random page with integral coordinates (exact float arithmetic)."""
    n = rng.randint(1, max_elements)
    elements = []
    for i in range(n):
        parent = rng.randrange(i) if i > 0 and rng.random() < 0.5 else None
        elements.append(
            make_element(
                i,
                left=float(rng.randrange(0, 1800)),
                top=float(rng.randrange(0, 4000)),
                width=float(rng.randrange(1, 400) * 2),
                height=float(rng.randrange(1, 200) * 2),
                tag=rng.choice(TAG_POOL),
                classes=rng.choice(CLASS_POOL),
                text=rng.choice(WORD_POOL),
                parent=parent,
                styles=make_styles(
                    color=(rng.randrange(256), rng.randrange(256), rng.randrange(256)),
                    font_size=float(rng.randrange(8, 40)),
                    border_radius=float(rng.randrange(0, 20)),
                    position=rng.choice(list(Position)).value,
                    font_empty=rng.random() < 0.1,
                ),
            )
        )
    return make_page(elements, height=4200.0)


def _page_single():
    return make_page([make_element(0, 100, 100, 200, 50, text="Hello world")])


def _page_flat_row():
    # three aligned list items under a heading: classic nav strip
    elements = [make_element(0, 10, 10, 300, 40, tag="h1", text="Site title")]
    for i in range(3):
        elements.append(
            make_element(
                i + 1, 300 + i * 150, 100, 100, 30, tag="li", classes=("item",),
                text=f"Entry {i}",
            )
        )
    return make_page(elements)


def _page_nested_tree():
    card = make_styles(bg=(240, 240, 240, 1.0))
    return make_page([
        make_element(0, 50, 50, 800, 600, tag="div", classes=("card",), styles=card),
        make_element(1, 80, 80, 740, 100, tag="h1", text="Nested layout", parent=0),
        make_element(2, 80, 200, 740, 400, tag="div", parent=0),
        make_element(3, 100, 220, 300, 80, tag="p", text="left column", parent=2),
        make_element(4, 420, 220, 300, 80, tag="p", text="right column", parent=2),
    ])


def _page_spanning():
    # hero banner crossing both center lines plus side boxes
    return make_page([
        make_element(0, 200, 400, 1500, 400, tag="div", classes=("card",), text="Hero banner"),
        make_element(1, 10, 10, 120, 60, tag="img"),
        make_element(2, 1700, 900, 150, 100, tag="button", text="Buy"),
    ])


def _page_textless_grid():
    elements = []
    for row in range(3):
        for col in range(4):
            elements.append(
                make_element(
                    len(elements), 100 + col * 220, 100 + row * 180, 200, 160,
                    tag="img", classes=("card",),
                )
            )
    return make_page(elements)


def _page_deep_chain():
    elements = []
    for i in range(12):
        elements.append(
            make_element(
                i, 10 + i * 5, 10 + i * 5, 600 - i * 10, 500 - i * 8,
                parent=i - 1 if i else None,
            )
        )
    return make_page(elements)


def _page_repeated_text():
    elements = []
    for i in range(4):
        elements.append(
            make_element(i, 100, 50 + i * 120, 400, 100, tag="a",
                         classes=("nav-link",), text="Read more")
        )
    return make_page(elements)


def _page_fractional():
    return make_page([
        make_element(0, 12.5, 33.25, 301.75, 48.625, tag="h1", text="Fractional pixels"),
        make_element(1, 12.5, 99.875, 140.4, 40.2, tag="button", text="Go"),
    ], width=1366.0, height=768.0)


def _page_fifty():
    # exactly 50 elements: section container, heading, and a 6x8 card grid
    elements = [
        make_element(0, 20, 20, 1880, 3800, tag="div", classes=("grid",)),
        make_element(1, 40, 40, 600, 60, tag="h1", text="Catalog", parent=0),
    ]
    for row in range(8):
        for col in range(6):
            elements.append(
                make_element(
                    len(elements), 40 + col * 310, 140 + row * 460, 280, 420,
                    tag="div", classes=("card",), parent=0,
                )
            )
    assert len(elements) == 50
    return make_page(elements, height=4200.0)


def _page_mixed_styles():
    return make_page([
        make_element(0, 0, 0, 1920, 90, tag="div",
                     styles=make_styles(bg=(20, 20, 40, 1.0))),
        make_element(1, 40, 20, 200, 50, tag="h1", text="ACME",
                     styles=make_styles(color=(255, 255, 255), font_size=32.0), parent=0),
        make_element(2, 1600, 25, 200, 40, tag="button", text="Sign in",
                     styles=make_styles(bg=(0, 120, 255, 1.0), border_radius=8.0), parent=0),
        make_element(3, 100, 200, 800, 400, tag="p",
                     text="  Lots   of \n whitespace   here  "),
        make_element(4, 1000, 700, 600, 300, tag="img"),
    ])


IDENTITY_GALLERY = [
    _page_single,
    _page_flat_row,
    _page_nested_tree,
    _page_spanning,
    _page_textless_grid,
    _page_deep_chain,
    _page_repeated_text,
    _page_fractional,
    _page_fifty,
    _page_mixed_styles,
    lambda: random_page(random.Random(21), max_elements=30),
    lambda: random_page(random.Random(99), max_elements=50),
]


@pytest.fixture
def flat_row_page():
    return _page_flat_row()


@pytest.fixture
def identity_pages():
    return [build() for build in IDENTITY_GALLERY]
