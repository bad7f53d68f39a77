"""Snapshot data model: parsing, validation, serialization, page statistics.

A snapshot is the set of visible elements of a fully rendered page, as
emitted by a browser-side extractor. This module is the only place the
snapshot JSON wire format is interpreted; everything downstream works on
the immutable typed model.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Any, Mapping

from .errors import SchemaError, ValidationError

if TYPE_CHECKING:
    from .layout import GroupStats

_WHITESPACE = re.compile(r"\s+")


def normalize_text(text: str) -> str:
    """Collapse whitespace runs to single spaces and trim the ends."""
    return _WHITESPACE.sub(" ", text).strip()


class Position(str, Enum):
    STATIC = "static"
    RELATIVE = "relative"
    ABSOLUTE = "absolute"
    FIXED = "fixed"
    STICKY = "sticky"


@dataclass(frozen=True)
class Rect:
    """Axis-aligned box in page coordinates (CSS pixels, origin top-left)."""

    left: float
    top: float
    width: float
    height: float

    @property
    def right(self) -> float:
        return self.left + self.width

    @property
    def bottom(self) -> float:
        return self.top + self.height

    @property
    def h_center(self) -> float:
        return self.left + self.width / 2

    @property
    def v_center(self) -> float:
        return self.top + self.height / 2


@dataclass(frozen=True)
class StyleAttrs:
    """Computed style attributes carried per element.

    ``color`` channels are 0-255 integers; ``background_color`` adds an
    alpha component in [0, 1]. ``font_empty`` flags an empty computed
    font-family string (input to the style-quality filter).
    """

    color: tuple[int, int, int]
    background_color: tuple[int, int, int, float]
    font_size: float
    border_radius: float
    position: Position
    font_empty: bool


@dataclass(frozen=True)
class ElementSnapshot:
    """One visible DOM element: identity, geometry, own text, and styles.

    ``text`` holds only the element's direct text nodes (not descendants),
    already whitespace-normalized. ``index`` equals the element's position
    in document order and is the stable identifier within a snapshot.
    """

    index: int
    parent: int | None
    tag: str
    classes: tuple[str, ...]
    text: str
    box: Rect
    styles: StyleAttrs
    visible: bool = True

    @property
    def race_key(self) -> tuple[str, frozenset[str]]:
        """Tag plus unordered class set; elements sharing it count as repeats."""
        return (self.tag, frozenset(self.classes))


@dataclass(frozen=True)
class PageSnapshot:
    """A rendered page: viewport geometry plus visible elements in document order."""

    page_width: float
    page_height: float
    elements: tuple[ElementSnapshot, ...]
    url: str | None = None


@dataclass(frozen=True)
class PageStats:
    tag_count: int
    dom_depth: int
    group_count: int


# --- schema helpers -------------------------------------------------------

def _join(path: str, key: str) -> str:
    return f"{path}.{key}" if path else key


def _get(obj: Mapping[str, Any], key: str, path: str) -> Any:
    if key not in obj:
        raise SchemaError(_join(path, key), "missing required field")
    return obj[key]


def _object(value: Any, path: str) -> Mapping[str, Any]:
    if not isinstance(value, Mapping):
        raise SchemaError(path, f"expected object, got {type(value).__name__}")
    return value


def _array(value: Any, path: str) -> list[Any]:
    if not isinstance(value, list):
        raise SchemaError(path, f"expected array, got {type(value).__name__}")
    return value


def _number(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(path, f"expected number, got {type(value).__name__}")
    if not math.isfinite(value):
        raise ValidationError(path, "must be finite")
    return float(value)


def _integer(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(path, f"expected integer, got {type(value).__name__}")
    return value


def _string(value: Any, path: str) -> str:
    if not isinstance(value, str):
        raise SchemaError(path, f"expected string, got {type(value).__name__}")
    return value


def _boolean(value: Any, path: str) -> bool:
    if not isinstance(value, bool):
        raise SchemaError(path, f"expected boolean, got {type(value).__name__}")
    return value


def _channel(value: Any, path: str) -> int:
    chan = _integer(value, path)
    if not 0 <= chan <= 255:
        raise ValidationError(path, f"channel {chan} out of range [0, 255]")
    return chan


def _parse_styles(obj: Mapping[str, Any], path: str) -> StyleAttrs:
    color_raw = _array(_get(obj, "color", path), _join(path, "color"))
    if len(color_raw) != 3:
        raise SchemaError(_join(path, "color"), "expected [r, g, b]")
    color = tuple(_channel(c, f"{path}.color[{i}]") for i, c in enumerate(color_raw))

    bg_raw = _array(_get(obj, "backgroundColor", path), _join(path, "backgroundColor"))
    if len(bg_raw) != 4:
        raise SchemaError(_join(path, "backgroundColor"), "expected [r, g, b, a]")
    bg_rgb = tuple(
        _channel(c, f"{path}.backgroundColor[{i}]") for i, c in enumerate(bg_raw[:3])
    )
    alpha = _number(bg_raw[3], f"{path}.backgroundColor[3]")
    if not 0.0 <= alpha <= 1.0:
        raise ValidationError(f"{path}.backgroundColor[3]", f"alpha {alpha} out of range [0, 1]")

    font_size = _number(_get(obj, "fontSize", path), _join(path, "fontSize"))
    if font_size < 0:
        raise ValidationError(_join(path, "fontSize"), "must be >= 0")
    border_radius = _number(_get(obj, "borderRadius", path), _join(path, "borderRadius"))
    if border_radius < 0:
        raise ValidationError(_join(path, "borderRadius"), "must be >= 0")

    position_raw = _string(_get(obj, "position", path), _join(path, "position"))
    try:
        position = Position(position_raw)
    except ValueError:
        raise ValidationError(_join(path, "position"), f"unknown position {position_raw!r}") from None

    font_empty = _boolean(_get(obj, "fontEmpty", path), _join(path, "fontEmpty"))
    return StyleAttrs(color, bg_rgb + (alpha,), font_size, border_radius, position, font_empty)


def _parse_element(value: Any, ordinal: int, path: str) -> ElementSnapshot:
    obj = _object(value, path)

    index = _integer(_get(obj, "index", path), _join(path, "index"))
    if index != ordinal:
        raise ValidationError(_join(path, "index"), f"expected {ordinal} (document order)")

    parent_raw = _get(obj, "parent", path)
    parent: int | None = None
    if parent_raw is not None:
        parent = _integer(parent_raw, _join(path, "parent"))
        if not 0 <= parent < index:
            raise ValidationError(
                _join(path, "parent"),
                f"parent {parent} must precede element {index} in document order",
            )

    tag = _string(_get(obj, "tag", path), _join(path, "tag")).lower()
    classes = tuple(
        _string(c, f"{path}.classes[{i}]")
        for i, c in enumerate(_array(_get(obj, "classes", path), _join(path, "classes")))
    )
    text = normalize_text(_string(_get(obj, "text", path), _join(path, "text")))

    box_obj = _object(_get(obj, "box", path), _join(path, "box"))
    box_path = _join(path, "box")
    box = Rect(
        left=_number(_get(box_obj, "left", box_path), _join(box_path, "left")),
        top=_number(_get(box_obj, "top", box_path), _join(box_path, "top")),
        width=_number(_get(box_obj, "width", box_path), _join(box_path, "width")),
        height=_number(_get(box_obj, "height", box_path), _join(box_path, "height")),
    )
    if box.width < 0:
        raise ValidationError(_join(box_path, "width"), f"must be >= 0, got {box.width}")
    if box.height < 0:
        raise ValidationError(_join(box_path, "height"), f"must be >= 0, got {box.height}")
    if box.width == 0 or box.height == 0:
        raise ValidationError(box_path, "zero-area element violates the visibility contract")

    styles = _parse_styles(
        _object(_get(obj, "styles", path), _join(path, "styles")), _join(path, "styles")
    )

    visible = _boolean(_get(obj, "visible", path), _join(path, "visible"))
    if not visible:
        raise ValidationError(_join(path, "visible"), "snapshot elements must be visible")

    return ElementSnapshot(index, parent, tag, classes, text, box, styles, visible)


def snapshot_from_dict(document: Any, path: str = "") -> PageSnapshot:
    """Validate an already-decoded snapshot document into a PageSnapshot."""
    obj = _object(document, path or "$")
    page = _object(_get(obj, "page", path), _join(path, "page"))
    page_path = _join(path, "page")

    width = _number(_get(page, "width", page_path), _join(page_path, "width"))
    height = _number(_get(page, "height", page_path), _join(page_path, "height"))
    if width <= 0:
        raise ValidationError(_join(page_path, "width"), f"must be > 0, got {width}")
    if height <= 0:
        raise ValidationError(_join(page_path, "height"), f"must be > 0, got {height}")

    url_raw = page.get("url")
    url = _string(url_raw, _join(page_path, "url")) if url_raw is not None else None

    elements_raw = _array(_get(obj, "elements", path), _join(path, "elements"))
    elements = tuple(
        _parse_element(e, i, f"{_join(path, 'elements')}[{i}]")
        for i, e in enumerate(elements_raw)
    )
    return PageSnapshot(width, height, elements, url)


def parse_snapshot(document: bytes | str, *, path: str = "") -> PageSnapshot:
    """Parse snapshot JSON (UTF-8 bytes or text) into a validated PageSnapshot."""
    try:
        decoded = json.loads(document)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise SchemaError(path, f"invalid JSON: {exc}") from exc
    return snapshot_from_dict(decoded, path)


def snapshot_to_dict(page: PageSnapshot) -> dict[str, Any]:
    """Serialize a PageSnapshot back into the snapshot JSON document shape."""
    page_obj: dict[str, Any] = {"width": page.page_width, "height": page.page_height}
    if page.url is not None:
        page_obj["url"] = page.url
    return {
        "page": page_obj,
        "elements": [
            {
                "index": e.index,
                "parent": e.parent,
                "tag": e.tag,
                "classes": list(e.classes),
                "text": e.text,
                "box": {
                    "left": e.box.left,
                    "top": e.box.top,
                    "width": e.box.width,
                    "height": e.box.height,
                },
                "styles": {
                    "color": list(e.styles.color),
                    "backgroundColor": list(e.styles.background_color),
                    "fontSize": e.styles.font_size,
                    "borderRadius": e.styles.border_radius,
                    "position": e.styles.position.value,
                    "fontEmpty": e.styles.font_empty,
                },
                "visible": e.visible,
            }
            for e in page.elements
        ],
    }


def snapshot_to_json(page: PageSnapshot, *, indent: int | None = None) -> str:
    return json.dumps(snapshot_to_dict(page), indent=indent)


# --- page statistics ------------------------------------------------------

def page_stats(page: PageSnapshot, groups: GroupStats) -> PageStats:
    """Per-page structural statistics: element count, DOM depth, group count.

    ``groups`` must have been built on this page.
    """
    if len(groups.race_weights) != len(page.elements):
        raise ValueError("group stats were built on a different page")
    depths: list[int] = []
    for element in page.elements:
        # parents precede children, so one forward pass suffices
        parent_depth = depths[element.parent] if element.parent is not None else 0
        depths.append(parent_depth + 1)
    return PageStats(
        tag_count=len(page.elements),
        dom_depth=max(depths, default=0),
        group_count=groups.group_count,
    )


def style_quality_score(page: PageSnapshot) -> float:
    """Fraction of left-edge-aligned elements that look style-deficient.

    Looks at elements with ``left == 0`` and reports the share that are
    statically positioned with an empty font family. Pages rendered without
    their stylesheets collapse into this pattern; a high score means the
    snapshot likely lost its styles. Returns 0 when no element sits at
    left 0 (no evidence of style loss).
    """
    at_left = [e for e in page.elements if e.box.left == 0]
    if not at_left:
        return 0.0
    deficient = sum(
        1 for e in at_left if e.styles.position is Position.STATIC and e.styles.font_empty
    )
    return deficient / len(at_left)
