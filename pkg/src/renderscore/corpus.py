"""Corpus-level tooling: group-count binning, statistics, cleaning filters.

A corpus is a directory of snapshot JSON files. Files are always visited in
sorted-name order so every report is reproducible; unparseable files are
skipped (stats) or recorded (filter) without aborting the run.
"""

from __future__ import annotations

import json
import shutil
from bisect import bisect_right
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable

import numpy as np

from .errors import RenderScoreError
from .layout import build_groups
from .snapshot import PageSnapshot, PageStats, page_stats, parse_snapshot, style_quality_score

# Filter runs drop their manifest next to the kept snapshots; corpus scans
# must not treat it as a page.
MANIFEST_NAME = "_manifest.json"

MAX_PAGE_HEIGHT = 5000.0
STYLE_SCORE_LIMIT = 0.9


@dataclass(frozen=True)
class BinSpec:
    """Ascending group-count bin edges; the last bin is open-ended."""

    edges: tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.edges or self.edges[0] != 0:
            raise ValueError("bin edges must start at 0")
        if any(a >= b for a, b in zip(self.edges, self.edges[1:])):
            raise ValueError("bin edges must be strictly ascending")

    @classmethod
    def fine(cls) -> BinSpec:
        return cls((0, 50, 100, 150, 200, 400))

    @classmethod
    def coarse(cls) -> BinSpec:
        return cls((0, 200, 400))

    @classmethod
    def from_text(cls, text: str) -> BinSpec:
        return cls(tuple(float(edge.strip()) for edge in text.split(",") if edge.strip()))

    def labels(self) -> list[str]:
        out = [f"{e:g}-{n:g}" for e, n in zip(self.edges, self.edges[1:])]
        out.append(f"{self.edges[-1]:g}+")
        return out

    def bin_index(self, value: float) -> int:
        return max(0, bisect_right(self.edges, value) - 1)


def corpus_files(corpus_dir: Path) -> list[Path]:
    return sorted(p for p in corpus_dir.glob("*.json") if p.name != MANIFEST_NAME)


def _load_stats(path: Path) -> PageStats | None:
    try:
        page = parse_snapshot(path.read_bytes())
    except (RenderScoreError, OSError):
        return None
    return page_stats(page, build_groups(page))


def _moments(values: Iterable[int]) -> dict[str, float]:
    arr = np.asarray(list(values), dtype=np.float64)
    if arr.size == 0:
        return {"mean": 0.0, "std": 0.0}
    return {"mean": float(arr.mean()), "std": float(arr.std())}


def corpus_stats(corpus_dir: Path, bins: BinSpec, workers: int = 1) -> dict[str, Any]:
    """Per-bin page counts and mean/std of tag count, DOM depth, group count."""
    files = corpus_files(corpus_dir)
    if workers > 1 and len(files) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            loaded = list(pool.map(_load_stats, files))
    else:
        loaded = [_load_stats(path) for path in files]

    stats = [s for s in loaded if s is not None]
    counts = [0] * len(bins.labels())
    for s in stats:
        counts[bins.bin_index(s.group_count)] += 1
    return {
        "pages": len(stats),
        "skipped": len(loaded) - len(stats),
        "bins": [
            {"bin": label, "count": count} for label, count in zip(bins.labels(), counts)
        ],
        "tag_count": _moments(s.tag_count for s in stats),
        "dom_depth": _moments(s.dom_depth for s in stats),
        "group_count": _moments(s.group_count for s in stats),
    }


def _keep_or_reason(
    page: PageSnapshot, max_height: float, style_threshold: float
) -> str | None:
    # strict thresholds: exactly at the cap still passes
    if page.page_height > max_height:
        return "height"
    if style_quality_score(page) > style_threshold:
        return "style"
    return None


def filter_corpus(
    corpus_dir: Path,
    out_dir: Path,
    max_height: float = MAX_PAGE_HEIGHT,
    style_threshold: float = STYLE_SCORE_LIMIT,
    workers: int = 1,
) -> dict[str, Any]:
    """Copy snapshots passing the cleaning filters; record every drop with a reason.

    Pages taller than ``max_height`` px or with a style-quality score above
    ``style_threshold`` are dropped. Unreadable or invalid files are listed
    under ``errors`` and never copied. The manifest is written to
    ``out_dir/_manifest.json`` and also returned.
    """
    out_dir.mkdir(parents=True, exist_ok=True)

    def examine(path: Path) -> tuple[str, str | None, str | None]:
        try:
            page = parse_snapshot(path.read_bytes())
        except (RenderScoreError, OSError) as exc:
            return path.name, None, str(exc)
        return path.name, _keep_or_reason(page, max_height, style_threshold), None

    files = corpus_files(corpus_dir)
    if workers > 1 and len(files) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            examined = list(pool.map(examine, files))
    else:
        examined = [examine(path) for path in files]

    kept: list[str] = []
    dropped: list[dict[str, str]] = []
    errors: list[dict[str, str]] = []
    for name, reason, error in examined:
        if error is not None:
            errors.append({"file": name, "message": error})
        elif reason is not None:
            dropped.append({"file": name, "reason": reason})
        else:
            shutil.copy2(corpus_dir / name, out_dir / name)
            kept.append(name)

    manifest = {"kept": kept, "dropped": dropped, "errors": errors}
    (out_dir / MANIFEST_NAME).write_text(json.dumps(manifest, indent=2), encoding="utf-8")
    return manifest
