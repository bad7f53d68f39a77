"""Command-line front door: score page pairs, corpus stats, cleaning, serving.

Every flag can also be supplied through an environment variable with the
``RENDERSCORE_`` prefix (flags win). JSON is the default output format;
``--format table`` opts into a human-readable rendering.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from pathlib import Path

import click

from .corpus import MAX_PAGE_HEIGHT, STYLE_SCORE_LIMIT, BinSpec, corpus_stats, filter_corpus
from .errors import RenderScoreError
from .scoring import RewardWeights, ScoreReport, score_pair
from .snapshot import parse_snapshot

EXIT_IO = 1
EXIT_INVALID = 2


@dataclass(frozen=True)
class CliSettings:
    fmt: str
    workers: int
    alpha: float
    beta: float
    gamma: float
    tolerance: float

    def weights(self) -> RewardWeights:
        return RewardWeights(self.alpha, self.beta, self.gamma)


@click.group(context_settings={"auto_envvar_prefix": "RENDERSCORE"})
@click.option("--format", "fmt", type=click.Choice(["json", "table"]), default="json",
              show_default=True, envvar="RENDERSCORE_FORMAT", help="Output format.")
@click.option("--workers", type=int, default=8, show_default=True,
              help="Worker threads for corpus commands and the service batch pool.")
@click.option("--alpha", type=float, default=0.6, show_default=True,
              help="Weight of the relative-layout score.")
@click.option("--beta", type=float, default=0.2, show_default=True,
              help="Weight of the group score.")
@click.option("--gamma", type=float, default=0.2, show_default=True,
              help="Weight of the style score.")
@click.option("--tolerance", type=float, default=0.0, show_default=True,
              help="Axis alignment tolerance in pixels for group construction.")
@click.pass_context
def main(ctx: click.Context, fmt: str, workers: int, alpha: float, beta: float,
         gamma: float, tolerance: float) -> None:
    """Score rendered-page snapshots for layout and style consistency."""
    ctx.obj = CliSettings(fmt, workers, alpha, beta, gamma, tolerance)


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _read_snapshot(path: Path, label: str):
    try:
        data = path.read_bytes()
    except OSError as exc:
        _fail(str(exc), EXIT_IO)
    try:
        return parse_snapshot(data, path=label)
    except RenderScoreError as exc:
        _fail(str(exc), EXIT_INVALID)


def _score_table(report: ScoreReport) -> str:
    lines = [
        f"{'RDA':<8} {report.rda:10.4f}",
        f"{'GDA':<8} {report.gda:10.4f}",
        f"{'SDA':<8} {report.sda:10.4f}",
        f"{'reward':<8} {report.reward:10.6f}",
        f"{'matched':<8} {report.matched}/{report.reference_elements} reference elements",
    ]
    return "\n".join(lines)


@main.command()
@click.argument("candidate", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument("reference", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--detail", is_flag=True, help="Include the per-pair breakdown.")
@click.pass_obj
def score(settings: CliSettings, candidate: Path, reference: Path, detail: bool) -> None:
    """Score CANDIDATE against REFERENCE (both snapshot JSON files)."""
    cand = _read_snapshot(candidate, "candidate")
    ref = _read_snapshot(reference, "reference")
    try:
        report = score_pair(cand, ref, settings.weights(), detail=detail,
                            tolerance=settings.tolerance)
    except RenderScoreError as exc:
        _fail(str(exc), EXIT_INVALID)
    if settings.fmt == "table":
        click.echo(_score_table(report))
    else:
        click.echo(json.dumps(report.to_dict(), indent=2))


@main.command()
@click.argument("corpus_dir", type=click.Path(exists=True, file_okay=False, path_type=Path))
@click.option("--bins", type=click.Choice(["fine", "coarse"]), default="fine",
              show_default=True, help="Group-count bin preset.")
@click.option("--edges", type=str, default=None,
              help="Custom comma-separated bin edges (overrides --bins).")
@click.pass_obj
def stats(settings: CliSettings, corpus_dir: Path, bins: str, edges: str | None) -> None:
    """Summarize a snapshot corpus: bin counts and structural averages."""
    try:
        spec = BinSpec.from_text(edges) if edges else (
            BinSpec.fine() if bins == "fine" else BinSpec.coarse()
        )
    except ValueError as exc:
        _fail(str(exc), EXIT_INVALID)
    summary = corpus_stats(corpus_dir, spec, workers=settings.workers)
    if summary["skipped"]:
        click.echo(f"warning: skipped {summary['skipped']} unparseable file(s)", err=True)
    if settings.fmt == "table":
        rows = [f"{'pages':<12} {summary['pages']}"]
        for entry in summary["bins"]:
            rows.append(f"  {entry['bin']:<10} {entry['count']}")
        for key in ("tag_count", "dom_depth", "group_count"):
            m = summary[key]
            rows.append(f"{key:<12} {m['mean']:.2f} ± {m['std']:.2f}")
        click.echo("\n".join(rows))
    else:
        click.echo(json.dumps(summary, indent=2))


@main.command("filter")
@click.argument("corpus_dir", type=click.Path(exists=True, file_okay=False, path_type=Path))
@click.argument("out_dir", type=click.Path(file_okay=False, path_type=Path))
@click.option("--max-height", type=float, default=MAX_PAGE_HEIGHT, show_default=True,
              help="Drop pages taller than this many pixels.")
@click.option("--style-threshold", type=float, default=STYLE_SCORE_LIMIT, show_default=True,
              help="Drop pages with a style-quality score above this value.")
@click.pass_obj
def filter_cmd(settings: CliSettings, corpus_dir: Path, out_dir: Path,
               max_height: float, style_threshold: float) -> None:
    """Copy snapshots passing the cleaning filters into OUT_DIR."""
    manifest = filter_corpus(corpus_dir, out_dir, max_height, style_threshold,
                             workers=settings.workers)
    if settings.fmt == "table":
        click.echo(f"kept    {len(manifest['kept'])}")
        click.echo(f"dropped {len(manifest['dropped'])}")
        for entry in manifest["dropped"]:
            click.echo(f"  {entry['file']:<30} {entry['reason']}")
        if manifest["errors"]:
            click.echo(f"errors  {len(manifest['errors'])}")
    else:
        click.echo(json.dumps(manifest, indent=2))


@main.command()
@click.option("--host", type=str, default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--bridge", type=str, default=None,
              help="Renderer bridge command for /v1/render-score.")
@click.option("--bridge-timeout", type=float, default=60.0, show_default=True)
@click.pass_obj
def serve(settings: CliSettings, host: str, port: int, bridge: str | None,
          bridge_timeout: float) -> None:
    """Run the scoring service."""
    import uvicorn

    from .service import ServiceConfig, create_app

    try:
        config = ServiceConfig(
            workers=settings.workers,
            weights=settings.weights(),
            bridge_command=bridge,
            bridge_timeout=bridge_timeout,
            tolerance=settings.tolerance,
        )
    except RenderScoreError as exc:
        _fail(str(exc), EXIT_INVALID)
    uvicorn.run(create_app(config), host=host, port=port)


if __name__ == "__main__":
    main()
