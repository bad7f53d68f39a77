"""External renderer bridge: turns raw HTML into a snapshot via a user command.

The engine itself never touches a browser. When HTML needs scoring, a
configured command (typically the bundled extractor CLI) is invoked with
the path of a temp file holding the HTML and must print snapshot JSON on
stdout. Commands may embed ``{path}`` to control argument placement;
otherwise the path is appended.
"""

from __future__ import annotations

import shlex
import subprocess
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .errors import BridgeError
from .snapshot import PageSnapshot, parse_snapshot


@dataclass(frozen=True)
class RendererBridge:
    command: str
    timeout: float = 60.0

    def _argv(self, html_path: str) -> list[str]:
        argv = shlex.split(self.command)
        if not argv:
            raise BridgeError("bridge command is empty")
        if any("{path}" in arg for arg in argv):
            return [arg.replace("{path}", html_path) for arg in argv]
        return [*argv, html_path]

    def render(self, html: str) -> PageSnapshot:
        """Render HTML through the bridge command and parse its snapshot output."""
        with tempfile.TemporaryDirectory(prefix="renderscore-") as workdir:
            html_path = Path(workdir) / "candidate.html"
            html_path.write_text(html, encoding="utf-8")
            try:
                proc = subprocess.run(
                    self._argv(str(html_path)),
                    capture_output=True,
                    timeout=self.timeout,
                )
            except subprocess.TimeoutExpired as exc:
                raise BridgeError(f"bridge command timed out after {self.timeout}s") from exc
            except OSError as exc:
                raise BridgeError(f"bridge command failed to start: {exc}") from exc
        if proc.returncode != 0:
            stderr = proc.stderr.decode("utf-8", "replace").strip()
            raise BridgeError(
                f"bridge command exited with {proc.returncode}: {stderr[:500]}"
            )
        return parse_snapshot(proc.stdout, path="candidate")
