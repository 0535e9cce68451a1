"""
JSON report output.

Reports are rendered with a fixed layout and no timestamps, so reruns with
the same inputs are byte-identical. Infinite ratios use the JSON token
`Infinity`.
"""
import json

from infrastructure.io.model_store import write_text_atomic


def render_report(data: dict) -> str:
    """Render a report with stable formatting and a trailing newline."""
    return json.dumps(data, indent=2, allow_nan=True) + "\n"


def write_report(data: dict, path) -> None:
    """Write a rendered report atomically."""
    write_text_atomic(path, render_report(data))
