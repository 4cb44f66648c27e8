"""Command-line interface."""

from .main import main, run
from .report import Report, render, render_csv, render_json

__all__ = ["Report", "main", "render", "render_csv", "render_json", "run"]
