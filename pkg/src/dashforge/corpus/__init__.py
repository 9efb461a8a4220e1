"""Bundled synthetic dashboard corpus.

Eight models that collectively exercise every visualization technique,
every interaction type, both themes, and the four page-layout families
(standard grid, row oriented, column oriented, disordered). Two models
bind metric ids to the series shipped alongside under ``metrics/``.

The corpus is generated by ``scripts/build_corpus.py``; regenerate after
changing the builder rather than editing the JSON by hand.
"""

from __future__ import annotations

from pathlib import Path

from ..metrics import MetricSeries, parse_series
from ..model import DashboardModel, Page, parse_model

CORPUS_DIR = Path(__file__).parent
MODELS_DIR = CORPUS_DIR / "models"
METRICS_DIR = CORPUS_DIR / "metrics"

STANDARD_GRID = "standardGrid"
ROW_ORIENTED = "rowOriented"
COLUMN_ORIENTED = "columnOriented"
DISORDERED = "disordered"
LAYOUT_CLASSES = (STANDARD_GRID, ROW_ORIENTED, COLUMN_ORIENTED, DISORDERED)

# Intended class of each model's first page; the classifier must agree.
EXPECTED_LAYOUT_CLASSES = {
    "ops-overview": STANDARD_GRID,
    "threat-monitor": ROW_ORIENTED,
    "network-map": COLUMN_ORIENTED,
    "exec-summary": DISORDERED,
    "soc-live": ROW_ORIENTED,
    "compliance-report": COLUMN_ORIENTED,
    "incident-wall": STANDARD_GRID,
    "risk-posture": DISORDERED,
}


def corpus_model_names() -> list[str]:
    return sorted(p.stem for p in MODELS_DIR.glob("*.json"))


def load_corpus() -> list[DashboardModel]:
    return [
        parse_model((MODELS_DIR / f"{name}.json").read_text(encoding="utf-8"))
        for name in corpus_model_names()
    ]


def load_corpus_series() -> dict[str, MetricSeries]:
    out = {}
    for path in sorted(METRICS_DIR.glob("*.json")):
        series = parse_series(path.read_text(encoding="utf-8"))
        out[series.id] = series
    return out


def corpus_provider():
    """Metric lookup over the bundled series, for compose_page."""
    series = load_corpus_series()
    return series.get


def layout_class(page: Page) -> str:
    """Classify a page's arrangement into one of the four layout families.

    A page is row-banded when widgets group into uniform-height horizontal
    bands with disjoint row ranges, and column-banded when they group into
    uniform-width vertical bands with disjoint column ranges. Both means a
    standard grid, one or the other a row/column orientation, neither a
    disordered layout.
    """
    rows = _banded(page, axis="y")
    cols = _banded(page, axis="x")
    if rows and cols:
        return STANDARD_GRID
    if rows:
        return ROW_ORIENTED
    if cols:
        return COLUMN_ORIENTED
    return DISORDERED


def _banded(page: Page, axis: str) -> bool:
    groups: dict[int, list] = {}
    for widget in page.widgets:
        rect = widget.layout
        start = rect.y if axis == "y" else rect.x
        extent = rect.h if axis == "y" else rect.w
        groups.setdefault(start, []).append(extent)
    spans = []
    for start, extents in groups.items():
        if len(set(extents)) != 1:
            return False
        spans.append((start, start + extents[0]))
    spans.sort()
    for (_, prev_end), (next_start, _) in zip(spans, spans[1:]):
        if next_start < prev_end:
            return False
    return True
