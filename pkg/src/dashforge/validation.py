"""Structural validation of dashboard models.

Violations are data, not exceptions: ``validate_model`` always returns a
report. Each rule has a stable id so callers (CLI, HTTP service, editor)
can key behaviour off it.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gridkernel
from .model import (
    GRID_COLUMNS,
    Baseline,
    DashboardModel,
    InteractionType,
    LegendPosition,
    Page,
    Theme,
    VisType,
    Widget,
    is_valid_colour,
)

DASHBOARD_ID_EMPTY = "DASHBOARD_ID_EMPTY"
THEME_INVALID = "THEME_INVALID"
NO_PAGES = "NO_PAGES"
DUP_PAGE_ID = "DUP_PAGE_ID"
NEGATIVE_REVISION = "NEGATIVE_REVISION"
PAGE_NAME_EMPTY = "PAGE_NAME_EMPTY"
DUP_WIDGET_ID = "DUP_WIDGET_ID"
VISTYPE_INVALID = "VISTYPE_INVALID"
LAYOUT_BOUNDS = "LAYOUT_BOUNDS"
LAYOUT_OVERFLOW = "LAYOUT_OVERFLOW"
CHILDRENNAME_EMPTY = "CHILDRENNAME_EMPTY"
COLOUR_FORMAT = "COLOUR_FORMAT"
FONTSIZE_INVALID = "FONTSIZE_INVALID"
LEGEND_POSITION_INVALID = "LEGEND_POSITION_INVALID"
BASELINE_INVALID = "BASELINE_INVALID"
DETAIL_REQUIRED = "DETAIL_REQUIRED"
DANGLING_TARGET = "DANGLING_TARGET"
OVERLAP = "OVERLAP"

ALL_RULES = (
    DASHBOARD_ID_EMPTY, THEME_INVALID, NO_PAGES, DUP_PAGE_ID,
    NEGATIVE_REVISION, PAGE_NAME_EMPTY, DUP_WIDGET_ID, VISTYPE_INVALID,
    LAYOUT_BOUNDS, LAYOUT_OVERFLOW, CHILDRENNAME_EMPTY, COLOUR_FORMAT,
    FONTSIZE_INVALID, LEGEND_POSITION_INVALID, BASELINE_INVALID,
    DETAIL_REQUIRED, DANGLING_TARGET, OVERLAP,
)


@dataclass(frozen=True)
class Violation:
    rule: str
    path: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def rules(self) -> tuple[str, ...]:
        return tuple(v.rule for v in self.violations)

    def __iter__(self):
        return iter(self.violations)


def validate_model(m: DashboardModel) -> ValidationReport:
    """Check every structural invariant; empty report means valid."""
    out: list[Violation] = []

    if not m.id:
        out.append(Violation(DASHBOARD_ID_EMPTY, "id", "dashboard id must be non-empty"))
    if not isinstance(m.theme, Theme):
        out.append(Violation(THEME_INVALID, "theme", f"theme must be a Theme, got {m.theme!r}"))
    if not m.pages:
        out.append(Violation(NO_PAGES, "pages", "a dashboard requires at least one page"))
    if m.revision < 0:
        out.append(Violation(NEGATIVE_REVISION, "revision", f"revision must be >= 0, got {m.revision}"))

    seen_pages: dict[str, str] = {}
    seen_widgets: dict[str, str] = {}
    page_ids = {p.id for p in m.pages}
    for pi, page in enumerate(m.pages):
        ppath = f"pages[{pi}]"
        if page.id in seen_pages:
            out.append(Violation(
                DUP_PAGE_ID, f"{ppath}.id",
                f"page id {page.id!r} already used at {seen_pages[page.id]}",
            ))
        else:
            seen_pages[page.id] = ppath
        if not page.name:
            out.append(Violation(
                PAGE_NAME_EMPTY, f"{ppath}.name",
                "page name must be non-empty (it labels the navigation menu)",
            ))
        for wi, widget in enumerate(page.widgets):
            wpath = f"{ppath}.widgets[{wi}]"
            if widget.id in seen_widgets:
                out.append(Violation(
                    DUP_WIDGET_ID, f"{wpath}.id",
                    f"widget id {widget.id!r} already used at {seen_widgets[widget.id]}",
                ))
            else:
                seen_widgets[widget.id] = wpath
            out.extend(_check_widget(widget, wpath, page_ids))
        out.extend(_check_overlaps(page, ppath))

    return ValidationReport(tuple(out))


def _check_widget(w: Widget, path: str, page_ids: set[str]) -> list[Violation]:
    out: list[Violation] = []
    props = w.properties
    if not isinstance(props.vistype, VisType):
        out.append(Violation(
            VISTYPE_INVALID, f"{path}.properties.vistype",
            f"vistype must be a VisType, got {props.vistype!r}",
        ))
    elif props.vistype in (VisType.PIE, VisType.RING):
        if props.childrenname is not None and not props.childrenname:
            out.append(Violation(
                CHILDRENNAME_EMPTY, f"{path}.properties.childrenname",
                "childrenname must be non-empty when present on pie/ring",
            ))

    rect = w.layout
    if rect.w < 1 or rect.h < 1 or rect.x < 0 or rect.y < 0:
        out.append(Violation(
            LAYOUT_BOUNDS, f"{path}.layout",
            f"layout requires w,h >= 1 and x,y >= 0; got x={rect.x} y={rect.y} w={rect.w} h={rect.h}",
        ))
    elif rect.x + rect.w > GRID_COLUMNS:
        out.append(Violation(
            LAYOUT_OVERFLOW, f"{path}.layout",
            f"x + w = {rect.x + rect.w} exceeds the {GRID_COLUMNS}-column grid",
        ))

    if w.visconfig is not None:
        cfg = w.visconfig
        cpath = f"{path}.visconfig"
        if cfg.colour is not None:
            for ci, value in enumerate(cfg.colour):
                if not is_valid_colour(value):
                    out.append(Violation(
                        COLOUR_FORMAT, f"{cpath}.colour[{ci}]",
                        f"colour must match #RRGGBB; got {value!r}",
                    ))
        if cfg.font_size is not None and not cfg.font_size > 0:
            out.append(Violation(
                FONTSIZE_INVALID, f"{cpath}.fontSize",
                f"fontSize must be > 0; got {cfg.font_size}",
            ))
        if cfg.legend_position is not None and not isinstance(cfg.legend_position, LegendPosition):
            out.append(Violation(
                LEGEND_POSITION_INVALID, f"{cpath}.legendPosition",
                f"legendPosition must be a LegendPosition, got {cfg.legend_position!r}",
            ))
        if cfg.baseline is not None and not isinstance(cfg.baseline, Baseline):
            out.append(Violation(
                BASELINE_INVALID, f"{cpath}.baseline",
                f"baseline must be a Baseline, got {cfg.baseline!r}",
            ))

    if w.interaction is not None:
        spec = w.interaction
        ipath = f"{path}.interaction"
        if InteractionType.DETAIL_ON_DEMAND in spec.interactions and spec.detail is None:
            out.append(Violation(
                DETAIL_REQUIRED, f"{ipath}.detail",
                "detail configuration is required when Detail on demand is selected",
            ))
        if spec.detail is not None:
            if spec.detail.target not in page_ids:
                out.append(Violation(
                    DANGLING_TARGET, f"{ipath}.detail.target",
                    f"detail target {spec.detail.target!r} is not a page id",
                ))
    return out


def _check_overlaps(page: Page, ppath: str) -> list[Violation]:
    widgets = page.widgets
    rects = [(w.layout.x, w.layout.y, w.layout.w, w.layout.h) for w in widgets]
    out: list[Violation] = []
    for i, j in gridkernel.overlapping_pairs(rects):
        out.append(Violation(
            OVERLAP, f"{ppath}.widgets[{j}].layout",
            f"widgets {widgets[i].id!r} and {widgets[j].id!r} overlap on page {page.id!r}",
        ))
    return out
