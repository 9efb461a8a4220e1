"""Model-to-dashboard composition pipeline.

Five pure stages turn a model plus a metric lookup into a render tree:
menu listing, page framing, layout placement, widget rendering, and
interaction decoration. Widget renderings are independent of one another,
so they may run in any order (or in parallel); the frame is always merged
in widget order, keeping the tree deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Sequence

from . import layout as layout_engine
from .metrics import MetricSeries, placeholder_series
from .model import (
    GRID_COLUMNS,
    DashboardModel,
    DetailMethod,
    InteractionType,
    Page,
    Theme,
    VisType,
    Widget,
)
from .render import palette_for
from .render.widgets import MissingDataError, WidgetNode, error_panel, render_widget

# Pixel metrics for the static export: a 1200px reference page over the
# 12-column grid, 40px row height.
PAGE_WIDTH_PX = 1200.0
CELL_W = PAGE_WIDTH_PX / GRID_COLUMNS
CELL_H = 40.0

# One glyph per interaction type, rendered on the widget chrome.
ICON_GLYPHS: dict[InteractionType, str] = {
    InteractionType.FILTER: "▽",        # white down-pointing triangle
    InteractionType.ZOOM: "+",          # plus sign
    InteractionType.SHARE: "↗",         # north east arrow
    InteractionType.CUSTOMIZATION: "⚙", # gear
    InteractionType.DETAIL_ON_DEMAND: "…",  # horizontal ellipsis
    InteractionType.REFRESH: "↻",       # clockwise open circle arrow
    InteractionType.PRINT: "⎙",         # print screen symbol
    InteractionType.NAVIGATION: "→",    # rightwards arrow
}

MODES = ("full", "pure")

DataProvider = Callable[[str], "MetricSeries | None"]


class UnknownPageError(KeyError):
    def __init__(self, page_id: str):
        super().__init__(page_id)
        self.page_id = page_id


@dataclass(frozen=True)
class PixelRect:
    x: float
    y: float
    w: float
    h: float


@dataclass(frozen=True)
class MenuEntry:
    page_id: str
    name: str
    href: str
    current: bool = False


@dataclass(frozen=True)
class IconRef:
    interaction: InteractionType
    glyph: str
    href: str | None = None


@dataclass(frozen=True)
class PlacedWidget:
    node: WidgetNode
    rect: PixelRect
    icons: tuple[IconRef, ...] = ()


@dataclass(frozen=True)
class RenderTree:
    dashboard_title: str
    theme: Theme
    menu: tuple[MenuEntry, ...]
    current_page_id: str
    frame: tuple[PlacedWidget, ...]
    mode: str = "full"


def list_menu(m: DashboardModel) -> tuple[MenuEntry, ...]:
    """One clickable entry per page, in model order, keyed by page id."""
    return tuple(
        MenuEntry(page_id=p.id, name=p.name, href=f"/page/{p.id}") for p in m.pages
    )


def frame_page(m: DashboardModel, page_ref: str, mode: str = "full") -> RenderTree:
    """Menu plus resolved current page; the frame is filled by compose_page."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}; got {mode!r}")
    page = m.page(page_ref)
    if page is None:
        raise UnknownPageError(page_ref)
    menu = tuple(
        replace(entry, current=entry.page_id == page_ref) for entry in list_menu(m)
    )
    return RenderTree(
        dashboard_title=m.name,
        theme=m.theme,
        menu=menu,
        current_page_id=page_ref,
        frame=(),
        mode=mode,
    )


def compose_page(
    m: DashboardModel,
    page_ref: str,
    data_provider: DataProvider | None = None,
    mode: str = "full",
    seed: int = 0,
) -> RenderTree:
    """Run the full pipeline for one page.

    Widgets bound to a metric the provider cannot resolve degrade to an
    inline error panel; the page always renders.
    """
    skeleton = frame_page(m, page_ref, mode)
    page = m.page(page_ref)
    assert page is not None
    layout_engine.place_all(page)  # defensive overlap check

    frame = []
    for widget in page.widgets:
        node = _render_stage(widget, data_provider, m.theme, seed)
        rect = PixelRect(
            x=widget.layout.x * CELL_W,
            y=widget.layout.y * CELL_H,
            w=widget.layout.w * CELL_W,
            h=widget.layout.h * CELL_H,
        )
        frame.append(PlacedWidget(node=node, rect=rect, icons=_icon_stage(widget)))
    return replace(skeleton, frame=tuple(frame))


def _render_stage(
    widget: Widget,
    data_provider: DataProvider | None,
    theme: Theme,
    seed: int,
) -> WidgetNode:
    palette = palette_for(theme)
    vistype = widget.properties.vistype
    try:
        if vistype is VisType.TITLE:
            return render_widget(widget, None, palette)
        bound = widget.metric_ids
        if bound:
            series: list[MetricSeries] = []
            for metric_id in bound:
                resolved = data_provider(metric_id) if data_provider else None
                if resolved is None:
                    raise MissingDataError(widget.id, f"metric {metric_id!r} not found")
                series.append(resolved)
            return render_widget(widget, series, palette)
        if vistype is VisType.SINGLE_VALUE and widget.properties.title is not None:
            return render_widget(widget, None, palette)
        placeholder = placeholder_series(
            widget.id,
            widget.properties.childrenname,
            seed,
            equal_weights=vistype in (VisType.PIE, VisType.RING),
        )
        return render_widget(widget, placeholder, palette)
    except (MissingDataError, ValueError) as exc:
        message = exc.args[0] if exc.args else str(exc)
        return error_panel(widget, str(message), palette)


def _icon_stage(widget: Widget) -> tuple[IconRef, ...]:
    if widget.interaction is None:
        return ()
    icons = []
    for itype in widget.interaction.interactions:
        href = None
        if itype is InteractionType.DETAIL_ON_DEMAND and widget.interaction.detail:
            detail = widget.interaction.detail
            href = f"/page/{detail.target}"
            if detail.method is DetailMethod.PURE:
                href += "?mode=pure"
        icons.append(IconRef(interaction=itype, glyph=ICON_GLYPHS[itype], href=href))
    return tuple(icons)


def page_height_px(page: Page) -> float:
    rows = max((w.layout.y + w.layout.h for w in page.widgets), default=0)
    return max(rows * CELL_H, CELL_H)


# --------------------------------------------------------------------------
# Wire form (consumed by the editor UI)
# --------------------------------------------------------------------------

def render_tree_to_wire(tree: RenderTree) -> dict:
    return {
        "dashboardTitle": tree.dashboard_title,
        "theme": tree.theme.value,
        "mode": tree.mode,
        "currentPageId": tree.current_page_id,
        "menu": [
            {
                "pageId": e.page_id,
                "name": e.name,
                "href": e.href,
                "current": e.current,
            }
            for e in tree.menu
        ],
        "frame": [
            {
                "widgetId": p.node.widget_id,
                "vistype": p.node.vistype.value,
                "title": p.node.title_text,
                "rect": {"x": p.rect.x, "y": p.rect.y, "w": p.rect.w, "h": p.rect.h},
                "graphic": p.node.graphic,
                "legend": (
                    [{"label": lbl, "colour": col} for lbl, col in p.node.legend]
                    if p.node.legend is not None
                    else None
                ),
                "legendPosition": p.node.legend_position,
                "icons": [
                    {
                        "interaction": i.interaction.value,
                        "glyph": i.glyph,
                        "href": i.href,
                    }
                    for i in p.icons
                ],
                "error": p.node.error,
            }
            for p in tree.frame
        ],
    }
