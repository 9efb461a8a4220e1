"""Per-technique SVG rendering.

Each widget renders to a standalone vector fragment on a fixed 320x200
viewBox; the export layer scales it into the widget's pixel rectangle.
Rendering is a pure function of (widget, data, theme): same inputs, same
bytes. Numbers are formatted through one helper so no platform float
formatting leaks into the output.

Geometry never depends on the theme; only fill/stroke values do.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence
from xml.sax.saxutils import escape, quoteattr

from ..metrics import MetricSeries
from ..model import InteractionType, VisType, Widget
from .geometry import (
    arc_angles,
    deviation_baseline,
    gauge_needle_angle,
    moving_average_baseline,
    scale_linear,
    treemap_slice_dice,
)
from .themes import ThemePalette

VIEW_W = 320.0
VIEW_H = 200.0
FONT_STACK = "Helvetica, Arial, sans-serif"
BASELINE_WINDOW = 3
TABLE_MAX_ROWS = 8


class MissingDataError(ValueError):
    """A vis type that needs a series was rendered without one."""

    def __init__(self, widget_id: str, detail: str = "no series bound"):
        super().__init__(f"widget {widget_id!r}: {detail}")
        self.widget_id = widget_id


@dataclass(frozen=True)
class WidgetNode:
    """Rendered widget: the vector fragment plus its chrome metadata."""

    widget_id: str
    vistype: VisType
    graphic: str
    title_text: str | None = None
    legend: tuple[tuple[str, str], ...] | None = None
    legend_position: str = "bottom"
    interaction_icons: tuple[InteractionType, ...] = ()
    error: str | None = None


def _fmt(x: float) -> str:
    """Millis-precision decimal with no trailing zeros; '-0' collapses to '0'."""
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _svg(body: str) -> str:
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_fmt(VIEW_W)} {_fmt(VIEW_H)}" '
        f'preserveAspectRatio="xMidYMid meet" font-family={quoteattr(FONT_STACK)}>'
        f"{body}</svg>"
    )


def _text(x: float, y: float, content: str, fill: str, size: float,
          anchor: str = "start", weight: str | None = None) -> str:
    w = f' font-weight="{weight}"' if weight else ""
    return (
        f'<text x="{_fmt(x)}" y="{_fmt(y)}" fill="{fill}" font-size="{_fmt(size)}"'
        f' text-anchor="{anchor}"{w}>{escape(content)}</text>'
    )


def _polar(cx: float, cy: float, r: float, angle: float) -> tuple[float, float]:
    # Angles run clockwise from 12 o'clock, matching reading order.
    rad = math.radians(angle - 90.0)
    return cx + r * math.cos(rad), cy + r * math.sin(rad)


def render_widget(
    widget: Widget,
    data: MetricSeries | Sequence[MetricSeries] | None,
    theme: ThemePalette,
) -> WidgetNode:
    """Render one widget to a :class:`WidgetNode`.

    ``data`` may be a single series, a list (composite and multi-metric
    charts), or ``None`` for the title type and single-value widgets that
    carry their value inline. Raises :class:`MissingDataError` otherwise.
    """
    vistype = widget.properties.vistype
    series_list = _normalize_data(data)
    cfg = widget.visconfig
    colours = cfg.colour if cfg and cfg.colour else None
    icons = widget.interaction.interactions if widget.interaction else ()

    if vistype is VisType.TITLE:
        body = _text(
            VIEW_W / 2, VIEW_H / 2 + 8, widget.properties.title or "",
            theme.text, 24, anchor="middle", weight="bold",
        )
        return WidgetNode(
            widget_id=widget.id, vistype=vistype, graphic=_svg(body),
            title_text=widget.properties.title, interaction_icons=icons,
        )

    if vistype is VisType.SINGLE_VALUE and not series_list:
        if widget.properties.title is None:
            raise MissingDataError(widget.id, "single-value needs a series or inline title")
        return _single_value_node(widget, widget.properties.title, theme, icons)

    if not series_list:
        raise MissingDataError(widget.id)
    if not series_list[0].points:
        raise MissingDataError(widget.id, "bound series has no points")

    first = series_list[0]
    labels = [str(p[0]) for p in first.points]
    values = [p[1] for p in first.points]

    legend: tuple[tuple[str, str], ...] | None = None
    legend_position = "bottom"
    if cfg:
        if cfg.legend_position is not None:
            legend_position = cfg.legend_position.value

    renderers = {
        VisType.SINGLE_VALUE: lambda: _single_value_body(widget, first, theme),
        VisType.TABLE: lambda: _table_body(first, theme),
        VisType.GAUGE: lambda: _gauge_body(first, theme, colours),
        VisType.AREA: lambda: _series_chart_body(widget, series_list, theme, colours, "area"),
        VisType.COLUMN: lambda: _column_body(widget, first, theme, colours),
        VisType.WORD_CLOUD: lambda: _wordcloud_body(first, theme, colours),
        VisType.RING: lambda: _pie_body(values, theme, colours, inner_ratio=0.55),
        VisType.MAP: lambda: _map_body(first, theme),
        VisType.COMPOSITE: lambda: _composite_body(widget, series_list, theme, colours),
        VisType.SCATTER: lambda: _scatter_body(widget, first, theme, colours),
        VisType.RADIAL_TREE: lambda: _radial_tree_body(first, theme, colours),
        VisType.PIE: lambda: _pie_body(values, theme, colours, inner_ratio=0.0),
        VisType.BAR: lambda: _bar_body(widget, first, theme, colours),
        VisType.TREEMAP: lambda: _treemap_body(first, theme, colours),
        VisType.LINE: lambda: _series_chart_body(widget, series_list, theme, colours, "line"),
        VisType.BULLET: lambda: _bullet_body(first, theme, colours),
        VisType.SANKEY: lambda: _sankey_body(first, theme, colours),
        VisType.RADAR: lambda: _radar_body(first, theme, colours),
    }
    body = renderers[vistype]()

    if vistype in _LEGEND_TYPES:
        if len(series_list) > 1:
            entries = [
                (s.name, _colour_at(theme, colours, i))
                for i, s in enumerate(series_list)
            ]
        else:
            entries = [
                (label, _colour_at(theme, colours, i))
                for i, label in enumerate(labels)
            ]
        legend = tuple(entries)
    if cfg and cfg.legend_disabled:
        legend = None

    return WidgetNode(
        widget_id=widget.id,
        vistype=vistype,
        graphic=_svg(body),
        title_text=widget.name,
        legend=legend,
        legend_position=legend_position,
        interaction_icons=icons,
    )


def error_panel(widget: Widget, message: str, theme: ThemePalette) -> WidgetNode:
    """Inline degradation for data failures; the page still renders."""
    body = (
        f'<rect x="4" y="4" width="{_fmt(VIEW_W - 8)}" height="{_fmt(VIEW_H - 8)}" '
        f'fill="none" stroke="#b85450" stroke-dasharray="6 4" rx="6"/>'
        + _text(VIEW_W / 2, VIEW_H / 2 - 6, "data unavailable", "#b85450", 16, anchor="middle")
        + _text(VIEW_W / 2, VIEW_H / 2 + 16, message, theme.axis, 11, anchor="middle")
    )
    icons = widget.interaction.interactions if widget.interaction else ()
    return WidgetNode(
        widget_id=widget.id,
        vistype=widget.properties.vistype,
        graphic=_svg(body),
        title_text=widget.name,
        interaction_icons=icons,
        error=message,
    )


_LEGEND_TYPES = {
    VisType.PIE, VisType.RING, VisType.COLUMN, VisType.BAR, VisType.AREA,
    VisType.LINE, VisType.COMPOSITE, VisType.SCATTER, VisType.RADAR,
    VisType.TREEMAP, VisType.SANKEY,
}


def _normalize_data(
    data: MetricSeries | Sequence[MetricSeries] | None,
) -> tuple[MetricSeries, ...]:
    if data is None:
        return ()
    if isinstance(data, MetricSeries):
        return (data,)
    return tuple(data)


def _colour_at(theme: ThemePalette, colours: tuple[str, ...] | None, i: int) -> str:
    return theme.colour(i, colours)


def _axis_labels_disabled(widget: Widget) -> bool:
    return bool(widget.visconfig and widget.visconfig.axis_label_disabled)


# --------------------------------------------------------------------------
# Individual techniques
# --------------------------------------------------------------------------

def _single_value_node(widget, text, theme, icons) -> WidgetNode:
    size = widget.visconfig.font_size if widget.visconfig and widget.visconfig.font_size else 32
    body = _text(VIEW_W / 2, VIEW_H / 2 + size / 3, text, theme.text, size, anchor="middle", weight="bold")
    return WidgetNode(
        widget_id=widget.id, vistype=VisType.SINGLE_VALUE,
        graphic=_svg(body), title_text=widget.name,
        interaction_icons=icons,
    )


def _single_value_body(widget: Widget, series: MetricSeries, theme: ThemePalette) -> str:
    size = widget.visconfig.font_size if widget.visconfig and widget.visconfig.font_size else 32
    value = series.points[-1][1]
    body = _text(
        VIEW_W / 2, VIEW_H / 2 + size / 3, _fmt(value), theme.text, size,
        anchor="middle", weight="bold",
    )
    if series.unit:
        body += _text(VIEW_W / 2, VIEW_H / 2 + size / 3 + 20, series.unit, theme.axis, 12, anchor="middle")
    return body


def _table_body(series: MetricSeries, theme: ThemePalette) -> str:
    rows = list(series.points[:TABLE_MAX_ROWS])
    row_h = 22.0
    parts = [
        f'<rect x="8" y="8" width="{_fmt(VIEW_W - 16)}" height="{_fmt(row_h)}" fill="{theme.surface}"/>',
        _text(16, 24, series.name, theme.text, 12, weight="bold"),
        _text(VIEW_W - 16, 24, series.unit or "value", theme.text, 12, anchor="end", weight="bold"),
    ]
    y = 8 + row_h
    for label, value in rows:
        parts.append(f'<line x1="8" y1="{_fmt(y)}" x2="{_fmt(VIEW_W - 8)}" y2="{_fmt(y)}" stroke="{theme.axis}" stroke-width="0.5"/>')
        parts.append(_text(16, y + 16, str(label), theme.text, 12))
        parts.append(_text(VIEW_W - 16, y + 16, _fmt(value), theme.text, 12, anchor="end"))
        y += row_h
    if len(series.points) > TABLE_MAX_ROWS:
        parts.append(_text(16, y + 14, f"... {len(series.points) - TABLE_MAX_ROWS} more rows", theme.axis, 10))
    return "".join(parts)


def _pie_body(values: Sequence[float], theme: ThemePalette,
              colours: tuple[str, ...] | None, inner_ratio: float) -> str:
    cx, cy, r = VIEW_W / 2, VIEW_H / 2, 80.0
    angles = arc_angles(values)
    parts = []
    start = 0.0
    for i, sweep in enumerate(angles):
        fill = _colour_at(theme, colours, i)
        if sweep <= 0:
            start += sweep
            continue
        if sweep >= 360.0:
            if inner_ratio > 0:
                parts.append(
                    f'<circle class="pie-slice" data-angle="{_fmt(sweep)}" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" '
                    f'fill="none" stroke="{fill}" stroke-width="{_fmt(r * (1 - inner_ratio))}"/>'
                )
            else:
                parts.append(
                    f'<circle class="pie-slice" data-angle="{_fmt(sweep)}" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" fill="{fill}"/>'
                )
            start += sweep
            continue
        end = start + sweep
        large = 1 if sweep > 180.0 else 0
        x0, y0 = _polar(cx, cy, r, start)
        x1, y1 = _polar(cx, cy, r, end)
        if inner_ratio > 0:
            ri = r * inner_ratio
            xi0, yi0 = _polar(cx, cy, ri, end)
            xi1, yi1 = _polar(cx, cy, ri, start)
            d = (
                f"M {_fmt(x0)} {_fmt(y0)} A {_fmt(r)} {_fmt(r)} 0 {large} 1 {_fmt(x1)} {_fmt(y1)} "
                f"L {_fmt(xi0)} {_fmt(yi0)} A {_fmt(ri)} {_fmt(ri)} 0 {large} 0 {_fmt(xi1)} {_fmt(yi1)} Z"
            )
        else:
            d = (
                f"M {_fmt(cx)} {_fmt(cy)} L {_fmt(x0)} {_fmt(y0)} "
                f"A {_fmt(r)} {_fmt(r)} 0 {large} 1 {_fmt(x1)} {_fmt(y1)} Z"
            )
        parts.append(f'<path class="pie-slice" data-angle="{_fmt(sweep)}" d="{d}" fill="{fill}"/>')
        start = end
    return "".join(parts)


def _gauge_body(series: MetricSeries, theme: ThemePalette,
                colours: tuple[str, ...] | None) -> str:
    # Default domain [0, 100] over a 180-degree arc.
    value = series.points[-1][1]
    angle = gauge_needle_angle(value)
    cx, cy, r = VIEW_W / 2, VIEW_H - 40.0, 110.0
    xl, yl = _polar(cx, cy, r, 270.0)
    xr, yr = _polar(cx, cy, r, 90.0)
    track = (
        f'<path d="M {_fmt(xl)} {_fmt(yl)} A {_fmt(r)} {_fmt(r)} 0 0 1 {_fmt(xr)} {_fmt(yr)}" '
        f'fill="none" stroke="{theme.surface}" stroke-width="18"/>'
    )
    xe, ye = _polar(cx, cy, r, (270.0 + angle) % 360.0)
    arc_large = 0  # needle arc never exceeds 180 degrees
    fill_arc = (
        f'<path d="M {_fmt(xl)} {_fmt(yl)} A {_fmt(r)} {_fmt(r)} 0 {arc_large} 1 {_fmt(xe)} {_fmt(ye)}" '
        f'fill="none" stroke="{_colour_at(theme, colours, 0)}" stroke-width="18"/>'
    )
    nx, ny = _polar(cx, cy, r - 24, (270.0 + angle) % 360.0)
    needle = (
        f'<line class="gauge-needle" x1="{_fmt(cx)}" y1="{_fmt(cy)}" x2="{_fmt(nx)}" y2="{_fmt(ny)}" '
        f'stroke="{theme.text}" stroke-width="3" data-angle="{_fmt(angle)}"/>'
        f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="5" fill="{theme.text}"/>'
    )
    label = _text(cx, cy + 28, _fmt(value), theme.text, 20, anchor="middle", weight="bold")
    return track + fill_arc + needle + label


_CHART_LEFT = 36.0
_CHART_RIGHT = VIEW_W - 12.0
_CHART_TOP = 16.0
_CHART_BOTTOM = VIEW_H - 28.0


def _value_domain(all_values: Sequence[float]) -> tuple[float, float]:
    lo = min(0.0, min(all_values))
    hi = max(0.0, max(all_values))
    if lo == hi:
        hi = lo + 1.0
    return lo, hi


def _y_pos(v: float, lo: float, hi: float) -> float:
    return scale_linear(lo, hi, _CHART_BOTTOM, _CHART_TOP, v)


def _x_positions(n: int) -> list[float]:
    if n == 1:
        return [(_CHART_LEFT + _CHART_RIGHT) / 2]
    return [
        scale_linear(0, n - 1, _CHART_LEFT, _CHART_RIGHT, i) for i in range(n)
    ]


def _axes(theme: ThemePalette, lo: float, hi: float, labels: Sequence[str],
          xs: Sequence[float], show_labels: bool) -> str:
    parts = [
        f'<line x1="{_fmt(_CHART_LEFT)}" y1="{_fmt(_CHART_TOP)}" x2="{_fmt(_CHART_LEFT)}" '
        f'y2="{_fmt(_CHART_BOTTOM)}" stroke="{theme.axis}"/>',
        f'<line x1="{_fmt(_CHART_LEFT)}" y1="{_fmt(_CHART_BOTTOM)}" x2="{_fmt(_CHART_RIGHT)}" '
        f'y2="{_fmt(_CHART_BOTTOM)}" stroke="{theme.axis}"/>',
    ]
    if show_labels:
        parts.append(_text(_CHART_LEFT - 4, _CHART_TOP + 4, _fmt(hi), theme.axis, 9, anchor="end"))
        parts.append(_text(_CHART_LEFT - 4, _CHART_BOTTOM + 4, _fmt(lo), theme.axis, 9, anchor="end"))
        # At most six x labels to avoid clutter.
        step = max(1, (len(labels) + 5) // 6)
        for i in range(0, len(labels), step):
            parts.append(_text(xs[i], _CHART_BOTTOM + 14, _short(labels[i]), theme.axis, 9, anchor="middle"))
    return "".join(parts)


def _short(label: str) -> str:
    return label if len(label) <= 8 else label[:7] + "…"


def _baseline_overlay(widget: Widget, values: Sequence[float],
                      xs: Sequence[float], lo: float, hi: float,
                      theme: ThemePalette) -> str:
    cfg = widget.visconfig
    if not cfg or cfg.baseline is None or cfg.baseline.value == "none":
        return ""
    if cfg.baseline.value == "movingAverage":
        base = moving_average_baseline(list(values), BASELINE_WINDOW)
    else:
        base = [max(lo, min(hi, v)) for v in deviation_baseline(list(values))]
    pts = " ".join(f"{_fmt(x)},{_fmt(_y_pos(v, lo, hi))}" for x, v in zip(xs, base))
    return (
        f'<polyline class="baseline" points="{pts}" fill="none" '
        f'stroke="{theme.axis}" stroke-width="1.5" stroke-dasharray="5 3"/>'
    )


def _series_chart_body(widget: Widget, series_list: Sequence[MetricSeries],
                       theme: ThemePalette, colours: tuple[str, ...] | None,
                       style: str) -> str:
    all_values = [v for s in series_list for v in s.values()]
    lo, hi = _value_domain(all_values)
    n = max(len(s.points) for s in series_list)
    xs = _x_positions(n)
    first = series_list[0]
    labels = [str(p[0]) for p in first.points]
    parts = [_axes(theme, lo, hi, labels, xs[:len(labels)],
                   not _axis_labels_disabled(widget))]
    zero_y = _y_pos(max(lo, min(hi, 0.0)), lo, hi)
    for si, series in enumerate(series_list):
        colour = _colour_at(theme, colours, si)
        pts = [
            (xs[i], _y_pos(p[1], lo, hi)) for i, p in enumerate(series.points)
        ]
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
        if style == "area" and pts:
            poly = (
                f"{_fmt(pts[0][0])},{_fmt(zero_y)} {coords} "
                f"{_fmt(pts[-1][0])},{_fmt(zero_y)}"
            )
            parts.append(f'<polygon points="{poly}" fill="{colour}" opacity="0.35"/>')
        parts.append(
            f'<polyline class="series-line" points="{coords}" fill="none" '
            f'stroke="{colour}" stroke-width="2"/>'
        )
    parts.append(_baseline_overlay(widget, first.values(), xs[:len(first.points)], lo, hi, theme))
    return "".join(parts)


def _column_body(widget: Widget, series: MetricSeries, theme: ThemePalette,
                 colours: tuple[str, ...] | None) -> str:
    values = list(series.values())
    labels = [str(p[0]) for p in series.points]
    lo, hi = _value_domain(values)
    n = len(values)
    slot = (_CHART_RIGHT - _CHART_LEFT) / n
    bar_w = slot * 0.6
    parts = []
    zero_y = _y_pos(max(lo, min(hi, 0.0)), lo, hi)
    centers = []
    for i, v in enumerate(values):
        x = _CHART_LEFT + slot * i + (slot - bar_w) / 2
        top = _y_pos(v, lo, hi)
        y0, y1 = min(top, zero_y), max(top, zero_y)
        centers.append(x + bar_w / 2)
        # data-extent carries the unrounded extent for exact verification.
        parts.append(
            f'<rect class="column-bar" data-extent="{y1 - y0!r}" x="{_fmt(x)}" y="{_fmt(y0)}" '
            f'width="{_fmt(bar_w)}" height="{_fmt(y1 - y0)}" fill="{_colour_at(theme, colours, i)}"/>'
        )
    parts.insert(0, _axes(theme, lo, hi, labels, centers, not _axis_labels_disabled(widget)))
    parts.append(_baseline_overlay(widget, values, centers, lo, hi, theme))
    return "".join(parts)


def _bar_body(widget: Widget, series: MetricSeries, theme: ThemePalette,
              colours: tuple[str, ...] | None) -> str:
    values = list(series.values())
    labels = [str(p[0]) for p in series.points]
    lo, hi = _value_domain(values)
    n = len(values)
    slot = (_CHART_BOTTOM - _CHART_TOP) / n
    bar_h = slot * 0.6
    zero_x = scale_linear(lo, hi, _CHART_LEFT, _CHART_RIGHT, max(lo, min(hi, 0.0)))
    parts = [
        f'<line x1="{_fmt(_CHART_LEFT)}" y1="{_fmt(_CHART_TOP)}" x2="{_fmt(_CHART_LEFT)}" '
        f'y2="{_fmt(_CHART_BOTTOM)}" stroke="{theme.axis}"/>'
    ]
    show_labels = not _axis_labels_disabled(widget)
    for i, v in enumerate(values):
        y = _CHART_TOP + slot * i + (slot - bar_h) / 2
        vx = scale_linear(lo, hi, _CHART_LEFT, _CHART_RIGHT, v)
        x0, x1 = min(vx, zero_x), max(vx, zero_x)
        parts.append(
            f'<rect class="bar" data-extent="{x1 - x0!r}" x="{_fmt(x0)}" y="{_fmt(y)}" '
            f'width="{_fmt(x1 - x0)}" height="{_fmt(bar_h)}" fill="{_colour_at(theme, colours, i)}"/>'
        )
        if show_labels:
            parts.append(_text(_CHART_LEFT - 4, y + bar_h / 2 + 3, _short(labels[i]), theme.axis, 9, anchor="end"))
    return "".join(parts)


def _wordcloud_body(series: MetricSeries, theme: ThemePalette,
                    colours: tuple[str, ...] | None) -> str:
    # Deterministic layout: sort by weight descending (label breaks ties),
    # pack left-to-right in rows. No random spiral.
    indexed = sorted(
        enumerate(series.points), key=lambda e: (-e[1][1], str(e[1][0]))
    )
    weights = [p[1] for _, p in indexed]
    w_lo, w_hi = min(weights), max(weights)
    parts = []
    x, y = 12.0, 34.0
    for original_i, (label, weight) in indexed:
        if w_hi == w_lo:
            size = 19.0
        else:
            size = scale_linear(w_lo, w_hi, 10.0, 28.0, weight)
        width = len(str(label)) * size * 0.62 + 10
        if x + width > VIEW_W - 12 and x > 12.0:
            x = 12.0
            y += 34.0
        if y > VIEW_H - 8:
            break
        parts.append(_text(x, y, str(label), _colour_at(theme, colours, original_i), size, weight="bold"))
        x += width
    return "".join(parts)


def _map_body(series: MetricSeries, theme: ThemePalette) -> str:
    # Placeholder panel: geography is out of scope.
    return (
        f'<rect x="10" y="10" width="{_fmt(VIEW_W - 20)}" height="{_fmt(VIEW_H - 20)}" '
        f'fill="{theme.surface}" stroke="{theme.axis}" rx="8"/>'
        + _text(VIEW_W / 2, VIEW_H / 2 - 10, "map", theme.axis, 22, anchor="middle", weight="bold")
        + _text(VIEW_W / 2, VIEW_H / 2 + 16, f"{series.name}: {len(series.points)} points",
                theme.text, 12, anchor="middle")
    )


def _composite_body(widget: Widget, series_list: Sequence[MetricSeries],
                    theme: ThemePalette, colours: tuple[str, ...] | None) -> str:
    # First series as columns, the rest as lines over one shared x axis.
    first = series_list[0]
    rest = series_list[1:]
    all_values = [v for s in series_list for v in s.values()]
    lo, hi = _value_domain(all_values)
    labels = [str(p[0]) for p in first.points]
    n = len(first.points)
    slot = (_CHART_RIGHT - _CHART_LEFT) / max(1, n)
    bar_w = slot * 0.5
    centers = [_CHART_LEFT + slot * i + slot / 2 for i in range(n)]
    zero_y = _y_pos(max(lo, min(hi, 0.0)), lo, hi)
    parts = [_axes(theme, lo, hi, labels, centers, not _axis_labels_disabled(widget))]
    for i, v in enumerate(first.values()):
        top = _y_pos(v, lo, hi)
        y0, y1 = min(top, zero_y), max(top, zero_y)
        parts.append(
            f'<rect class="column-bar" x="{_fmt(centers[i] - bar_w / 2)}" y="{_fmt(y0)}" '
            f'width="{_fmt(bar_w)}" height="{_fmt(y1 - y0)}" fill="{_colour_at(theme, colours, 0)}"/>'
        )
    for si, series in enumerate(rest, start=1):
        coords = " ".join(
            f"{_fmt(centers[i])},{_fmt(_y_pos(p[1], lo, hi))}"
            for i, p in enumerate(series.points[:n])
        )
        parts.append(
            f'<polyline class="series-line" points="{coords}" fill="none" '
            f'stroke="{_colour_at(theme, colours, si)}" stroke-width="2"/>'
        )
    return "".join(parts)


def _scatter_body(widget: Widget, series: MetricSeries, theme: ThemePalette,
                  colours: tuple[str, ...] | None) -> str:
    values = list(series.values())
    labels = [str(p[0]) for p in series.points]
    lo, hi = _value_domain(values)
    xs = _x_positions(len(values))
    parts = [_axes(theme, lo, hi, labels, xs, not _axis_labels_disabled(widget))]
    for i, v in enumerate(values):
        parts.append(
            f'<circle class="scatter-dot" cx="{_fmt(xs[i])}" cy="{_fmt(_y_pos(v, lo, hi))}" '
            f'r="4" fill="{_colour_at(theme, colours, i)}"/>'
        )
    return "".join(parts)


def _radial_tree_body(series: MetricSeries, theme: ThemePalette,
                      colours: tuple[str, ...] | None) -> str:
    # Equal-angle radial layout: root at the center, one leaf per point.
    cx, cy, r = VIEW_W / 2, VIEW_H / 2, 70.0
    n = len(series.points)
    parts = []
    for i, (label, _value) in enumerate(series.points):
        angle = 360.0 * i / n
        x, y = _polar(cx, cy, r, angle)
        colour = _colour_at(theme, colours, i)
        parts.append(f'<line x1="{_fmt(cx)}" y1="{_fmt(cy)}" x2="{_fmt(x)}" y2="{_fmt(y)}" stroke="{theme.axis}"/>')
        parts.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="6" fill="{colour}"/>')
        lx, ly = _polar(cx, cy, r + 16, angle)
        parts.append(_text(lx, ly + 3, _short(str(label)), theme.text, 9, anchor="middle"))
    parts.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="8" fill="{theme.text}"/>')
    return "".join(parts)


def _treemap_body(series: MetricSeries, theme: ThemePalette,
                  colours: tuple[str, ...] | None) -> str:
    values = [max(p[1], 1e-9) for p in series.points]
    tiles = treemap_slice_dice(values, (8.0, 8.0, VIEW_W - 16.0, VIEW_H - 16.0))
    parts = []
    for i, (x, y, w, h) in enumerate(tiles):
        parts.append(
            f'<rect class="treemap-tile" x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(w)}" '
            f'height="{_fmt(h)}" fill="{_colour_at(theme, colours, i)}" stroke="{theme.background}"/>'
        )
        if w > 34 and h > 18:
            parts.append(_text(x + 4, y + 14, _short(str(series.points[i][0])), theme.background, 10))
    return "".join(parts)


def _bullet_body(series: MetricSeries, theme: ThemePalette,
                 colours: tuple[str, ...] | None) -> str:
    # Measure = latest value, target tick = series mean.
    values = list(series.values())
    measure = values[-1]
    target = sum(values) / len(values)
    lo, hi = _value_domain(values)
    band_y, band_h = VIEW_H / 2 - 16, 32.0
    mx = scale_linear(lo, hi, _CHART_LEFT, _CHART_RIGHT, measure)
    tx = scale_linear(lo, hi, _CHART_LEFT, _CHART_RIGHT, target)
    return (
        f'<rect x="{_fmt(_CHART_LEFT)}" y="{_fmt(band_y)}" width="{_fmt(_CHART_RIGHT - _CHART_LEFT)}" '
        f'height="{_fmt(band_h)}" fill="{theme.surface}"/>'
        f'<rect class="bullet-measure" x="{_fmt(_CHART_LEFT)}" y="{_fmt(band_y + 10)}" '
        f'width="{_fmt(max(0.0, mx - _CHART_LEFT))}" height="{_fmt(band_h - 20)}" '
        f'fill="{_colour_at(theme, colours, 0)}"/>'
        f'<line class="bullet-target" x1="{_fmt(tx)}" y1="{_fmt(band_y - 4)}" x2="{_fmt(tx)}" '
        f'y2="{_fmt(band_y + band_h + 4)}" stroke="{theme.text}" stroke-width="3"/>'
        + _text(_CHART_LEFT, band_y - 10, series.name, theme.text, 11)
        + _text(_CHART_RIGHT, band_y + band_h + 16, _fmt(measure), theme.text, 11, anchor="end")
    )


def _sankey_body(series: MetricSeries, theme: ThemePalette,
                 colours: tuple[str, ...] | None) -> str:
    # Minimal layered flow: every category feeds one sink; ribbon width
    # proportional to value.
    values = list(series.values())
    total = sum(values) or 1.0
    gap = 6.0
    usable = VIEW_H - 24.0 - gap * (len(values) - 1)
    left_x, right_x = 24.0, VIEW_W - 24.0
    node_w = 12.0
    parts = []
    y = 12.0
    sink_h = usable
    sink_y = (VIEW_H - sink_h) / 2
    ry = sink_y
    for i, (label, value) in enumerate(series.points):
        h = usable * values[i] / total
        colour = _colour_at(theme, colours, i)
        parts.append(
            f'<rect x="{_fmt(left_x)}" y="{_fmt(y)}" width="{_fmt(node_w)}" height="{_fmt(h)}" fill="{colour}"/>'
        )
        x0 = left_x + node_w
        x1 = right_x - node_w
        mid = (x0 + x1) / 2
        d = (
            f"M {_fmt(x0)} {_fmt(y)} C {_fmt(mid)} {_fmt(y)} {_fmt(mid)} {_fmt(ry)} {_fmt(x1)} {_fmt(ry)} "
            f"L {_fmt(x1)} {_fmt(ry + h)} C {_fmt(mid)} {_fmt(ry + h)} {_fmt(mid)} {_fmt(y + h)} {_fmt(x0)} {_fmt(y + h)} Z"
        )
        parts.append(f'<path class="sankey-link" d="{d}" fill="{colour}" opacity="0.45"/>')
        parts.append(_text(left_x + node_w + 4, y + h / 2 + 3, _short(str(label)), theme.text, 9))
        y += h + gap
        ry += h
    parts.append(
        f'<rect x="{_fmt(right_x - node_w)}" y="{_fmt(sink_y)}" width="{_fmt(node_w)}" '
        f'height="{_fmt(sink_h)}" fill="{theme.axis}"/>'
    )
    return "".join(parts)


def _radar_body(series: MetricSeries, theme: ThemePalette,
                colours: tuple[str, ...] | None) -> str:
    cx, cy, r = VIEW_W / 2, VIEW_H / 2, 72.0
    values = list(series.values())
    hi = max(max(values), 0.0) or 1.0
    n = len(values)
    grid = []
    for ring_frac in (0.33, 0.66, 1.0):
        pts = " ".join(
            "{},{}".format(*map(_fmt, _polar(cx, cy, r * ring_frac, 360.0 * i / n)))
            for i in range(n)
        )
        grid.append(f'<polygon points="{pts}" fill="none" stroke="{theme.surface}"/>')
    spokes = []
    labels = []
    for i, (label, _v) in enumerate(series.points):
        angle = 360.0 * i / n
        x, y = _polar(cx, cy, r, angle)
        spokes.append(f'<line x1="{_fmt(cx)}" y1="{_fmt(cy)}" x2="{_fmt(x)}" y2="{_fmt(y)}" stroke="{theme.surface}"/>')
        lx, ly = _polar(cx, cy, r + 14, angle)
        labels.append(_text(lx, ly + 3, _short(str(label)), theme.axis, 9, anchor="middle"))
    shape_pts = " ".join(
        "{},{}".format(*map(_fmt, _polar(cx, cy, r * max(0.0, v) / hi, 360.0 * i / n)))
        for i, v in enumerate(values)
    )
    colour = _colour_at(theme, colours, 0)
    shape = (
        f'<polygon class="radar-shape" points="{shape_pts}" fill="{colour}" '
        f'opacity="0.4" stroke="{colour}" stroke-width="2"/>'
    )
    return "".join(grid + spokes + [shape] + labels)
