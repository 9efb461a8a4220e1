"""GUI customization features as named model transformations.

Every edit is an :class:`EditCommand` (kind + target + payload) applied by
``apply_edit``, which returns a new, validated model with the revision
bumped by one. Scripts fold left and are atomic: the first failure aborts
the whole script and reports its index.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Any, Mapping, Sequence

from . import layout as layout_engine
from .model import (
    DashboardModel,
    DetailConfig,
    DetailMethod,
    InteractionSpec,
    LayoutRect,
    LegendPosition,
    Page,
    ParseError,
    Theme,
    VisConfig,
    VisProperties,
    VisType,
    Widget,
    Baseline,
    interaction_from_wire,
)
from .validation import validate_model

DASHBOARD_KINDS = ("renameDashboard", "setTheme", "setBaseDataModel", "switchModel", "newPage")
PAGE_KINDS = ("renamePage", "setPageLayout", "newWidget", "deletePage")
WIDGET_KINDS = (
    "renameWidget", "setVisType", "resize", "move", "setColor", "setMetricId",
    "setElementLayout", "setLegendDisabled", "setLegendPosition", "setBaseline",
    "setFontSize", "setAxisLabelDisabled", "setInteractions",
    "configureInteraction", "deleteWidget",
)
ALL_KINDS = DASHBOARD_KINDS + PAGE_KINDS + WIDGET_KINDS


class EditError(Exception):
    pass


class TargetNotFoundError(EditError):
    def __init__(self, target: str | None, kind: str):
        super().__init__(f"edit {kind!r}: target {target!r} not found")
        self.target = target


class InvalidPayloadError(EditError):
    def __init__(self, rule: str, message: str):
        super().__init__(f"{rule}: {message}")
        self.rule = rule


class IllegalEditError(EditError):
    pass


class EditScriptError(EditError):
    """Wraps the first failing command of a script with its index."""

    def __init__(self, index: int, cause: EditError):
        super().__init__(f"command {index} failed: {cause}")
        self.index = index
        self.cause = cause


@dataclass(frozen=True)
class EditCommand:
    kind: str
    target: str | None = None
    payload: Mapping[str, Any] = field(default_factory=dict)


def apply_edit(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    """Apply one command, returning a new valid model (input untouched)."""
    handler = _HANDLERS.get(cmd.kind)
    if handler is None:
        raise InvalidPayloadError("UNKNOWN_KIND", f"unknown edit kind {cmd.kind!r}")
    edited = handler(m, cmd)
    edited = replace(edited, revision=m.revision + 1)
    report = validate_model(edited)
    if not report.ok:
        first = report.violations[0]
        raise InvalidPayloadError(first.rule, f"{first.path}: {first.message}")
    return edited


def apply_edit_script(
    m: DashboardModel, cmds: Sequence[EditCommand]
) -> DashboardModel:
    """Left fold of ``apply_edit``; atomic (all-or-nothing)."""
    current = m
    for index, cmd in enumerate(cmds):
        try:
            current = apply_edit(current, cmd)
        except EditError as exc:
            raise EditScriptError(index, exc) from exc
    return current


# --------------------------------------------------------------------------
# Wire encoding
# --------------------------------------------------------------------------

def command_from_wire(doc: Any) -> EditCommand:
    if not isinstance(doc, dict):
        raise InvalidPayloadError("PAYLOAD", "edit command must be an object")
    kind = doc.get("kind")
    if kind not in ALL_KINDS:
        raise InvalidPayloadError("UNKNOWN_KIND", f"unknown edit kind {kind!r}")
    target = doc.get("target")
    if target is not None and not isinstance(target, str):
        raise InvalidPayloadError("PAYLOAD", "target must be a string when present")
    payload = doc.get("payload", {})
    if not isinstance(payload, dict):
        raise InvalidPayloadError("PAYLOAD", "payload must be an object")
    return EditCommand(kind=kind, target=target, payload=payload)


def command_to_wire(cmd: EditCommand) -> dict[str, Any]:
    doc: dict[str, Any] = {"kind": cmd.kind}
    if cmd.target is not None:
        doc["target"] = cmd.target
    if cmd.payload:
        doc["payload"] = dict(cmd.payload)
    return doc


def script_from_json(text: str) -> list[EditCommand]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidPayloadError("PAYLOAD", f"invalid JSON: {exc}") from exc
    if not isinstance(doc, list):
        raise InvalidPayloadError("PAYLOAD", "edit script must be an array of commands")
    return [command_from_wire(entry) for entry in doc]


# --------------------------------------------------------------------------
# Handlers
# --------------------------------------------------------------------------

def _rename_dashboard(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    return replace(m, name=_str_field(cmd, "name"))


def _set_theme(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    raw = _str_field(cmd, "theme")
    theme = next((t for t in Theme if t.value == raw), None)
    if theme is None:
        raise InvalidPayloadError("THEME_INVALID", f"theme must be light or dark; got {raw!r}")
    return replace(m, theme=theme)


def _set_base_data_model(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    value = cmd.payload.get("baseDataModel")
    if value is not None and not isinstance(value, str):
        raise InvalidPayloadError("PAYLOAD", "baseDataModel must be a string or null")
    return replace(m, base_data_model=value)


def _switch_model(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    # Switching the active dashboard selects a different stored document;
    # it is not a mutation of this model. Clients resolve it against the
    # dashboard listing endpoint instead.
    raise IllegalEditError(
        "switchModel selects another stored dashboard; fetch it via the API "
        "instead of editing this model"
    )


def _new_page(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    name = _str_field(cmd, "name")
    page_id = cmd.payload.get("id")
    if page_id is not None and not isinstance(page_id, str):
        raise InvalidPayloadError("PAYLOAD", "page id must be a string")
    existing = {p.id for p in m.pages}
    if page_id is None:
        page_id = _fresh_id("page", existing)
    return replace(m, pages=m.pages + (Page(id=page_id, name=name),))


def _rename_page(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    page = _target_page(m, cmd)
    return _swap_page(m, replace(page, name=_str_field(cmd, "name")))


def _set_page_layout(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    # Whole-page layout assignment; explicit rectangles are authoritative
    # (no compaction), overlaps are rejected by post-validation.
    page = _target_page(m, cmd)
    layout_map = cmd.payload.get("layout")
    if not isinstance(layout_map, dict):
        raise InvalidPayloadError("PAYLOAD", "layout must map widget ids to rectangles")
    widgets = []
    for widget in page.widgets:
        if widget.id in layout_map:
            rect = layout_map[widget.id]
            if not isinstance(rect, dict) or not all(
                isinstance(rect.get(k), int) and not isinstance(rect.get(k), bool)
                for k in ("x", "y", "w", "h")
            ):
                raise InvalidPayloadError(
                    "PAYLOAD", f"rectangle for {widget.id!r} needs integer x, y, w, h"
                )
            widgets.append(replace(widget, layout=replace(
                widget.layout, x=rect["x"], y=rect["y"], w=rect["w"], h=rect["h"],
            )))
        else:
            widgets.append(widget)
    unknown = set(layout_map) - {w.id for w in page.widgets}
    if unknown:
        raise TargetNotFoundError(sorted(unknown)[0], cmd.kind)
    return _swap_page(m, replace(page, widgets=tuple(widgets)))


def _new_widget(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    page = _target_page(m, cmd)
    raw_type = _str_field(cmd, "vistype")
    vistype = next((v for v in VisType if v.value == raw_type), None)
    if vistype is None:
        raise InvalidPayloadError("VISTYPE_INVALID", f"unknown vistype {raw_type!r}")
    widget_id = cmd.payload.get("id")
    if widget_id is not None and not isinstance(widget_id, str):
        raise InvalidPayloadError("PAYLOAD", "widget id must be a string")
    existing = {w.id for p in m.pages for w in p.widgets}
    if widget_id is None:
        widget_id = _fresh_id("w", existing)
    w = cmd.payload.get("w", 4)
    h = cmd.payload.get("h", 8)
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in (w, h)):
        raise InvalidPayloadError("PAYLOAD", "w and h must be integers")
    name = cmd.payload.get("name")
    if name is not None and not isinstance(name, str):
        raise InvalidPayloadError("PAYLOAD", "name must be a string")
    title = cmd.payload.get("title")
    if title is not None and not isinstance(title, str):
        raise InvalidPayloadError("PAYLOAD", "title must be a string")
    childrenname = cmd.payload.get("childrenname")
    if childrenname is not None:
        if not isinstance(childrenname, list) or not all(isinstance(c, str) for c in childrenname):
            raise InvalidPayloadError("PAYLOAD", "childrenname must be a list of strings")
        childrenname = tuple(childrenname)
    # New widgets land at the bottom of the page, flush left.
    widget = Widget(
        id=widget_id,
        name=name,
        properties=VisProperties(vistype=vistype, title=title, childrenname=childrenname),
        layout=LayoutRect(x=0, y=layout_engine.bottom_insert_y(page), w=w, h=h),
    )
    return _swap_page(m, replace(page, widgets=page.widgets + (widget,)))


def _rename_widget(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    page, widget = _target_widget(m, cmd)
    return _swap_widget(m, page, replace(widget, name=_str_field(cmd, "name")))


def _set_vis_type(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    page, widget = _target_widget(m, cmd)
    raw = _str_field(cmd, "vistype")
    vistype = next((v for v in VisType if v.value == raw), None)
    if vistype is None:
        raise InvalidPayloadError("VISTYPE_INVALID", f"unknown vistype {raw!r}")
    props = replace(widget.properties, vistype=vistype)
    return _swap_widget(m, page, replace(widget, properties=props))


def _resize(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    page, widget = _target_widget(m, cmd)
    w = _int_field(cmd, "w")
    h = _int_field(cmd, "h")
    try:
        new_page = layout_engine.resize_widget(page, widget.id, w, h)
    except layout_engine.OutOfBoundsError as exc:
        raise InvalidPayloadError("LAYOUT_BOUNDS", str(exc)) from exc
    return _swap_page(m, new_page)


def _move(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    page, widget = _target_widget(m, cmd)
    x = _int_field(cmd, "x")
    y = _int_field(cmd, "y")
    try:
        new_page = layout_engine.move_widget(page, widget.id, x, y)
    except layout_engine.OutOfBoundsError as exc:
        raise InvalidPayloadError("LAYOUT_BOUNDS", str(exc)) from exc
    return _swap_page(m, new_page)


def _set_color(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    page, widget = _target_widget(m, cmd)
    colour = cmd.payload.get("colour")
    if not isinstance(colour, list) or not all(isinstance(c, str) for c in colour):
        raise InvalidPayloadError("PAYLOAD", "colour must be a list of hex strings")
    cfg = widget.visconfig or VisConfig()
    return _swap_widget(m, page, replace(widget, visconfig=replace(cfg, colour=tuple(colour))))


def _set_metric_id(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    page, widget = _target_widget(m, cmd)
    value = cmd.payload.get("metricId")
    if value is not None and not isinstance(value, str):
        if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
            raise InvalidPayloadError("PAYLOAD", "metricId must be a string, list, or null")
        value = tuple(value)
    return _swap_widget(m, page, replace(widget, metric_id=value))


def _set_element_layout(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    # Intra-widget element layout is limited to the legend slot and axis
    # label visibility; free-form element positioning is out of scope.
    page, widget = _target_widget(m, cmd)
    cfg = widget.visconfig or VisConfig()
    if "legendPosition" in cmd.payload:
        cfg = replace(cfg, legend_position=_legend_position(cmd.payload["legendPosition"]))
    if "axisLabelDisabled" in cmd.payload:
        cfg = replace(cfg, axis_label_disabled=_bool_value(cmd.payload["axisLabelDisabled"]))
    return _swap_widget(m, page, replace(widget, visconfig=cfg))


def _set_legend_disabled(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    page, widget = _target_widget(m, cmd)
    cfg = widget.visconfig or VisConfig()
    value = _bool_value(_required(cmd, "legendDisabled"))
    return _swap_widget(m, page, replace(widget, visconfig=replace(cfg, legend_disabled=value)))


def _set_legend_position(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    page, widget = _target_widget(m, cmd)
    cfg = widget.visconfig or VisConfig()
    value = _legend_position(_required(cmd, "legendPosition"))
    return _swap_widget(m, page, replace(widget, visconfig=replace(cfg, legend_position=value)))


def _set_baseline(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    page, widget = _target_widget(m, cmd)
    raw = _required(cmd, "baseline")
    baseline = next((b for b in Baseline if b.value == raw), None)
    if baseline is None:
        raise InvalidPayloadError(
            "BASELINE_INVALID",
            f"baseline must be one of none, movingAverage, deviation; got {raw!r}",
        )
    cfg = widget.visconfig or VisConfig()
    return _swap_widget(m, page, replace(widget, visconfig=replace(cfg, baseline=baseline)))


def _set_font_size(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    page, widget = _target_widget(m, cmd)
    value = _required(cmd, "fontSize")
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidPayloadError("FONTSIZE_INVALID", "fontSize must be a number")
    cfg = widget.visconfig or VisConfig()
    return _swap_widget(m, page, replace(widget, visconfig=replace(cfg, font_size=value)))


def _set_axis_label_disabled(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    page, widget = _target_widget(m, cmd)
    cfg = widget.visconfig or VisConfig()
    value = _bool_value(_required(cmd, "axisLabelDisabled"))
    return _swap_widget(m, page, replace(widget, visconfig=replace(cfg, axis_label_disabled=value)))


def _set_interactions(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    page, widget = _target_widget(m, cmd)
    names = cmd.payload.get("interactions")
    if not isinstance(names, list):
        raise InvalidPayloadError("PAYLOAD", "interactions must be a list of names")
    wire: dict[str, Any] = {"interactions": names}
    if cmd.payload.get("detail") is not None:
        wire["detail"] = cmd.payload["detail"]
    try:
        spec = interaction_from_wire(wire, "interaction")
    except ParseError as exc:
        raise InvalidPayloadError("PAYLOAD", str(exc)) from exc
    return _swap_widget(m, page, replace(widget, interaction=spec))


def _configure_interaction(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    page, widget = _target_widget(m, cmd)
    target = cmd.payload.get("target")
    if not isinstance(target, str):
        raise InvalidPayloadError("PAYLOAD", "detail target must be a page id string")
    raw_method = cmd.payload.get("method", "full")
    method = next((d for d in DetailMethod if d.value == raw_method), None)
    if method is None:
        raise InvalidPayloadError("PAYLOAD", f"method must be pure or full; got {raw_method!r}")
    spec = widget.interaction or InteractionSpec()
    spec = replace(spec, detail=DetailConfig(target=target, method=method))
    return _swap_widget(m, page, replace(widget, interaction=spec))


def _delete_widget(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    page, widget = _target_widget(m, cmd)
    widgets = tuple(w for w in page.widgets if w.id != widget.id)
    return _swap_page(m, replace(page, widgets=widgets))


def _delete_page(m: DashboardModel, cmd: EditCommand) -> DashboardModel:
    page = _target_page(m, cmd)
    if len(m.pages) == 1:
        raise IllegalEditError("cannot delete the last remaining page")
    return replace(m, pages=tuple(p for p in m.pages if p.id != page.id))


_HANDLERS = {
    "renameDashboard": _rename_dashboard,
    "setTheme": _set_theme,
    "setBaseDataModel": _set_base_data_model,
    "switchModel": _switch_model,
    "newPage": _new_page,
    "renamePage": _rename_page,
    "setPageLayout": _set_page_layout,
    "newWidget": _new_widget,
    "renameWidget": _rename_widget,
    "setVisType": _set_vis_type,
    "resize": _resize,
    "move": _move,
    "setColor": _set_color,
    "setMetricId": _set_metric_id,
    "setElementLayout": _set_element_layout,
    "setLegendDisabled": _set_legend_disabled,
    "setLegendPosition": _set_legend_position,
    "setBaseline": _set_baseline,
    "setFontSize": _set_font_size,
    "setAxisLabelDisabled": _set_axis_label_disabled,
    "setInteractions": _set_interactions,
    "configureInteraction": _configure_interaction,
    "deleteWidget": _delete_widget,
    "deletePage": _delete_page,
}


# --------------------------------------------------------------------------
# Target resolution and payload helpers
# --------------------------------------------------------------------------

def _target_page(m: DashboardModel, cmd: EditCommand) -> Page:
    if cmd.target is None:
        raise TargetNotFoundError(None, cmd.kind)
    page = m.page(cmd.target)
    if page is None:
        raise TargetNotFoundError(cmd.target, cmd.kind)
    return page


def _target_widget(m: DashboardModel, cmd: EditCommand) -> tuple[Page, Widget]:
    if cmd.target is None:
        raise TargetNotFoundError(None, cmd.kind)
    found = m.find_widget(cmd.target)
    if found is None:
        raise TargetNotFoundError(cmd.target, cmd.kind)
    return found


def _swap_page(m: DashboardModel, new_page: Page) -> DashboardModel:
    pages = tuple(new_page if p.id == new_page.id else p for p in m.pages)
    return replace(m, pages=pages)


def _swap_widget(m: DashboardModel, page: Page, new_widget: Widget) -> DashboardModel:
    widgets = tuple(new_widget if w.id == new_widget.id else w for w in page.widgets)
    return _swap_page(m, replace(page, widgets=widgets))


def _fresh_id(prefix: str, existing: set[str]) -> str:
    n = len(existing) + 1
    candidate = f"{prefix}-{n}"
    while candidate in existing:
        n += 1
        candidate = f"{prefix}-{n}"
    return candidate


def _required(cmd: EditCommand, key: str) -> Any:
    if key not in cmd.payload:
        raise InvalidPayloadError("PAYLOAD", f"{cmd.kind} requires payload key {key!r}")
    return cmd.payload[key]


def _str_field(cmd: EditCommand, key: str) -> str:
    value = _required(cmd, key)
    if not isinstance(value, str):
        raise InvalidPayloadError("PAYLOAD", f"{key} must be a string")
    return value


def _int_field(cmd: EditCommand, key: str) -> int:
    value = _required(cmd, key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidPayloadError("PAYLOAD", f"{key} must be an integer")
    return value


def _bool_value(value: Any) -> bool:
    if not isinstance(value, bool):
        raise InvalidPayloadError("PAYLOAD", f"expected a boolean, got {value!r}")
    return value


def _legend_position(value: Any) -> LegendPosition:
    pos = next((p for p in LegendPosition if p.value == value), None)
    if pos is None:
        raise InvalidPayloadError(
            "LEGEND_POSITION_INVALID",
            f"legendPosition must be one of top, bottom, left, right; got {value!r}",
        )
    return pos
