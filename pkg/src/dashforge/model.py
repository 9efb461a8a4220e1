"""Document model for the dashboard language.

A dashboard is a four-level hierarchy: dashboard -> pages -> widgets ->
interactions. Models are immutable values (frozen dataclasses with tuple
collections); every operation elsewhere in the package returns new models
rather than mutating. ``parse_model`` / ``serialize_model`` convert between
the JSON wire format and the typed model, preserving unknown keys so that
documents written by newer tools survive a round trip.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Mapping

GRID_COLUMNS = 12

_HEX_COLOUR = re.compile(r"^#[0-9a-fA-F]{6}$")


class ParseError(ValueError):
    """Raised for malformed documents; ``kind`` is 'syntactic' or 'schema'."""

    def __init__(self, kind: str, path: str, message: str):
        super().__init__(f"{path or '<document>'}: {message}")
        self.kind = kind
        self.path = path
        self.message = message


class Theme(Enum):
    LIGHT = "light"
    DARK = "dark"


class VisType(Enum):
    """The visualization techniques a widget can carry.

    ``TITLE`` is the structural pseudo-type for heading widgets; the other
    18 members are chart techniques.
    """

    TITLE = "title"
    SINGLE_VALUE = "single-value"
    TABLE = "table"
    GAUGE = "gauge"
    AREA = "area"
    COLUMN = "column"
    WORD_CLOUD = "wordcloud"
    RING = "ring"
    MAP = "map"
    COMPOSITE = "composite"
    SCATTER = "scatter"
    RADIAL_TREE = "radial-tree"
    PIE = "pie"
    BAR = "bar"
    TREEMAP = "treemap"
    LINE = "line"
    BULLET = "bullet"
    SANKEY = "sankey"
    RADAR = "radar"


CHART_VIS_TYPES: tuple[VisType, ...] = tuple(
    v for v in VisType if v is not VisType.TITLE
)


class InteractionType(Enum):
    """Widget/dashboard interactions, stored on the wire as display strings."""

    FILTER = "Filter"
    ZOOM = "Zoom"
    SHARE = "Share"
    CUSTOMIZATION = "Customization"
    DETAIL_ON_DEMAND = "Detail on demand"
    REFRESH = "Refresh"
    PRINT = "Print"
    NAVIGATION = "Navigation"


def _interaction_key(name: str) -> str:
    return re.sub(r"[^a-z]", "", name.lower())


_INTERACTION_BY_KEY = {_interaction_key(i.value): i for i in InteractionType}


class LegendPosition(Enum):
    TOP = "top"
    BOTTOM = "bottom"
    LEFT = "left"
    RIGHT = "right"


class Baseline(Enum):
    NONE = "none"
    MOVING_AVERAGE = "movingAverage"
    DEVIATION = "deviation"


class DetailMethod(Enum):
    """How a detail-on-demand target page renders.

    ``PURE`` renders the target page without the navigation menu; ``FULL``
    renders it as a normal page.
    """

    PURE = "pure"
    FULL = "full"


@dataclass(frozen=True)
class LayoutRect:
    """Widget placement in grid units: 12 columns wide, unbounded rows."""

    x: int
    y: int
    w: int
    h: int
    extra: Mapping[str, Any] = field(default_factory=dict)

    def intersects(self, other: "LayoutRect") -> bool:
        return (
            self.x < other.x + other.w
            and other.x < self.x + self.w
            and self.y < other.y + other.h
            and other.y < self.y + self.h
        )


@dataclass(frozen=True)
class VisConfig:
    colour: tuple[str, ...] | None = None
    legend_disabled: bool | None = None
    legend_position: LegendPosition | None = None
    baseline: Baseline | None = None
    font_size: float | None = None
    axis_label_disabled: bool | None = None
    extra: Mapping[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class VisProperties:
    vistype: VisType
    title: str | None = None
    childrenname: tuple[str, ...] | None = None
    extra: Mapping[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class DetailConfig:
    target: str
    method: DetailMethod = DetailMethod.FULL
    extra: Mapping[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class InteractionSpec:
    interactions: tuple[InteractionType, ...] = ()
    detail: DetailConfig | None = None
    extra: Mapping[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Widget:
    id: str
    properties: VisProperties
    layout: LayoutRect
    name: str | None = None
    visconfig: VisConfig | None = None
    interaction: InteractionSpec | None = None
    metric_id: str | tuple[str, ...] | None = None
    extra: Mapping[str, Any] = field(default_factory=dict)

    @property
    def metric_ids(self) -> tuple[str, ...]:
        """Bound metric ids, normalized to a tuple (empty when unbound)."""
        if self.metric_id is None:
            return ()
        if isinstance(self.metric_id, str):
            return (self.metric_id,)
        return self.metric_id


@dataclass(frozen=True)
class Page:
    id: str
    name: str
    widgets: tuple[Widget, ...] = ()
    extra: Mapping[str, Any] = field(default_factory=dict)

    def widget(self, widget_id: str) -> Widget | None:
        for w in self.widgets:
            if w.id == widget_id:
                return w
        return None


@dataclass(frozen=True)
class DashboardModel:
    id: str
    name: str
    pages: tuple[Page, ...]
    theme: Theme = Theme.LIGHT
    base_data_model: str | None = None
    revision: int = 0
    extra: Mapping[str, Any] = field(default_factory=dict)

    def page(self, page_id: str) -> Page | None:
        for p in self.pages:
            if p.id == page_id:
                return p
        return None

    def find_widget(self, widget_id: str) -> tuple[Page, Widget] | None:
        for p in self.pages:
            w = p.widget(widget_id)
            if w is not None:
                return p, w
        return None


# --------------------------------------------------------------------------
# Parsing
# --------------------------------------------------------------------------

def parse_model(text: str) -> DashboardModel:
    """Parse a wire-format JSON document into a :class:`DashboardModel`.

    Raises :class:`ParseError` with ``kind='syntactic'`` for invalid JSON
    and ``kind='schema'`` (carrying the offending path) for type or enum
    mismatches. Unknown keys are preserved in each object's ``extra`` map.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("syntactic", "", f"invalid JSON: {exc}") from exc
    return model_from_wire(doc)


def model_from_wire(doc: Any) -> DashboardModel:
    """Build a model from an already-decoded JSON object."""
    obj = _require_object(doc, "")
    known = {"id", "name", "theme", "baseDataModel", "revision", "pages"}
    return DashboardModel(
        id=_require_str(obj, "id", ""),
        name=_require_str(obj, "name", ""),
        theme=_parse_theme(obj.get("theme", "light")),
        base_data_model=_optional_str(obj, "baseDataModel", ""),
        revision=_optional_int(obj, "revision", "", default=0),
        pages=tuple(
            _parse_page(p, f"pages[{i}]")
            for i, p in enumerate(_require_list(obj, "pages", ""))
        ),
        extra=_extras(obj, known),
    )


def _parse_theme(value: Any) -> Theme:
    if isinstance(value, str):
        for t in Theme:
            if t.value == value:
                return t
    raise ParseError("schema", "theme", f"theme must be one of light, dark; got {value!r}")


def _parse_page(doc: Any, path: str) -> Page:
    obj = _require_object(doc, path)
    known = {"id", "name", "widgets"}
    return Page(
        id=_require_str(obj, "id", path),
        name=_require_str(obj, "name", path),
        widgets=tuple(
            _parse_widget(w, f"{path}.widgets[{i}]")
            for i, w in enumerate(_require_list(obj, "widgets", path))
        ),
        extra=_extras(obj, known),
    )


def _parse_widget(doc: Any, path: str) -> Widget:
    obj = _require_object(doc, path)
    known = {"id", "name", "properties", "layout", "visconfig", "interaction", "metricId"}
    if "properties" not in obj:
        raise ParseError("schema", f"{path}.properties", "widget requires properties")
    if "layout" not in obj:
        raise ParseError("schema", f"{path}.layout", "widget requires layout")
    return Widget(
        id=_require_str(obj, "id", path),
        name=_optional_str(obj, "name", path),
        properties=_parse_properties(obj["properties"], f"{path}.properties"),
        layout=_parse_layout(obj["layout"], f"{path}.layout"),
        visconfig=_parse_visconfig(obj.get("visconfig"), f"{path}.visconfig"),
        interaction=_parse_interaction(obj.get("interaction"), f"{path}.interaction"),
        metric_id=_parse_metric_id(obj.get("metricId"), f"{path}.metricId"),
        extra=_extras(obj, known),
    )


def _parse_properties(doc: Any, path: str) -> VisProperties:
    obj = _require_object(doc, path)
    known = {"vistype", "title", "childrenname"}
    raw = _require_str(obj, "vistype", path)
    vistype = next((v for v in VisType if v.value == raw), None)
    if vistype is None:
        raise ParseError("schema", f"{path}.vistype", f"unknown vistype {raw!r}")
    childrenname = None
    if "childrenname" in obj:
        childrenname = tuple(
            _require_str_value(v, f"{path}.childrenname[{i}]")
            for i, v in enumerate(_require_list(obj, "childrenname", path))
        )
    return VisProperties(
        vistype=vistype,
        title=_optional_str(obj, "title", path),
        childrenname=childrenname,
        extra=_extras(obj, known),
    )


def _parse_layout(doc: Any, path: str) -> LayoutRect:
    obj = _require_object(doc, path)
    known = {"w", "h", "x", "y"}
    values = {}
    for key in ("w", "h", "x", "y"):
        if key not in obj:
            raise ParseError("schema", f"{path}.{key}", f"layout requires {key}")
        values[key] = _require_int_value(obj[key], f"{path}.{key}")
    return LayoutRect(
        x=values["x"], y=values["y"], w=values["w"], h=values["h"],
        extra=_extras(obj, known),
    )


def _parse_visconfig(doc: Any, path: str) -> VisConfig | None:
    if doc is None:
        return None
    obj = _require_object(doc, path)
    known = {
        "colour", "legendDisabled", "legendPosition",
        "baseline", "fontSize", "axisLabelDisabled",
    }
    colour = None
    if "colour" in obj:
        colour = tuple(
            _require_str_value(v, f"{path}.colour[{i}]")
            for i, v in enumerate(_require_list(obj, "colour", path))
        )
    return VisConfig(
        colour=colour,
        legend_disabled=_optional_bool(obj, "legendDisabled", path),
        legend_position=_optional_enum(obj, "legendPosition", LegendPosition, path),
        baseline=_optional_enum(obj, "baseline", Baseline, path),
        font_size=_optional_number(obj, "fontSize", path),
        axis_label_disabled=_optional_bool(obj, "axisLabelDisabled", path),
        extra=_extras(obj, known),
    )


def _parse_interaction(doc: Any, path: str) -> InteractionSpec | None:
    if doc is None:
        return None
    obj = _require_object(doc, path)
    known = {"interactions", "detail"}
    names = _require_list(obj, "interactions", path)
    seen: list[InteractionType] = []
    for i, raw in enumerate(names):
        name = _require_str_value(raw, f"{path}.interactions[{i}]")
        itype = _INTERACTION_BY_KEY.get(_interaction_key(name))
        if itype is None:
            raise ParseError(
                "schema", f"{path}.interactions[{i}]",
                f"unknown interaction {name!r}",
            )
        if itype not in seen:
            seen.append(itype)
    detail = None
    if obj.get("detail") is not None:
        dobj = _require_object(obj["detail"], f"{path}.detail")
        dknown = {"target", "method"}
        method = DetailMethod.FULL
        if "method" in dobj:
            raw_method = _require_str_value(dobj["method"], f"{path}.detail.method")
            method = next((m for m in DetailMethod if m.value == raw_method), None)
            if method is None:
                raise ParseError(
                    "schema", f"{path}.detail.method",
                    f"method must be pure or full; got {raw_method!r}",
                )
        detail = DetailConfig(
            target=_require_str(dobj, "target", f"{path}.detail"),
            method=method,
            extra=_extras(dobj, dknown),
        )
    return InteractionSpec(
        interactions=tuple(seen), detail=detail, extra=_extras(obj, known)
    )


def interaction_from_wire(doc: Any, path: str = "interaction") -> InteractionSpec | None:
    """Public entry point for parsing a bare interaction object."""
    return _parse_interaction(doc, path)


def _parse_metric_id(value: Any, path: str) -> str | tuple[str, ...] | None:
    if value is None:
        return None
    if isinstance(value, str):
        return value
    if isinstance(value, list):
        return tuple(
            _require_str_value(v, f"{path}[{i}]") for i, v in enumerate(value)
        )
    raise ParseError("schema", path, "metricId must be a string or list of strings")


def _require_object(value: Any, path: str) -> dict:
    if not isinstance(value, dict):
        raise ParseError("schema", path, f"expected object, got {type(value).__name__}")
    return value


def _require_list(obj: dict, key: str, path: str) -> list:
    value = obj.get(key)
    if not isinstance(value, list):
        raise ParseError(
            "schema", f"{path}.{key}" if path else key,
            f"expected array, got {type(value).__name__}",
        )
    return value


def _require_str(obj: dict, key: str, path: str) -> str:
    full = f"{path}.{key}" if path else key
    if key not in obj:
        raise ParseError("schema", full, f"missing required key {key!r}")
    return _require_str_value(obj[key], full)


def _require_str_value(value: Any, path: str) -> str:
    if not isinstance(value, str):
        raise ParseError("schema", path, f"expected string, got {type(value).__name__}")
    return value


def _require_int_value(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError("schema", path, f"expected integer, got {value!r}")
    return value


def _optional_str(obj: dict, key: str, path: str) -> str | None:
    if obj.get(key) is None:
        return None
    return _require_str_value(obj[key], f"{path}.{key}" if path else key)


def _optional_int(obj: dict, key: str, path: str, default: int) -> int:
    if obj.get(key) is None:
        return default
    return _require_int_value(obj[key], f"{path}.{key}" if path else key)


def _optional_bool(obj: dict, key: str, path: str) -> bool | None:
    value = obj.get(key)
    if value is None:
        return None
    if not isinstance(value, bool):
        raise ParseError("schema", f"{path}.{key}", f"expected boolean, got {value!r}")
    return value


def _optional_number(obj: dict, key: str, path: str) -> float | None:
    value = obj.get(key)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError("schema", f"{path}.{key}", f"expected number, got {value!r}")
    return value


def _optional_enum(obj: dict, key: str, enum_cls: type, path: str):
    value = obj.get(key)
    if value is None:
        return None
    for member in enum_cls:
        if member.value == value:
            return member
    allowed = ", ".join(m.value for m in enum_cls)
    raise ParseError("schema", f"{path}.{key}", f"expected one of {allowed}; got {value!r}")


def _extras(obj: dict, known: set[str]) -> dict[str, Any]:
    return {k: obj[k] for k in obj if k not in known}


# --------------------------------------------------------------------------
# Serialization
# --------------------------------------------------------------------------

def serialize_model(m: DashboardModel) -> str:
    """Serialize to the canonical wire form.

    Keys are emitted in a fixed order (extension keys last, sorted), with
    two-space indentation and a trailing newline, so output is
    byte-deterministic and diff-friendly.
    """
    return json.dumps(model_to_wire(m), indent=2, ensure_ascii=False) + "\n"


def model_to_wire(m: DashboardModel) -> dict[str, Any]:
    doc: dict[str, Any] = {"id": m.id, "name": m.name, "theme": m.theme.value}
    if m.base_data_model is not None:
        doc["baseDataModel"] = m.base_data_model
    doc["revision"] = m.revision
    doc["pages"] = [_page_to_wire(p) for p in m.pages]
    _append_extras(doc, m.extra)
    return doc


def _page_to_wire(p: Page) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "id": p.id,
        "name": p.name,
        "widgets": [_widget_to_wire(w) for w in p.widgets],
    }
    _append_extras(doc, p.extra)
    return doc


def _widget_to_wire(w: Widget) -> dict[str, Any]:
    doc: dict[str, Any] = {"id": w.id}
    if w.name is not None:
        doc["name"] = w.name
    props: dict[str, Any] = {"vistype": w.properties.vistype.value}
    if w.properties.title is not None:
        props["title"] = w.properties.title
    if w.properties.childrenname is not None:
        props["childrenname"] = list(w.properties.childrenname)
    _append_extras(props, w.properties.extra)
    doc["properties"] = props
    layout = {"w": w.layout.w, "h": w.layout.h, "x": w.layout.x, "y": w.layout.y}
    _append_extras(layout, w.layout.extra)
    doc["layout"] = layout
    if w.visconfig is not None:
        doc["visconfig"] = _visconfig_to_wire(w.visconfig)
    if w.interaction is not None:
        doc["interaction"] = _interaction_to_wire(w.interaction)
    if w.metric_id is not None:
        doc["metricId"] = (
            w.metric_id if isinstance(w.metric_id, str) else list(w.metric_id)
        )
    _append_extras(doc, w.extra)
    return doc


def _visconfig_to_wire(c: VisConfig) -> dict[str, Any]:
    doc: dict[str, Any] = {}
    if c.colour is not None:
        doc["colour"] = list(c.colour)
    if c.legend_disabled is not None:
        doc["legendDisabled"] = c.legend_disabled
    if c.legend_position is not None:
        doc["legendPosition"] = c.legend_position.value
    if c.baseline is not None:
        doc["baseline"] = c.baseline.value
    if c.font_size is not None:
        doc["fontSize"] = c.font_size
    if c.axis_label_disabled is not None:
        doc["axisLabelDisabled"] = c.axis_label_disabled
    _append_extras(doc, c.extra)
    return doc


def _interaction_to_wire(spec: InteractionSpec) -> dict[str, Any]:
    doc: dict[str, Any] = {"interactions": [i.value for i in spec.interactions]}
    if spec.detail is not None:
        detail = {"target": spec.detail.target, "method": spec.detail.method.value}
        _append_extras(detail, spec.detail.extra)
        doc["detail"] = detail
    _append_extras(doc, spec.extra)
    return doc


def _append_extras(doc: dict[str, Any], extra: Mapping[str, Any]) -> None:
    for key in sorted(extra):
        doc[key] = extra[key]


def is_valid_colour(value: str) -> bool:
    return bool(_HEX_COLOUR.match(value))
