"""Static HTML export of a composed render tree.

One self-contained UTF-8 document: inline styles derived from the theme,
inline SVG graphics, and plain anchors for navigation. No scripts, no
external references, byte-deterministic output.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

from .compose import CELL_H, PAGE_WIDTH_PX, PlacedWidget, RenderTree
from .render import palette_for


def export_html(tree: RenderTree) -> str:
    palette = palette_for(tree.theme)
    bottom = max((p.rect.y + p.rect.h for p in tree.frame), default=CELL_H)

    head = (
        "<!DOCTYPE html>\n"
        '<html lang="en">\n<head>\n<meta charset="utf-8"/>\n'
        f"<title>{escape(tree.dashboard_title)}</title>\n"
        f"<style>\n{_styles(palette)}</style>\n</head>\n"
    )
    parts = [head, "<body>\n"]
    parts.append(f'<header class="masthead"><h1>{escape(tree.dashboard_title)}</h1></header>\n')
    if tree.mode != "pure":
        parts.append('<nav class="menu">\n')
        for entry in tree.menu:
            cls = ' class="current"' if entry.current else ""
            parts.append(f'  <a href="{escape(entry.href)}"{cls}>{escape(entry.name)}</a>\n')
        parts.append("</nav>\n")
    parts.append(
        f'<main class="page" style="width:{_px(PAGE_WIDTH_PX)};height:{_px(bottom)}">\n'
    )
    for placed in tree.frame:
        parts.append(_widget_html(placed))
    parts.append("</main>\n</body>\n</html>\n")
    return "".join(parts)


def _widget_html(placed: PlacedWidget) -> str:
    rect = placed.rect
    node = placed.node
    style = (
        f"left:{_px(rect.x)};top:{_px(rect.y)};"
        f"width:{_px(rect.w)};height:{_px(rect.h)}"
    )
    cls = "widget error" if node.error else "widget"
    out = [f'<section class="{cls}" id="widget-{escape(node.widget_id)}" style="{style}">\n']

    header_bits = []
    if node.title_text and node.vistype.value != "title":
        header_bits.append(f'<span class="widget-title">{escape(node.title_text)}</span>')
    icon_bits = []
    for icon in placed.icons:
        label = icon.interaction.value
        if icon.href:
            icon_bits.append(
                f'<a class="icon" data-interaction="{escape(label)}" '
                f'href="{escape(icon.href)}" title="{escape(label)}">{escape(icon.glyph)}</a>'
            )
        else:
            icon_bits.append(
                f'<span class="icon" data-interaction="{escape(label)}" '
                f'title="{escape(label)}">{escape(icon.glyph)}</span>'
            )
    if icon_bits:
        header_bits.append(f'<span class="icons">{"".join(icon_bits)}</span>')
    if header_bits:
        out.append(f'  <div class="widget-header">{"".join(header_bits)}</div>\n')

    out.append(f'  <div class="graphic">{node.graphic}</div>\n')

    if node.legend:
        chips = "".join(
            f'<li><span class="chip" style="background:{colour}"></span>{escape(label)}</li>'
            for label, colour in node.legend
        )
        out.append(f'  <ul class="legend legend-{node.legend_position}">{chips}</ul>\n')
    out.append("</section>\n")
    return "".join(out)


def _px(v: float) -> str:
    if v == int(v):
        return f"{int(v)}px"
    return f"{v:.2f}px"


def _styles(palette) -> str:
    return f"""\
* {{ box-sizing: border-box; margin: 0; }}
body {{
  background: {palette.background};
  color: {palette.text};
  font-family: Helvetica, Arial, sans-serif;
  padding: 16px;
}}
.masthead h1 {{ font-size: 22px; margin-bottom: 8px; }}
.menu {{ margin-bottom: 12px; }}
.menu a {{
  color: {palette.text};
  text-decoration: none;
  margin-right: 16px;
  padding: 4px 2px;
}}
.menu a.current {{ border-bottom: 2px solid {palette.axis}; font-weight: bold; }}
.page {{ position: relative; }}
.widget {{
  position: absolute;
  background: {palette.surface};
  border: 1px solid {palette.axis};
  border-radius: 6px;
  padding: 6px;
  overflow: hidden;
  display: flex;
  flex-direction: column;
}}
.widget.error {{ border-style: dashed; }}
.widget-header {{
  display: flex;
  justify-content: space-between;
  font-size: 13px;
  font-weight: bold;
  margin-bottom: 4px;
}}
.icons .icon {{ margin-left: 6px; color: {palette.axis}; text-decoration: none; }}
.graphic {{ flex: 1; min-height: 0; }}
.graphic svg {{ width: 100%; height: 100%; }}
.legend {{
  list-style: none;
  display: flex;
  flex-wrap: wrap;
  gap: 4px 10px;
  font-size: 11px;
  padding: 2px 0 0 0;
}}
.legend .chip {{
  display: inline-block;
  width: 10px;
  height: 10px;
  margin-right: 4px;
  border-radius: 2px;
}}
"""
