/**
 * HTML generation for both editor modes.
 *
 * View mode renders the server's render tree verbatim (one source of
 * truth: the service). Configure mode renders grid boxes straight from
 * the working model so drags and resizes reflect the client engine.
 */

import { RenderTreeWire } from "./api.js";
import { DashboardWire, PageWire } from "./model.js";
import { CELL_H, CELL_W } from "./session.js";

const esc = (s: string) =>
  s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;")
   .replace(/"/g, "&quot;");

export function viewModeHtml(tree: RenderTreeWire): string {
  const parts: string[] = [];
  let bottom = CELL_H;
  for (const entry of tree.frame) {
    bottom = Math.max(bottom, entry.rect.y + entry.rect.h);
  }
  parts.push(
    `<div class="page theme-${esc(tree.theme)}" style="width:1200px;height:${bottom}px">`,
  );
  for (const entry of tree.frame) {
    const style = `left:${entry.rect.x}px;top:${entry.rect.y}px;` +
      `width:${entry.rect.w}px;height:${entry.rect.h}px`;
    const cls = entry.error ? "widget error" : "widget";
    parts.push(`<section class="${cls}" data-widget="${esc(entry.widgetId)}" style="${style}">`);
    const icons = entry.icons.map((icon) =>
      icon.href
        ? `<a class="icon" data-interaction="${esc(icon.interaction)}" href="${esc(icon.href)}">${esc(icon.glyph)}</a>`
        : `<span class="icon" data-interaction="${esc(icon.interaction)}">${esc(icon.glyph)}</span>`,
    ).join("");
    if (entry.title || icons) {
      parts.push(
        `<div class="widget-header"><span class="widget-title">${esc(entry.title ?? "")}</span>` +
        `<span class="icons">${icons}</span></div>`,
      );
    }
    parts.push(`<div class="graphic">${entry.graphic}</div>`);
    if (entry.legend && entry.legend.length) {
      const chips = entry.legend.map((l) =>
        `<li><span class="chip" style="background:${esc(l.colour)}"></span>${esc(l.label)}</li>`,
      ).join("");
      parts.push(`<ul class="legend">${chips}</ul>`);
    }
    parts.push("</section>");
  }
  parts.push("</div>");
  return parts.join("");
}

export function menuHtml(tree: RenderTreeWire): string {
  return tree.menu.map((entry) =>
    `<a href="#${esc(entry.pageId)}" data-page="${esc(entry.pageId)}"` +
    `${entry.current ? ' class="current"' : ""}>${esc(entry.name)}</a>`,
  ).join("");
}

export function configureModeHtml(model: DashboardWire, pageId: string): string {
  const page = model.pages.find((p) => p.id === pageId) as PageWire;
  let rows = 4;
  for (const w of page.widgets) rows = Math.max(rows, w.layout.y + w.layout.h);
  const parts: string[] = [
    `<div class="page grid theme-${esc(model.theme)}" ` +
    `style="width:${12 * CELL_W}px;height:${rows * CELL_H}px">`,
  ];
  for (const widget of page.widgets) {
    const rect = widget.layout;
    const style = `left:${rect.x * CELL_W}px;top:${rect.y * CELL_H}px;` +
      `width:${rect.w * CELL_W}px;height:${rect.h * CELL_H}px`;
    const label = widget.name ?? widget.properties.title ?? widget.id;
    parts.push(
      `<section class="widget ghost" data-widget="${esc(widget.id)}" style="${style}">` +
      `<div class="widget-header"><span class="widget-title">${esc(label)}</span>` +
      `<span class="vistype">${esc(widget.properties.vistype)}</span></div>` +
      `<div class="resize-handle" data-widget="${esc(widget.id)}" title="drag to resize"></div>` +
      "</section>",
    );
  }
  parts.push("</div>");
  return parts.join("");
}
