/**
 * Grid layout math, mirroring the server's kernel move-for-move so the
 * editor's optimistic layout always matches what the server will store.
 * Collision policy: the edited widget claims its rectangle, overlapped
 * widgets are pushed straight down in (y, x) order, then the page is
 * vertically compacted in (y, x) order.
 */

import { GRID_COLUMNS, PageWire } from "./model.js";

export type Rect = [x: number, y: number, w: number, h: number];

function intersects(ax: number, ay: number, aw: number, ah: number,
                    bx: number, by: number, bw: number, bh: number): boolean {
  return ax < bx + bw && bx < ax + aw && ay < by + bh && by < ay + ah;
}

function minFreeY(x: number, w: number, h: number, floor: number,
                  settled: Rect[]): number {
  const candidates = new Set<number>([floor]);
  for (const [, sy, , sh] of settled) {
    if (sy + sh >= floor) candidates.add(sy + sh);
  }
  for (const y of [...candidates].sort((a, b) => a - b)) {
    let free = true;
    for (const [sx, sy, sw, sh] of settled) {
      if (intersects(x, y, w, h, sx, sy, sw, sh)) {
        free = false;
        break;
      }
    }
    if (free) return y;
  }
  throw new Error("unreachable: below all settled rects is always free");
}

function byRowThenColumn(rects: Rect[]): number[] {
  return rects
    .map((_, i) => i)
    .sort((a, b) => rects[a][1] - rects[b][1] || rects[a][0] - rects[b][0]);
}

export function compactRects(rects: Rect[]): Rect[] {
  const out: Rect[] = rects.slice();
  const settled: Rect[] = [];
  for (const i of byRowThenColumn(rects)) {
    const [x, , w, h] = rects[i];
    const y = minFreeY(x, w, h, 0, settled);
    out[i] = [x, y, w, h];
    settled.push(out[i]);
  }
  return out;
}

export function pushDown(rects: Rect[], anchor: number): Rect[] {
  const out: Rect[] = rects.slice();
  const placed: Rect[] = [out[anchor]];
  const order = byRowThenColumn(rects).filter((i) => i !== anchor);
  for (const i of order) {
    let [x, y, w, h] = out[i];
    const blocked = placed.some(([sx, sy, sw, sh]) =>
      intersects(x, y, w, h, sx, sy, sw, sh));
    if (blocked) y = minFreeY(x, w, h, y, placed);
    out[i] = [x, y, w, h];
    placed.push(out[i]);
  }
  return out;
}

function pageRects(page: PageWire): Rect[] {
  return page.widgets.map((w) => [w.layout.x, w.layout.y, w.layout.w, w.layout.h]);
}

function applyRects(page: PageWire, rects: Rect[]): void {
  page.widgets.forEach((widget, i) => {
    const [x, y, w, h] = rects[i];
    widget.layout.x = x;
    widget.layout.y = y;
    widget.layout.w = w;
    widget.layout.h = h;
  });
}

/** Compact a page in place (mutates the given page object). */
export function compactPage(page: PageWire): void {
  applyRects(page, compactRects(pageRects(page)));
}

export function moveWidgetOnPage(page: PageWire, widgetId: string,
                                 newX: number, newY: number): void {
  const idx = page.widgets.findIndex((w) => w.id === widgetId);
  if (idx < 0) throw new Error(`no widget ${widgetId} on page ${page.id}`);
  const rect = page.widgets[idx].layout;
  if (newX < 0 || newY < 0 || newX + rect.w > GRID_COLUMNS) {
    throw new Error(`move out of bounds: (${newX}, ${newY})`);
  }
  const rects = pageRects(page);
  rects[idx] = [newX, newY, rect.w, rect.h];
  applyRects(page, compactRects(pushDown(rects, idx)));
}

export function resizeWidgetOnPage(page: PageWire, widgetId: string,
                                   newW: number, newH: number): void {
  const idx = page.widgets.findIndex((w) => w.id === widgetId);
  if (idx < 0) throw new Error(`no widget ${widgetId} on page ${page.id}`);
  const rect = page.widgets[idx].layout;
  if (newW < 1 || newH < 1 || rect.x + newW > GRID_COLUMNS) {
    throw new Error(`resize out of bounds: ${newW}x${newH}`);
  }
  const rects = pageRects(page);
  rects[idx] = [rect.x, rect.y, newW, newH];
  applyRects(page, compactRects(pushDown(rects, idx)));
}

/** First row below every widget on the page; where new widgets land. */
export function bottomInsertY(page: PageWire): number {
  let bottom = 0;
  for (const w of page.widgets) bottom = Math.max(bottom, w.layout.y + w.layout.h);
  return bottom;
}
