import { describe, expect, it } from "vitest";

import {
  Rect,
  bottomInsertY,
  compactRects,
  pushDown,
} from "../src/layout.js";

// These cases are frozen against the server engine's unit tests; the two
// implementations must stay in lockstep (the parity suite checks the full
// pipeline end to end).

describe("compactRects", () => {
  it("drops a single rect to the top", () => {
    expect(compactRects([[0, 5, 4, 2]])).toEqual([[0, 0, 4, 2]]);
  });

  it("leaves a gap-free page unchanged", () => {
    const rects: Rect[] = [[0, 0, 4, 2], [0, 2, 4, 8]];
    expect(compactRects(rects)).toEqual(rects);
  });

  it("closes a vertical gap below a blocker", () => {
    expect(compactRects([[0, 0, 4, 2], [0, 6, 4, 2]]))
      .toEqual([[0, 0, 4, 2], [0, 2, 4, 2]]);
  });

  it("is idempotent", () => {
    const rects: Rect[] = [[0, 9, 2, 1], [4, 3, 2, 1], [8, 0, 2, 1], [0, 2, 3, 4]];
    const once = compactRects(rects);
    expect(compactRects(once)).toEqual(once);
  });

  it("settles in (y, x) order", () => {
    const rects: Rect[] = [[0, 9, 2, 1], [4, 3, 2, 1], [8, 0, 2, 1]];
    expect(compactRects(rects)).toEqual([[0, 0, 2, 1], [4, 0, 2, 1], [8, 0, 2, 1]]);
  });
});

describe("pushDown", () => {
  it("keeps non-colliding rects in place", () => {
    const rects: Rect[] = [[0, 0, 4, 2], [4, 0, 4, 2]];
    expect(pushDown(rects, 0)).toEqual(rects);
  });

  it("pushes an overlapped rect below the anchor", () => {
    const out = pushDown([[0, 2, 4, 2], [0, 2, 4, 2]], 0);
    expect(out[0]).toEqual([0, 2, 4, 2]);
    expect(out[1]).toEqual([0, 4, 4, 2]);
  });

  it("cascades through stacked rects", () => {
    const out = pushDown([[0, 0, 4, 4], [0, 2, 4, 2], [0, 4, 4, 2]], 0);
    expect(out[0]).toEqual([0, 0, 4, 4]);
    // No pair overlaps afterwards.
    for (let i = 0; i < out.length; i++) {
      for (let j = i + 1; j < out.length; j++) {
        const [ax, ay, aw, ah] = out[i];
        const [bx, by, bw, bh] = out[j];
        const overlap = ax < bx + bw && bx < ax + aw && ay < by + bh && by < ay + ah;
        expect(overlap).toBe(false);
      }
    }
  });
});

describe("bottomInsertY", () => {
  it("is zero on an empty page", () => {
    expect(bottomInsertY({ id: "0", name: "P", widgets: [] })).toBe(0);
  });

  it("is the first free row under the lowest widget", () => {
    const page = {
      id: "0", name: "P",
      widgets: [
        { id: "a", properties: { vistype: "title" as const }, layout: { x: 0, y: 0, w: 4, h: 2 } },
        { id: "b", properties: { vistype: "pie" as const }, layout: { x: 0, y: 2, w: 4, h: 8 } },
      ],
    };
    expect(bottomInsertY(page)).toBe(10);
  });
});
