import { readFileSync } from "node:fs";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import { applyEdit, applyEditScript, EditApplyError, freshId } from "../src/edits.js";
import { DashboardWire, clone, validateModel } from "../src/model.js";

const samplePath = fileURLToPath(
  new URL("../../tests/data/sample_dashboard.json", import.meta.url),
);

function sample(): DashboardWire {
  const doc = JSON.parse(readFileSync(samplePath, "utf-8")) as DashboardWire;
  doc.revision = doc.revision ?? 0;
  return doc;
}

describe("validateModel mirror", () => {
  it("accepts the sample dashboard", () => {
    expect(validateModel(sample())).toEqual([]);
  });

  it("flags overlaps with the server's rule id", () => {
    const model = sample();
    model.pages[0].widgets[1].layout = { w: 4, h: 2, x: 0, y: 0 };
    const rules = validateModel(model).map((v) => v.rule);
    expect(rules).toEqual(["OVERLAP"]);
  });

  it("flags grid overflow", () => {
    const model = sample();
    model.pages[0].widgets[0].layout.x = 9;
    expect(validateModel(model).map((v) => v.rule)).toEqual(["LAYOUT_OVERFLOW"]);
  });

  it("flags dangling detail targets", () => {
    const model = sample();
    model.pages[0].widgets[1].interaction!.detail!.target = "99";
    expect(validateModel(model).map((v) => v.rule)).toEqual(["DANGLING_TARGET"]);
  });

  it("flags bad colours and font sizes", () => {
    const model = sample();
    model.pages[0].widgets[1].visconfig!.colour = ["#12345"];
    model.pages[0].widgets[0].visconfig = { fontSize: 0 };
    const rules = validateModel(model).map((v) => v.rule).sort();
    expect(rules).toEqual(["COLOUR_FORMAT", "FONTSIZE_INVALID"]);
  });
});

describe("applyEdit mirror", () => {
  it("new widgets land at the page bottom with 4x8 defaults", () => {
    const out = applyEdit(sample(), {
      kind: "newWidget", target: "0", payload: { vistype: "bar" },
    });
    const added = out.pages[0].widgets.at(-1)!;
    expect(added.layout).toEqual({ x: 0, y: 10, w: 4, h: 8 });
    expect(added.id).toBe("w-3");
    expect(out.revision).toBe(1);
  });

  it("does not mutate its input", () => {
    const model = sample();
    const snapshot = clone(model);
    applyEdit(model, { kind: "setTheme", payload: { theme: "dark" } });
    expect(model).toEqual(snapshot);
  });

  it("moves push neighbours down then compact", () => {
    const out = applyEdit(sample(), {
      kind: "move", target: "p0-i0", payload: { x: 0, y: 2 },
    });
    const rects = out.pages[0].widgets.map((w) => w.layout);
    // Title claims the pie's rows; the pie is pushed below, then the pair
    // compacts so the page stays gap-free.
    expect(rects[0]).toEqual({ x: 0, y: 0, w: 4, h: 2 });
    expect(rects[1]).toEqual({ x: 0, y: 2, w: 4, h: 8 });
  });

  it("normalizes interaction names like the server", () => {
    const out = applyEdit(sample(), {
      kind: "setInteractions", target: "p0-i0",
      payload: { interactions: ["zoom", "REFRESH", "zoom"] },
    });
    expect(out.pages[0].widgets[0].interaction).toEqual({
      interactions: ["Zoom", "Refresh"],
    });
  });

  it("rejects edits that would invalidate the model", () => {
    expect(() => applyEdit(sample(), {
      kind: "setColor", target: "p0-i1", payload: { colour: ["red"] },
    })).toThrowError(EditApplyError);
    expect(() => applyEdit(sample(), {
      kind: "deletePage", target: "0", payload: {},
    })).toThrowError(/last remaining page/);
  });

  it("folds scripts with per-command revision bumps", () => {
    const out = applyEditScript(sample(), [
      { kind: "setTheme", payload: { theme: "dark" } },
      { kind: "newWidget", target: "0", payload: { vistype: "line", id: "ln" } },
      { kind: "resize", target: "ln", payload: { w: 12, h: 4 } },
    ]);
    expect(out.revision).toBe(3);
    expect(out.theme).toBe("dark");
  });
});

describe("freshId", () => {
  it("matches the server allocator", () => {
    expect(freshId("w", new Set(["a", "b"]))).toBe("w-3");
    expect(freshId("w", new Set(["w-3", "x"]))).toBe("w-4");
    expect(freshId("page", new Set())).toBe("page-1");
  });
});
