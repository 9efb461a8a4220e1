/**
 * Editor/engine parity against the real service.
 *
 * A scripted gesture sequence (add pie -> drag -> resize -> save) runs
 * through the editor session against a live server; the saved document
 * must be byte-identical to the model produced by replaying the same
 * command script through the CLI. Also exercises the 409 conflict path
 * with two concurrent sessions.
 */

import { spawn, spawnSync, ChildProcess } from "node:child_process";
import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { fileURLToPath } from "node:url";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { DashboardWire } from "../src/model.js";
import {
  CELL_H,
  CELL_W,
  addWidgetFlow,
  applyCommand,
  dragGesture,
  openDashboard,
  reloadAndReapply,
  resizeGesture,
  saveEnabled,
  saveSession,
} from "../src/session.js";

const PYTHON = process.env.DASHFORGE_PYTHON ?? "python3";
const PORT = 18500 + (process.pid % 1000);
const BASE = `http://127.0.0.1:${PORT}`;
const repoRoot = fileURLToPath(new URL("../..", import.meta.url));
const samplePath = join(repoRoot, "tests", "data", "sample_dashboard.json");

let server: ChildProcess;
let dataDir: string;
let workDir: string;
const api = new ApiClient(BASE);

async function serverReady(): Promise<void> {
  for (let attempt = 0; attempt < 100; attempt++) {
    try {
      const res = await fetch(`${BASE}/api/dashboards`);
      if (res.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 150));
  }
  throw new Error("service never became ready");
}

beforeAll(async () => {
  dataDir = mkdtempSync(join(tmpdir(), "dashforge-data-"));
  workDir = mkdtempSync(join(tmpdir(), "dashforge-work-"));
  server = spawn(
    PYTHON,
    ["-m", "dashforge.cli", "serve", "--port", String(PORT),
     "--data-dir", dataDir],
    { stdio: "ignore" },
  );
  await serverReady();
  const sample = JSON.parse(readFileSync(samplePath, "utf-8"));
  await api.createDashboard(sample);
}, 30_000);

afterAll(() => {
  server?.kill("SIGKILL");
  rmSync(dataDir, { recursive: true, force: true });
  rmSync(workDir, { recursive: true, force: true });
});

describe("editor parity with the CLI edit path", () => {
  it("saves a gesture script byte-identically to the CLI", async () => {
    const { session, tree } = await openDashboard(api, "Dashboard_Sample");
    expect(tree.menu.map((m) => m.name)).toEqual(["Sample Page"]);
    expect(tree.frame).toHaveLength(2);
    expect(session.mode).toBe("view");
    expect(session.baseRevision).toBe(0);

    session.mode = "configure";

    // Step 1-3: add a pie through the two-level form; it lands at the
    // bottom of the page.
    const widgetId = addWidgetFlow(session, {
      vistype: "pie",
      name: "Traffic Mix",
      childrenname: ["ingress", "egress", "internal"],
      colour: ["#4a7f8c", "#8f7bbf", "#c27ba0"],
      interactions: ["Zoom"],
    });
    expect(widgetId).toBe("w-3");
    const addedRect = () =>
      session.workingModel.pages[0].widgets.find((w) => w.id === widgetId)!.layout;
    expect(addedRect()).toEqual({ x: 0, y: 10, w: 4, h: 8 });

    // Step 5: drag it next to the title widget (pixel coordinates).
    dragGesture(session, widgetId, 4.4 * CELL_W, 0.2 * CELL_H);
    expect(addedRect().x).toBe(4);
    expect(addedRect().y).toBe(0);

    // Step 4: resize it via the corner handle.
    resizeGesture(session, widgetId, 6.3 * CELL_W, 6.1 * CELL_H);
    expect(session.workingModel.pages[0].widgets.at(-1)!.layout.w).toBe(6);

    expect(saveEnabled(session)).toBe(true);
    const commandScript = [...session.commandLog];

    const saved = await saveSession(api, session);
    expect(saved).toEqual({ status: "saved", revision: commandScript.length });
    expect(session.dirty).toBe(false);

    // The same commands through the CLI, starting from the same document.
    const scriptPath = join(workDir, "script.json");
    const cliOut = join(workDir, "cli-out.json");
    writeFileSync(scriptPath, JSON.stringify(commandScript, null, 2));
    const cli = spawnSync(
      PYTHON,
      ["-m", "dashforge.cli", "edit", samplePath, "--script", scriptPath,
       "-o", cliOut],
      { encoding: "utf-8" },
    );
    expect(cli.status, cli.stderr).toBe(0);

    const storedBytes = readFileSync(
      join(dataDir, "dashboards", "Dashboard_Sample.json"),
    );
    const cliBytes = readFileSync(cliOut);
    expect(storedBytes.equals(cliBytes)).toBe(true);

    // Client/engine parity: the optimistic working model equals the
    // server's stored model, revision included.
    const serverModel = await api.getDashboard("Dashboard_Sample");
    expect(session.workingModel).toEqual(serverModel);

    // And the server's render tree places the widget where the client
    // engine put it.
    const rendered = await api.getRenderTree("Dashboard_Sample", "0");
    const placed = rendered.frame.find((f) => f.widgetId === widgetId)!;
    expect(placed.rect).toEqual({
      x: 4 * CELL_W, y: 0 * CELL_H, w: 6 * CELL_W, h: 6 * CELL_H,
    });
    expect(placed.icons.map((i) => i.interaction)).toEqual(["Zoom"]);
  }, 30_000);

  it("surfaces 409 for a stale session and recovers via reload-and-reapply", async () => {
    const a = (await openDashboard(api, "Dashboard_Sample")).session;
    const b = (await openDashboard(api, "Dashboard_Sample")).session;
    expect(a.baseRevision).toBe(b.baseRevision);

    applyCommand(a, { kind: "setTheme", payload: { theme: "dark" } });
    expect(await saveSession(api, a)).toMatchObject({ status: "saved" });

    applyCommand(b, { kind: "renameDashboard", payload: { name: "B's Board" } });
    const conflict = await saveSession(api, b);
    expect(conflict.status).toBe("conflict");

    // The losing save must not have changed the store.
    const stored = await api.getDashboard("Dashboard_Sample");
    expect(stored.theme).toBe("dark");
    expect(stored.name).not.toBe("B's Board");

    // Reload-and-reapply replays B's log on the fresh base; the retry wins.
    await reloadAndReapply(api, b);
    expect(b.baseRevision).toBe(stored.revision);
    expect(b.workingModel.theme).toBe("dark");
    expect(b.workingModel.name).toBe("B's Board");
    const retried = await saveSession(api, b);
    expect(retried).toMatchObject({ status: "saved" });
    const final = await api.getDashboard("Dashboard_Sample");
    expect(final.name).toBe("B's Board");
    expect(final.theme).toBe("dark");
  }, 30_000);

  it("keeps dirty sessions from saving invalid models", async () => {
    const { session } = await openDashboard(api, "Dashboard_Sample");
    session.workingModel.pages[0].widgets[0].layout.x = 11;
    session.dirty = true;
    expect(saveEnabled(session)).toBe(false);
    await expect(saveSession(api, session)).rejects.toThrow(/does not validate/);
  });
});
