/**
 * Browser bootstrap: dashboard picker, view/configure mode switch, the
 * two-level add-widget side panel, drag/resize handlers, and save with
 * conflict recovery. All model logic lives in session.ts; this file only
 * wires DOM events to it.
 */

import { ApiClient } from "./api.js";
import { configureModeHtml, menuHtml, viewModeHtml } from "./render.js";
import {
  CELL_H,
  CELL_W,
  EditorSession,
  WidgetForm,
  addWidgetFlow,
  dragGesture,
  enterConfigureMode,
  openDashboard,
  reloadAndReapply,
  resizeGesture,
  saveEnabled,
  saveSession,
} from "./session.js";
import { VIS_TYPES, VisTypeName } from "./model.js";

const api = new ApiClient(
  (window as { DASHFORGE_API?: string }).DASHFORGE_API ?? "http://127.0.0.1:8632",
);

const el = (id: string) => document.getElementById(id) as HTMLElement;

let session: EditorSession | null = null;

async function refreshDashboardList(): Promise<void> {
  const summaries = await api.listDashboards();
  el("picker").innerHTML = summaries.map((s) =>
    `<button data-open="${s.id}">${s.name} <small>r${s.revision}</small></button>`,
  ).join("");
}

async function open(id: string): Promise<void> {
  const opened = await openDashboard(api, id);
  session = opened.session;
  el("menu").innerHTML = menuHtml(opened.tree);
  el("board").innerHTML = viewModeHtml(opened.tree);
  el("toolbar").hidden = false;
  updateChrome();
}

async function showPage(pageId: string): Promise<void> {
  if (!session) return;
  session.currentPageId = pageId;
  if (session.mode === "view") {
    const tree = await api.getRenderTree(session.dashboardId, pageId);
    el("menu").innerHTML = menuHtml(tree);
    el("board").innerHTML = viewModeHtml(tree);
  } else {
    renderConfigure();
  }
}

function renderConfigure(): void {
  if (!session) return;
  el("board").innerHTML = configureModeHtml(session.workingModel, session.currentPageId);
  attachGestures();
  updateChrome();
}

function updateChrome(): void {
  if (!session) return;
  const save = el("save") as HTMLButtonElement;
  save.disabled = !saveEnabled(session);
  el("status").textContent = session.dirty
    ? `unsaved changes (base r${session.baseRevision})`
    : `in sync (r${session.baseRevision})`;
}

// -- side panel (two-level: pick vis type, then properties) ---------------

function openTypePicker(): void {
  el("panel").innerHTML =
    "<h3>1 - Pick a visualization</h3>" +
    VIS_TYPES.map((v) => `<button data-vistype="${v}">${v}</button>`).join("");
  el("panel").hidden = false;
}

function openPropertiesForm(vistype: VisTypeName): void {
  el("panel").innerHTML = `
    <h3>2 - Configure ${vistype}</h3>
    <label>Name <input id="f-name"/></label>
    <label>Title text <input id="f-title"/></label>
    <label>Categories (comma separated) <input id="f-children"/></label>
    <label>Colours (comma separated hex) <input id="f-colours"/></label>
    <label>Interactions (comma separated) <input id="f-interactions"/></label>
    <button id="f-confirm">Add widget</button>
    <button id="f-cancel">Cancel</button>
    <p id="f-errors" class="errors"></p>`;
  el("f-confirm").onclick = () => {
    if (!session) return;
    const read = (id: string) => (el(id) as HTMLInputElement).value.trim();
    const list = (raw: string) =>
      raw ? raw.split(",").map((s) => s.trim()).filter(Boolean) : undefined;
    const form: WidgetForm = {
      vistype,
      name: read("f-name") || undefined,
      title: read("f-title") || undefined,
      childrenname: list(read("f-children")),
      colour: list(read("f-colours")),
      interactions: list(read("f-interactions")) as WidgetForm["interactions"],
    };
    try {
      addWidgetFlow(session, form);
    } catch (err) {
      el("f-errors").textContent = (err as Error).message;
      return;
    }
    el("panel").hidden = true;
    renderConfigure();
  };
  el("f-cancel").onclick = () => {
    el("panel").hidden = true;
  };
}

// -- drag / resize ----------------------------------------------------------

function attachGestures(): void {
  for (const node of document.querySelectorAll<HTMLElement>(".widget.ghost")) {
    node.onpointerdown = (down) => {
      if (!session) return;
      if ((down.target as HTMLElement).classList.contains("resize-handle")) return;
      const widgetId = node.dataset.widget as string;
      const startLeft = node.offsetLeft;
      const startTop = node.offsetTop;
      node.setPointerCapture(down.pointerId);
      const onMove = (move: PointerEvent) => {
        node.style.left = `${startLeft + move.clientX - down.clientX}px`;
        node.style.top = `${startTop + move.clientY - down.clientY}px`;
      };
      const onUp = (up: PointerEvent) => {
        node.removeEventListener("pointermove", onMove);
        node.removeEventListener("pointerup", onUp);
        dragGesture(
          session as EditorSession, widgetId,
          startLeft + up.clientX - down.clientX,
          startTop + up.clientY - down.clientY,
        );
        renderConfigure();
      };
      node.addEventListener("pointermove", onMove);
      node.addEventListener("pointerup", onUp);
    };
  }
  for (const handle of document.querySelectorAll<HTMLElement>(".resize-handle")) {
    handle.onpointerdown = (down) => {
      if (!session) return;
      down.stopPropagation();
      const widgetId = handle.dataset.widget as string;
      const box = handle.parentElement as HTMLElement;
      const startW = box.offsetWidth;
      const startH = box.offsetHeight;
      handle.setPointerCapture(down.pointerId);
      const onUp = (up: PointerEvent) => {
        handle.removeEventListener("pointerup", onUp);
        resizeGesture(
          session as EditorSession, widgetId,
          startW + up.clientX - down.clientX,
          startH + up.clientY - down.clientY,
        );
        renderConfigure();
      };
      handle.addEventListener("pointerup", onUp);
    };
  }
}

// -- save / conflict ---------------------------------------------------------

async function onSave(): Promise<void> {
  if (!session) return;
  const result = await saveSession(api, session);
  if (result.status === "conflict") {
    const reload = window.confirm(
      `Save conflict: ${result.message}\nReload the stored model and reapply your edits?`,
    );
    if (reload) {
      await reloadAndReapply(api, session);
      renderConfigure();
    }
  }
  updateChrome();
  await refreshDashboardList();
}

// -- wiring -------------------------------------------------------------------

export function start(): void {
  el("picker").addEventListener("click", (ev) => {
    const id = (ev.target as HTMLElement).closest("button")?.dataset.open;
    if (id) void open(id);
  });
  el("menu").addEventListener("click", (ev) => {
    const page = (ev.target as HTMLElement).dataset.page;
    if (page) {
      ev.preventDefault();
      void showPage(page);
    }
  });
  el("mode-view").onclick = async () => {
    if (!session) return;
    session.mode = "view";
    await showPage(session.currentPageId);
    updateChrome();
  };
  el("mode-configure").onclick = () => {
    if (!session) return;
    enterConfigureMode(session);
    renderConfigure();
  };
  el("add-widget").onclick = openTypePicker;
  el("panel").addEventListener("click", (ev) => {
    const vistype = (ev.target as HTMLElement).dataset.vistype as VisTypeName | undefined;
    if (vistype) openPropertiesForm(vistype);
  });
  el("save").onclick = () => void onSave();
  void refreshDashboardList();
}

if (typeof document !== "undefined" && document.getElementById("picker")) {
  start();
}
