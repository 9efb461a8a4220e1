/**
 * Editor session: the GUI customization loop.
 *
 * Commands apply optimistically to the working model (exact engine
 * parity with the server) and accumulate in a log; saving replays the
 * log through the edits endpoint under revision compare-and-set, so the
 * stored model — revision counter included — is identical to applying
 * the same script server-side. A stale base revision surfaces as a
 * conflict on the first replayed command, leaving the store untouched;
 * reload-and-reapply refetches and replays the log on the fresh model.
 */

import { ApiClient, ConflictError, RenderTreeWire } from "./api.js";
import { EditCommandWire, applyEdit, applyEditScript, freshId } from "./edits.js";
import {
  DashboardWire,
  GRID_COLUMNS,
  InteractionName,
  VisTypeName,
  allWidgetIds,
  clone,
  findWidget,
  validateModel,
} from "./model.js";

export type EditorMode = "view" | "configure";

export interface EditorSession {
  dashboardId: string;
  workingModel: DashboardWire;
  baseRevision: number;
  dirty: boolean;
  mode: EditorMode;
  currentPageId: string;
  commandLog: EditCommandWire[];
}

export interface WidgetForm {
  vistype: VisTypeName;
  name?: string;
  title?: string;
  childrenname?: string[];
  colour?: string[];
  fontSize?: number;
  interactions?: InteractionName[];
  detail?: { target: string; method: "pure" | "full" };
}

export const CELL_W = 100;
export const CELL_H = 40;

export async function openDashboard(
  api: ApiClient, id: string,
): Promise<{ session: EditorSession; tree: RenderTreeWire }> {
  const model = await api.getDashboard(id);
  const tree = await api.getRenderTree(id, model.pages[0].id);
  return {
    session: {
      dashboardId: id,
      workingModel: model,
      baseRevision: model.revision,
      dirty: false,
      mode: "view",
      currentPageId: model.pages[0].id,
      commandLog: [],
    },
    tree,
  };
}

export function enterConfigureMode(session: EditorSession): void {
  session.mode = "configure";
}

export function saveEnabled(session: EditorSession): boolean {
  return session.dirty && validateModel(session.workingModel).length === 0;
}

function record(session: EditorSession, command: EditCommandWire): void {
  session.workingModel = applyEdit(session.workingModel, command);
  session.commandLog.push(command);
  session.dirty = true;
}

/** Validate a widget form before any command is built (mirrors Step 2-3). */
export function widgetFormErrors(form: WidgetForm): string[] {
  const errors: string[] = [];
  if (form.fontSize !== undefined && !(form.fontSize > 0)) {
    errors.push("font size must be greater than zero");
  }
  if ((form.vistype === "pie" || form.vistype === "ring")
      && form.childrenname !== undefined && form.childrenname.length === 0) {
    errors.push("pie and ring need at least one category");
  }
  for (const colour of form.colour ?? []) {
    if (!/^#[0-9a-fA-F]{6}$/.test(colour)) errors.push(`bad colour ${colour}`);
  }
  if (form.interactions?.includes("Detail on demand") && !form.detail) {
    errors.push("Detail on demand needs a target page");
  }
  return errors;
}

/**
 * Two-step add-widget flow: vis type was picked in the first panel, the
 * property/interaction form is confirmed here. The new widget lands at
 * the bottom of the current page. Returns its id.
 */
export function addWidgetFlow(session: EditorSession, form: WidgetForm): string {
  const errors = widgetFormErrors(form);
  if (errors.length) throw new Error(errors.join("; "));
  const widgetId = freshId("w", allWidgetIds(session.workingModel));
  const payload: Record<string, unknown> = { id: widgetId, vistype: form.vistype };
  if (form.name !== undefined) payload.name = form.name;
  if (form.title !== undefined) payload.title = form.title;
  if (form.childrenname !== undefined) payload.childrenname = form.childrenname;
  record(session, {
    kind: "newWidget", target: session.currentPageId, payload,
  });
  if (form.colour) {
    record(session, {
      kind: "setColor", target: widgetId, payload: { colour: form.colour },
    });
  }
  if (form.fontSize !== undefined) {
    record(session, {
      kind: "setFontSize", target: widgetId, payload: { fontSize: form.fontSize },
    });
  }
  if (form.interactions) {
    const payload: Record<string, unknown> = { interactions: form.interactions };
    if (form.detail) payload.detail = form.detail;
    record(session, { kind: "setInteractions", target: widgetId, payload });
  }
  return widgetId;
}

function quantize(px: number, cell: number): number {
  return Math.round(px / cell);
}

const clamp = (v: number, lo: number, hi: number) => Math.min(hi, Math.max(lo, v));

/**
 * Drag gesture: pixel position of the widget's top-left corner, quantized
 * to grid units and clamped into the grid; identical positions are a
 * no-op. The optimistic layout equals the server's push-down-then-compact
 * result.
 */
export function dragGesture(
  session: EditorSession, widgetId: string, pixelX: number, pixelY: number,
): void {
  const found = findWidget(session.workingModel, widgetId);
  if (!found) throw new Error(`no widget ${widgetId}`);
  const rect = found.widget.layout;
  const x = clamp(quantize(pixelX, CELL_W), 0, GRID_COLUMNS - rect.w);
  const y = Math.max(0, quantize(pixelY, CELL_H));
  if (x === rect.x && y === rect.y) return;
  record(session, { kind: "move", target: widgetId, payload: { x, y } });
}

/** Resize gesture: pixel extent quantized and clamped (minimum 1x1). */
export function resizeGesture(
  session: EditorSession, widgetId: string, pixelW: number, pixelH: number,
): void {
  const found = findWidget(session.workingModel, widgetId);
  if (!found) throw new Error(`no widget ${widgetId}`);
  const rect = found.widget.layout;
  const w = clamp(quantize(pixelW, CELL_W), 1, GRID_COLUMNS - rect.x);
  const h = Math.max(1, quantize(pixelH, CELL_H));
  if (w === rect.w && h === rect.h) return;
  record(session, { kind: "resize", target: widgetId, payload: { w, h } });
}

export function applyCommand(session: EditorSession, command: EditCommandWire): void {
  record(session, command);
}

export type SaveResult =
  | { status: "clean" }
  | { status: "saved"; revision: number }
  | { status: "conflict"; message: string; storedRevision?: number };

export async function saveSession(
  api: ApiClient, session: EditorSession,
): Promise<SaveResult> {
  if (!session.dirty) return { status: "clean" };
  if (!saveEnabled(session)) {
    throw new Error("working model does not validate; refusing to save");
  }
  let revision = session.baseRevision;
  for (const command of session.commandLog) {
    try {
      const res = await api.postEdit(session.dashboardId, command, revision);
      revision = res.revision;
    } catch (err) {
      if (err instanceof ConflictError) {
        return {
          status: "conflict",
          message: err.message,
          storedRevision: err.storedRevision,
        };
      }
      throw err;
    }
  }
  session.baseRevision = revision;
  session.workingModel.revision = revision;
  session.commandLog = [];
  session.dirty = false;
  return { status: "saved", revision };
}

/**
 * Conflict recovery: refetch the stored model and replay the local
 * command log onto it. The log is kept so the next save retries from the
 * fresh base revision.
 */
export async function reloadAndReapply(
  api: ApiClient, session: EditorSession,
): Promise<void> {
  const fresh = await api.getDashboard(session.dashboardId);
  session.baseRevision = fresh.revision;
  session.workingModel = applyEditScript(clone(fresh), session.commandLog);
  session.dirty = session.commandLog.length > 0;
}
