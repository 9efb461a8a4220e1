/**
 * Edit commands, mirroring the server's transformations so the editor can
 * apply them optimistically and land on exactly the model the server will
 * produce when the command log is replayed at save time.
 */

import {
  bottomInsertY,
  compactPage,
  moveWidgetOnPage,
  resizeWidgetOnPage,
} from "./layout.js";
import {
  DashboardWire,
  VisTypeName,
  allWidgetIds,
  clone,
  findPage,
  findWidget,
  normalizeInteraction,
  validateModel,
} from "./model.js";

export interface EditCommandWire {
  kind: string;
  target?: string;
  payload?: Record<string, unknown>;
}

export class EditApplyError extends Error {
  constructor(message: string, readonly rule?: string) {
    super(message);
  }
}

/** Deterministic fresh id: mirrors the server's allocator exactly. */
export function freshId(prefix: string, existing: Set<string>): string {
  let n = existing.size + 1;
  let candidate = `${prefix}-${n}`;
  while (existing.has(candidate)) {
    n += 1;
    candidate = `${prefix}-${n}`;
  }
  return candidate;
}

/** Apply one command, returning a new model with the revision bumped. */
export function applyEdit(model: DashboardWire, cmd: EditCommandWire): DashboardWire {
  const next = clone(model);
  const payload = cmd.payload ?? {};
  const widgetRef = () => {
    if (!cmd.target) throw new EditApplyError(`edit ${cmd.kind}: no target`);
    const found = findWidget(next, cmd.target);
    if (!found) throw new EditApplyError(`edit ${cmd.kind}: no widget ${cmd.target}`);
    return found;
  };
  const pageRef = () => {
    if (!cmd.target) throw new EditApplyError(`edit ${cmd.kind}: no target`);
    const page = findPage(next, cmd.target);
    if (!page) throw new EditApplyError(`edit ${cmd.kind}: no page ${cmd.target}`);
    return page;
  };

  switch (cmd.kind) {
    case "renameDashboard":
      next.name = payload.name as string;
      break;
    case "setTheme": {
      const theme = payload.theme;
      if (theme !== "light" && theme !== "dark") {
        throw new EditApplyError(`theme must be light or dark`, "THEME_INVALID");
      }
      next.theme = theme;
      break;
    }
    case "setBaseDataModel":
      if (payload.baseDataModel == null) delete next.baseDataModel;
      else next.baseDataModel = payload.baseDataModel as string;
      break;
    case "newPage": {
      const existing = new Set(next.pages.map((p) => p.id));
      const id = (payload.id as string | undefined) ?? freshId("page", existing);
      next.pages.push({ id, name: payload.name as string, widgets: [] });
      break;
    }
    case "renamePage":
      pageRef().name = payload.name as string;
      break;
    case "newWidget": {
      const page = pageRef();
      const vistype = payload.vistype as VisTypeName;
      const id = (payload.id as string | undefined) ?? freshId("w", allWidgetIds(next));
      const widget: Record<string, unknown> = { id };
      if (payload.name !== undefined) widget.name = payload.name;
      const properties: Record<string, unknown> = { vistype };
      if (payload.title !== undefined) properties.title = payload.title;
      if (payload.childrenname !== undefined) properties.childrenname = payload.childrenname;
      widget.properties = properties;
      widget.layout = {
        x: 0,
        y: bottomInsertY(page),
        w: (payload.w as number | undefined) ?? 4,
        h: (payload.h as number | undefined) ?? 8,
      };
      page.widgets.push(widget as never);
      break;
    }
    case "renameWidget":
      widgetRef().widget.name = payload.name as string;
      break;
    case "setVisType":
      widgetRef().widget.properties.vistype = payload.vistype as VisTypeName;
      break;
    case "move": {
      const { page } = widgetRef();
      moveWidgetOnPage(page, cmd.target!, payload.x as number, payload.y as number);
      break;
    }
    case "resize": {
      const { page } = widgetRef();
      resizeWidgetOnPage(page, cmd.target!, payload.w as number, payload.h as number);
      break;
    }
    case "setColor": {
      const { widget } = widgetRef();
      widget.visconfig = { ...(widget.visconfig ?? {}), colour: payload.colour as string[] };
      break;
    }
    case "setMetricId": {
      const { widget } = widgetRef();
      if (payload.metricId == null) delete widget.metricId;
      else widget.metricId = payload.metricId as string | string[];
      break;
    }
    case "setLegendDisabled": {
      const { widget } = widgetRef();
      widget.visconfig = {
        ...(widget.visconfig ?? {}),
        legendDisabled: payload.legendDisabled as boolean,
      };
      break;
    }
    case "setLegendPosition": {
      const { widget } = widgetRef();
      widget.visconfig = {
        ...(widget.visconfig ?? {}),
        legendPosition: payload.legendPosition as never,
      };
      break;
    }
    case "setBaseline": {
      const { widget } = widgetRef();
      widget.visconfig = { ...(widget.visconfig ?? {}), baseline: payload.baseline as never };
      break;
    }
    case "setFontSize": {
      const { widget } = widgetRef();
      widget.visconfig = { ...(widget.visconfig ?? {}), fontSize: payload.fontSize as number };
      break;
    }
    case "setAxisLabelDisabled": {
      const { widget } = widgetRef();
      widget.visconfig = {
        ...(widget.visconfig ?? {}),
        axisLabelDisabled: payload.axisLabelDisabled as boolean,
      };
      break;
    }
    case "setInteractions": {
      const { widget } = widgetRef();
      // Mirror the server: case-insensitive names normalize to canonical
      // strings, duplicates collapse keeping first occurrence order.
      const seen: string[] = [];
      for (const raw of payload.interactions as string[]) {
        const canonical = normalizeInteraction(raw);
        if (!canonical) throw new EditApplyError(`unknown interaction ${raw}`);
        if (!seen.includes(canonical)) seen.push(canonical);
      }
      const interaction: Record<string, unknown> = { interactions: seen };
      if (payload.detail != null) {
        const raw = payload.detail as { target: string; method?: "pure" | "full" };
        interaction.detail = { target: raw.target, method: raw.method ?? "full" };
      }
      widget.interaction = interaction as never;
      break;
    }
    case "configureInteraction": {
      const { widget } = widgetRef();
      const detail = {
        target: payload.target as string,
        method: (payload.method as "pure" | "full" | undefined) ?? "full",
      };
      widget.interaction = { interactions: [], ...(widget.interaction ?? {}), detail };
      break;
    }
    case "deleteWidget": {
      const { page, widget } = widgetRef();
      page.widgets = page.widgets.filter((w) => w.id !== widget.id);
      break;
    }
    case "deletePage": {
      const page = pageRef();
      if (next.pages.length === 1) {
        throw new EditApplyError("cannot delete the last remaining page");
      }
      next.pages = next.pages.filter((p) => p.id !== page.id);
      break;
    }
    default:
      throw new EditApplyError(`unknown edit kind ${cmd.kind}`, "UNKNOWN_KIND");
  }

  next.revision = (model.revision ?? 0) + 1;
  const violations = validateModel(next);
  if (violations.length) {
    const v = violations[0];
    throw new EditApplyError(`${v.path}: ${v.message}`, v.rule);
  }
  return next;
}

export function applyEditScript(
  model: DashboardWire, commands: EditCommandWire[],
): DashboardWire {
  let current = model;
  commands.forEach((command, index) => {
    try {
      current = applyEdit(current, command);
    } catch (err) {
      throw new EditApplyError(`command ${index} failed: ${(err as Error).message}`);
    }
  });
  return current;
}

// compactPage is re-exported for the drag preview, which compacts
// incrementally while the pointer is down and only issues the final
// move/resize command on release.
export { compactPage };
