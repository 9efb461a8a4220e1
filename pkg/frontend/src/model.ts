/**
 * Wire-shaped dashboard model types and client-side validation.
 *
 * The editor works directly on the JSON wire form the API serves; the
 * server owns canonical serialization and storage. Validation mirrors the
 * server's rule catalogue (same rule ids) so the UI never offers a save
 * the server would reject.
 */

export const GRID_COLUMNS = 12;

export type ThemeName = "light" | "dark";

export const VIS_TYPES = [
  "title", "single-value", "table", "gauge", "area", "column", "wordcloud",
  "ring", "map", "composite", "scatter", "radial-tree", "pie", "bar",
  "treemap", "line", "bullet", "sankey", "radar",
] as const;
export type VisTypeName = (typeof VIS_TYPES)[number];

export const INTERACTION_TYPES = [
  "Filter", "Zoom", "Share", "Customization", "Detail on demand",
  "Refresh", "Print", "Navigation",
] as const;
export type InteractionName = (typeof INTERACTION_TYPES)[number];

export interface LayoutWire {
  w: number;
  h: number;
  x: number;
  y: number;
  [extra: string]: unknown;
}

export interface VisPropertiesWire {
  vistype: VisTypeName;
  title?: string;
  childrenname?: string[];
  [extra: string]: unknown;
}

export interface VisConfigWire {
  colour?: string[];
  legendDisabled?: boolean;
  legendPosition?: "top" | "bottom" | "left" | "right";
  baseline?: "none" | "movingAverage" | "deviation";
  fontSize?: number;
  axisLabelDisabled?: boolean;
  [extra: string]: unknown;
}

export interface DetailWire {
  target: string;
  method: "pure" | "full";
  [extra: string]: unknown;
}

export interface InteractionWire {
  interactions: string[];
  detail?: DetailWire;
  [extra: string]: unknown;
}

export interface WidgetWire {
  id: string;
  name?: string;
  properties: VisPropertiesWire;
  layout: LayoutWire;
  visconfig?: VisConfigWire;
  interaction?: InteractionWire;
  metricId?: string | string[];
  [extra: string]: unknown;
}

export interface PageWire {
  id: string;
  name: string;
  widgets: WidgetWire[];
  [extra: string]: unknown;
}

export interface DashboardWire {
  id: string;
  name: string;
  theme: ThemeName;
  baseDataModel?: string;
  revision: number;
  pages: PageWire[];
  [extra: string]: unknown;
}

export interface Violation {
  rule: string;
  path: string;
  message: string;
}

const HEX_COLOUR = /^#[0-9a-fA-F]{6}$/;

const interactionKey = (name: string) => name.toLowerCase().replace(/[^a-z]/g, "");
const KNOWN_INTERACTIONS = new Map(
  INTERACTION_TYPES.map((n) => [interactionKey(n), n] as const),
);

export function normalizeInteraction(name: string): InteractionName | undefined {
  return KNOWN_INTERACTIONS.get(interactionKey(name));
}

export function clone<T>(value: T): T {
  return structuredClone(value);
}

export function findPage(model: DashboardWire, pageId: string): PageWire | undefined {
  return model.pages.find((p) => p.id === pageId);
}

export function findWidget(
  model: DashboardWire, widgetId: string,
): { page: PageWire; widget: WidgetWire } | undefined {
  for (const page of model.pages) {
    const widget = page.widgets.find((w) => w.id === widgetId);
    if (widget) return { page, widget };
  }
  return undefined;
}

export function allWidgetIds(model: DashboardWire): Set<string> {
  const ids = new Set<string>();
  for (const page of model.pages) for (const w of page.widgets) ids.add(w.id);
  return ids;
}

function rectsIntersect(a: LayoutWire, b: LayoutWire): boolean {
  return a.x < b.x + b.w && b.x < a.x + a.w && a.y < b.y + b.h && b.y < a.y + a.h;
}

/** Mirror of the server's validate_model; same rule ids, same semantics. */
export function validateModel(model: DashboardWire): Violation[] {
  const out: Violation[] = [];
  const add = (rule: string, path: string, message: string) =>
    out.push({ rule, path, message });

  if (!model.id) add("DASHBOARD_ID_EMPTY", "id", "dashboard id must be non-empty");
  if (model.theme !== "light" && model.theme !== "dark") {
    add("THEME_INVALID", "theme", `theme must be light or dark, got ${model.theme}`);
  }
  if (!model.pages.length) add("NO_PAGES", "pages", "a dashboard requires at least one page");
  if ((model.revision ?? 0) < 0) {
    add("NEGATIVE_REVISION", "revision", `revision must be >= 0, got ${model.revision}`);
  }

  const pageIds = new Set(model.pages.map((p) => p.id));
  const seenPages = new Set<string>();
  const seenWidgets = new Set<string>();
  model.pages.forEach((page, pi) => {
    const ppath = `pages[${pi}]`;
    if (seenPages.has(page.id)) add("DUP_PAGE_ID", `${ppath}.id`, `duplicate page id ${page.id}`);
    seenPages.add(page.id);
    if (!page.name) add("PAGE_NAME_EMPTY", `${ppath}.name`, "page name must be non-empty");

    page.widgets.forEach((widget, wi) => {
      const wpath = `${ppath}.widgets[${wi}]`;
      if (seenWidgets.has(widget.id)) {
        add("DUP_WIDGET_ID", `${wpath}.id`, `duplicate widget id ${widget.id}`);
      }
      seenWidgets.add(widget.id);

      if (!VIS_TYPES.includes(widget.properties.vistype)) {
        add("VISTYPE_INVALID", `${wpath}.properties.vistype`,
          `unknown vistype ${widget.properties.vistype}`);
      } else if (
        (widget.properties.vistype === "pie" || widget.properties.vistype === "ring")
        && widget.properties.childrenname !== undefined
        && widget.properties.childrenname.length === 0
      ) {
        add("CHILDRENNAME_EMPTY", `${wpath}.properties.childrenname`,
          "childrenname must be non-empty when present on pie/ring");
      }

      const rect = widget.layout;
      if (rect.w < 1 || rect.h < 1 || rect.x < 0 || rect.y < 0) {
        add("LAYOUT_BOUNDS", `${wpath}.layout`,
          `layout requires w,h >= 1 and x,y >= 0; got x=${rect.x} y=${rect.y} w=${rect.w} h=${rect.h}`);
      } else if (rect.x + rect.w > GRID_COLUMNS) {
        add("LAYOUT_OVERFLOW", `${wpath}.layout`,
          `x + w = ${rect.x + rect.w} exceeds the ${GRID_COLUMNS}-column grid`);
      }

      const cfg = widget.visconfig;
      if (cfg) {
        (cfg.colour ?? []).forEach((value, ci) => {
          if (!HEX_COLOUR.test(value)) {
            add("COLOUR_FORMAT", `${wpath}.visconfig.colour[${ci}]`,
              `colour must match #RRGGBB; got ${value}`);
          }
        });
        if (cfg.fontSize !== undefined && !(cfg.fontSize > 0)) {
          add("FONTSIZE_INVALID", `${wpath}.visconfig.fontSize`,
            `fontSize must be > 0; got ${cfg.fontSize}`);
        }
        if (cfg.legendPosition !== undefined
            && !["top", "bottom", "left", "right"].includes(cfg.legendPosition)) {
          add("LEGEND_POSITION_INVALID", `${wpath}.visconfig.legendPosition`,
            `bad legendPosition ${cfg.legendPosition}`);
        }
        if (cfg.baseline !== undefined
            && !["none", "movingAverage", "deviation"].includes(cfg.baseline)) {
          add("BASELINE_INVALID", `${wpath}.visconfig.baseline`,
            `bad baseline ${cfg.baseline}`);
        }
      }

      const spec = widget.interaction;
      if (spec) {
        const kinds = spec.interactions.map(normalizeInteraction);
        if (kinds.includes("Detail on demand") && !spec.detail) {
          add("DETAIL_REQUIRED", `${wpath}.interaction.detail`,
            "detail configuration is required for Detail on demand");
        }
        if (spec.detail && !pageIds.has(spec.detail.target)) {
          add("DANGLING_TARGET", `${wpath}.interaction.detail.target`,
            `detail target ${spec.detail.target} is not a page id`);
        }
      }
    });

    // Pairwise overlap within the page.
    for (let i = 0; i < page.widgets.length; i++) {
      for (let j = i + 1; j < page.widgets.length; j++) {
        if (rectsIntersect(page.widgets[i].layout, page.widgets[j].layout)) {
          add("OVERLAP", `${ppath}.widgets[${j}].layout`,
            `widgets ${page.widgets[i].id} and ${page.widgets[j].id} overlap`);
        }
      }
    }
  });
  return out;
}
