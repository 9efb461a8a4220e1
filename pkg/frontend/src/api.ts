/** Thin fetch client for the dashboard service API. */

import { DashboardWire } from "./model.js";
import { EditCommandWire } from "./edits.js";

export interface DashboardSummary {
  id: string;
  name: string;
  revision: number;
}

export interface RenderIconWire {
  interaction: string;
  glyph: string;
  href: string | null;
}

export interface RenderFrameEntryWire {
  widgetId: string;
  vistype: string;
  title: string | null;
  rect: { x: number; y: number; w: number; h: number };
  graphic: string;
  legend: { label: string; colour: string }[] | null;
  legendPosition: string;
  icons: RenderIconWire[];
  error: string | null;
}

export interface RenderTreeWire {
  dashboardTitle: string;
  theme: string;
  mode: string;
  currentPageId: string;
  menu: { pageId: string; name: string; href: string; current: boolean }[];
  frame: RenderFrameEntryWire[];
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string, readonly body?: unknown) {
    super(message);
  }
}

export class ConflictError extends ApiError {
  constructor(message: string, readonly storedRevision: number | undefined) {
    super(409, message);
  }
}

async function request(url: string, init?: RequestInit): Promise<unknown> {
  const res = await fetch(url, {
    headers: { "content-type": "application/json", ...(init?.headers ?? {}) },
    ...init,
  });
  const body = res.status === 204 ? undefined : await res.json().catch(() => undefined);
  if (!res.ok) {
    const message =
      (body as { error?: string } | undefined)?.error ?? `HTTP ${res.status}`;
    if (res.status === 409) {
      throw new ConflictError(
        message, (body as { revision?: number } | undefined)?.revision,
      );
    }
    throw new ApiError(res.status, message, body);
  }
  return body;
}

export class ApiClient {
  constructor(readonly baseUrl: string) {}

  private url(path: string): string {
    return `${this.baseUrl}${path}`;
  }

  listDashboards(): Promise<DashboardSummary[]> {
    return request(this.url("/api/dashboards")) as Promise<DashboardSummary[]>;
  }

  getDashboard(id: string): Promise<DashboardWire> {
    return request(
      this.url(`/api/dashboards/${encodeURIComponent(id)}`),
    ) as Promise<DashboardWire>;
  }

  createDashboard(model: DashboardWire): Promise<{ id: string; revision: number }> {
    return request(this.url("/api/dashboards"), {
      method: "POST",
      body: JSON.stringify(model),
    }) as Promise<{ id: string; revision: number }>;
  }

  putDashboard(model: DashboardWire, ifMatch: number): Promise<{ revision: number }> {
    return request(this.url(`/api/dashboards/${encodeURIComponent(model.id)}`), {
      method: "PUT",
      headers: { "if-match": String(ifMatch) },
      body: JSON.stringify(model),
    }) as Promise<{ revision: number }>;
  }

  postEdit(
    id: string, command: EditCommandWire, expectedRevision: number,
  ): Promise<{ revision: number }> {
    return request(this.url(`/api/dashboards/${encodeURIComponent(id)}/edits`), {
      method: "POST",
      body: JSON.stringify({ command, expectedRevision }),
    }) as Promise<{ revision: number }>;
  }

  getRenderTree(
    id: string, page?: string, mode: "full" | "pure" = "full",
  ): Promise<RenderTreeWire> {
    const query = new URLSearchParams();
    if (page !== undefined) query.set("page", page);
    query.set("mode", mode);
    return request(
      this.url(`/api/dashboards/${encodeURIComponent(id)}/render?${query}`),
    ) as Promise<RenderTreeWire>;
  }
}
