// Thin fetch client for the rule service. Every helper either returns
// the parsed response body or throws an ApiError carrying the status
// and whatever error payload the service produced.

import type {
  CheckResponse,
  DemonstrationDoc,
  InferResponse,
  InventoryDoc,
  PlaceResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public body: unknown,
  ) {
    super(describe(status, body));
    this.name = "ApiError";
  }
}

function describe(status: number, body: unknown): string {
  if (body && typeof body === "object") {
    const err = (body as Record<string, unknown>).error;
    if (err && typeof err === "object") {
      const { message, path, line } = err as Record<string, unknown>;
      const where = path ? ` at ${path}` : line !== undefined ? ` at line ${line}` : "";
      return `${message}${where}`;
    }
    const detail = (body as Record<string, unknown>).detail;
    if (typeof detail === "string") return detail;
    if (Array.isArray(detail) && detail.length > 0) {
      const first = detail[0] as Record<string, unknown>;
      return `${first.msg} (${(first.loc as unknown[])?.join(".")})`;
    }
  }
  return `request failed with status ${status}`;
}

export interface InferOptions {
  template?: string | object;
  max_len?: number;
  p_c?: number;
  epsilon?: number;
  k_r?: number;
  seed?: number;
  tau?: number;
}

export class ApiClient {
  constructor(private base: string = "") {}

  private async post<T>(path: string, payload: unknown): Promise<T> {
    const response = await fetch(this.base + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
    const body = await response.json().catch(() => null);
    if (!response.ok) throw new ApiError(response.status, body);
    return body as T;
  }

  private async get<T>(path: string): Promise<T> {
    const response = await fetch(this.base + path);
    const body = await response.json().catch(() => null);
    if (!response.ok) throw new ApiError(response.status, body);
    return body as T;
  }

  health(): Promise<{ status: string; version: string }> {
    return this.get("/api/health");
  }

  templates(): Promise<{ templates: { name: string }[] }> {
    return this.get("/api/templates");
  }

  check(spec: string, demo: DemonstrationDoc, tau?: number): Promise<CheckResponse> {
    return this.post("/api/check", tau === undefined ? { spec, demo } : { spec, demo, tau });
  }

  infer(demos: DemonstrationDoc[], options: InferOptions = {}): Promise<InferResponse> {
    return this.post("/api/infer", { demos, ...options });
  }

  place(spec: string, inventory: InventoryDoc, seed?: number): Promise<PlaceResponse> {
    return this.post("/api/place", seed === undefined ? { spec, inventory } : { spec, inventory, seed });
  }
}
