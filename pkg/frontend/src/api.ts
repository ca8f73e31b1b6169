// Thin fetch wrappers for the registry endpoints.

import type {
  EventDocument,
  FieldError,
  ItemDocument,
  NetworkDocument,
  StatsDocument,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly errors: FieldError[],
  ) {
    super(errors.map((e) => `${e.field}: ${e.reason}`).join("; ") || `HTTP ${status}`);
  }
}

async function parse<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let errors: FieldError[] = [];
    try {
      const body = (await response.json()) as { errors?: FieldError[] };
      errors = body.errors ?? [];
    } catch {
      // non-JSON error body; keep generic message
    }
    throw new ApiError(response.status, errors);
  }
  return (await response.json()) as T;
}

export class Api {
  constructor(private readonly baseUrl: string = "") {}

  getItems(): Promise<ItemDocument[]> {
    return fetch(`${this.baseUrl}/items`).then((r) => parse<ItemDocument[]>(r));
  }

  getNetwork(): Promise<NetworkDocument> {
    return fetch(`${this.baseUrl}/network`).then((r) => parse<NetworkDocument>(r));
  }

  getStats(): Promise<StatsDocument> {
    return fetch(`${this.baseUrl}/stats`).then((r) => parse<StatsDocument>(r));
  }

  createItem(item: Partial<ItemDocument>): Promise<EventDocument> {
    return fetch(`${this.baseUrl}/items`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(item),
    }).then((r) => parse<EventDocument>(r));
  }

  setCategory(id: string, category: string | null): Promise<EventDocument> {
    return fetch(`${this.baseUrl}/items/${encodeURIComponent(id)}/category`, {
      method: "PUT",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ category }),
    }).then((r) => parse<EventDocument>(r));
  }
}
