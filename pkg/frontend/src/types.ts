// Wire shapes shared with the registry server. Field names are part of the
// document formats and must not drift.

export type Kind = "request" | "providable";

export interface ItemDocument {
  id: string;
  kind: Kind;
  name: string;
  variables: string[];
  purpose?: string;
  category?: string;
  outline?: string;
  types?: string[];
  formats?: string[];
  sharing?: string;
}

export interface NetworkNode {
  id: string;
  kind: Kind;
  name: string;
}

export interface NetworkEdge {
  source: string;
  target: string;
  weight: number;
  shared: string[];
}

export interface NetworkDocument {
  seq?: number;
  nodes: NetworkNode[];
  edges: NetworkEdge[];
}

export type EventAction = "created" | "updated" | "deleted" | "categorized";

export interface EventDocument {
  seq: number;
  action: EventAction;
  item: { id: string } & Partial<ItemDocument>;
  timestamp: string;
}

export interface FieldError {
  field: string;
  reason: string;
}

export interface FrequencyRow {
  label: string;
  count: number;
}

export interface StatsDocument {
  seq?: number;
  stats: {
    n_items: number;
    n_requests: number;
    n_jackets: number;
    [key: string]: unknown;
  };
  frequencies: {
    all: FrequencyRow[];
    requests: FrequencyRow[];
    providable: FrequencyRow[];
  };
  common_variables: { count: number; labels: string[] };
  singletons: Record<string, { singletons: number; distinct: number }>;
  unmet_requests: { request: string; best_coverage: number; missing: string[] }[];
}

// Canonical tokens; the server rejects anything else, the forms only offer these.
export const DATA_TYPES = [
  "time series",
  "numerical value",
  "text",
  "table",
  "image",
  "graph",
  "movie",
  "sound",
  "other",
] as const;

export const DATA_FORMATS = [
  "CSV",
  "txt",
  "RDB",
  "markup",
  "RDF",
  "weka",
  "shape",
  "PDF",
  "other",
] as const;

export const SHARING_CONDITIONS = [
  "generally shareable",
  "conditions/negotiations are required",
  "shareable within a limited range",
  "non-shareable",
  "shareable by purchase",
  "not yet decided",
  "other conditions",
] as const;

export const CATEGORIES = [
  "phenomenon understanding",
  "individual decision-making",
  "organizational decision-making",
] as const;
