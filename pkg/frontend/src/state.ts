// Client-side item state is a pure fold over the event log: replaying the
// same prefix always rebuilds the same items. Matching (edges, coverage) is
// never computed here; the network document from the server is the truth.

import type { EventDocument, ItemDocument, Kind, NetworkDocument } from "./types.js";

export interface ClientState {
  seq: number;
  items: Map<string, ItemDocument>;
}

export class EventGapError extends Error {
  constructor(
    public readonly lastSeq: number,
    public readonly gotSeq: number,
  ) {
    super(`event gap: have ${lastSeq}, got ${gotSeq}`);
  }
}

export function initialState(): ClientState {
  return { seq: 0, items: new Map() };
}

export function applyEvent(state: ClientState, event: EventDocument): ClientState {
  if (event.seq <= state.seq) {
    return state; // duplicate delivery, e.g. overlap after a resubscribe
  }
  if (event.seq !== state.seq + 1) {
    throw new EventGapError(state.seq, event.seq);
  }
  const items = new Map(state.items);
  if (event.action === "deleted") {
    items.delete(event.item.id);
  } else {
    items.set(event.item.id, event.item as ItemDocument);
  }
  return { seq: event.seq, items };
}

export function applyEvents(state: ClientState, events: EventDocument[]): ClientState {
  return events.reduce(applyEvent, state);
}

export function itemsOfKind(state: ClientState, kind: Kind): ItemDocument[] {
  return [...state.items.values()].filter((item) => item.kind === kind);
}

export const NODE_COLORS: Record<Kind, string> = {
  request: "#2e8b57", // green
  providable: "#e8871e", // orange
};

export function nodeColor(kind: Kind): string {
  return NODE_COLORS[kind];
}

export interface Adjacency {
  neighbors: Set<string>;
  sharedByNeighbor: Map<string, string[]>;
}

// Straight scan of the server's edge list; the client adds no matching rules.
export function adjacency(network: NetworkDocument, id: string): Adjacency {
  const neighbors = new Set<string>();
  const sharedByNeighbor = new Map<string, string[]>();
  for (const edge of network.edges) {
    let other: string | null = null;
    if (edge.source === id) other = edge.target;
    else if (edge.target === id) other = edge.source;
    if (other !== null) {
      neighbors.add(other);
      sharedByNeighbor.set(other, edge.shared);
    }
  }
  return { neighbors, sharedByNeighbor };
}

export function nodesWithVariable(state: ClientState, label: string): Set<string> {
  const hits = new Set<string>();
  for (const item of state.items.values()) {
    if (item.variables.includes(label)) hits.add(item.id);
  }
  return hits;
}
