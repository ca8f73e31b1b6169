// Server-sent event subscription over streaming fetch, with resume via
// ?since= and automatic retry. fetch streaming works identically in the
// browser and in node, so the same code path is exercised by tests.

import type { EventDocument } from "./types.js";

export type FeedStatus = "connecting" | "live" | "retrying";

export interface LiveFeedOptions {
  baseUrl: string;
  since: () => number; // latest seq already applied; resume point
  onEvent: (event: EventDocument) => void;
  onStatus?: (status: FeedStatus) => void;
  retryMs?: number;
  fetchImpl?: typeof fetch;
}

// Incremental SSE frame parser: feed it chunks, it emits complete `data:`
// payloads and keeps the unfinished tail buffered.
export class SseParser {
  private buffer = "";

  push(chunk: string): string[] {
    this.buffer += chunk;
    const payloads: string[] = [];
    let boundary = this.buffer.indexOf("\n\n");
    while (boundary >= 0) {
      const frame = this.buffer.slice(0, boundary);
      this.buffer = this.buffer.slice(boundary + 2);
      const data = frame
        .split("\n")
        .filter((line) => line.startsWith("data: "))
        .map((line) => line.slice("data: ".length))
        .join("\n");
      if (data) payloads.push(data);
      boundary = this.buffer.indexOf("\n\n");
    }
    return payloads;
  }
}

export class LiveFeed {
  private stopped = false;
  private controller: AbortController | null = null;
  private retryTimer: ReturnType<typeof setTimeout> | null = null;

  constructor(private readonly options: LiveFeedOptions) {}

  start(): void {
    this.stopped = false;
    void this.connect();
  }

  stop(): void {
    this.stopped = true;
    if (this.retryTimer !== null) clearTimeout(this.retryTimer);
    this.controller?.abort();
  }

  private status(status: FeedStatus): void {
    this.options.onStatus?.(status);
  }

  private scheduleRetry(): void {
    if (this.stopped) return;
    this.status("retrying");
    this.retryTimer = setTimeout(() => void this.connect(), this.options.retryMs ?? 1500);
  }

  private async connect(): Promise<void> {
    if (this.stopped) return;
    this.status("connecting");
    this.controller = new AbortController();
    const doFetch = this.options.fetchImpl ?? fetch;
    const url = `${this.options.baseUrl}/events?since=${this.options.since()}`;
    try {
      const response = await doFetch(url, {
        signal: this.controller.signal,
        headers: { accept: "text/event-stream" },
      });
      if (!response.ok || response.body === null) {
        this.scheduleRetry();
        return;
      }
      this.status("live");
      const parser = new SseParser();
      const reader = response.body.getReader();
      const decoder = new TextDecoder();
      for (;;) {
        const { done, value } = await reader.read();
        if (done) break;
        for (const payload of parser.push(decoder.decode(value, { stream: true }))) {
          this.options.onEvent(JSON.parse(payload) as EventDocument);
        }
      }
      this.scheduleRetry(); // server closed; resume from the latest seq
    } catch {
      if (!this.stopped) this.scheduleRetry();
    }
  }
}
