// Dashboard and toolbox: all registered items grouped by kind, all variables
// with their frequencies. Clicking a variable emphasizes every node that
// carries it; clicking an item selects its node.

import { itemsOfKind, nodeColor, type ClientState } from "./state.js";
import type { StatsDocument } from "./types.js";

export interface DashboardCallbacks {
  onItemClick?: (id: string) => void;
  onVariableClick?: (label: string) => void;
}

export class Dashboard {
  private readonly itemsPane: HTMLElement;
  private readonly variablesPane: HTMLElement;

  constructor(
    container: HTMLElement,
    private readonly callbacks: DashboardCallbacks = {},
  ) {
    this.itemsPane = document.createElement("div");
    this.itemsPane.className = "dashboard-items";
    this.variablesPane = document.createElement("div");
    this.variablesPane.className = "dashboard-variables";
    container.append(this.itemsPane, this.variablesPane);
  }

  renderItems(state: ClientState): void {
    this.itemsPane.replaceChildren();
    for (const kind of ["request", "providable"] as const) {
      const items = itemsOfKind(state, kind);
      const heading = document.createElement("h3");
      heading.textContent =
        kind === "request" ? `data requests (${items.length})` : `providable data (${items.length})`;
      heading.style.color = nodeColor(kind);
      this.itemsPane.append(heading);
      const list = document.createElement("ul");
      for (const item of items) {
        const row = document.createElement("li");
        const link = document.createElement("a");
        link.href = "#";
        link.textContent = item.name;
        link.addEventListener("click", (event) => {
          event.preventDefault();
          this.callbacks.onItemClick?.(item.id);
        });
        row.append(link);
        list.append(row);
      }
      this.itemsPane.append(list);
    }
  }

  renderVariables(stats: StatsDocument): void {
    this.variablesPane.replaceChildren();
    const heading = document.createElement("h3");
    heading.textContent = `variables (${stats.frequencies.all.length})`;
    this.variablesPane.append(heading);
    const list = document.createElement("ul");
    for (const row of stats.frequencies.all) {
      const entry = document.createElement("li");
      const link = document.createElement("a");
      link.href = "#";
      link.textContent = `${row.label} (${row.count})`;
      link.addEventListener("click", (event) => {
        event.preventDefault();
        this.callbacks.onVariableClick?.(row.label);
      });
      entry.append(link);
      list.append(entry);
    }
    this.variablesPane.append(list);
  }
}
