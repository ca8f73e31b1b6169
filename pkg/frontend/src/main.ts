// Wires the pieces together. Items exist in the view only once their events
// arrive (no optimistic writes), so every client converges on the same
// state; the network and stats panels refetch until their seq catches up
// with the item state.

import { Api } from "./api.js";
import { Dashboard } from "./dashboard.js";
import { EntryForms } from "./forms.js";
import { GraphView } from "./graphview.js";
import { EventGapError, adjacency, applyEvent, initialState, nodesWithVariable } from "./state.js";
import { LiveFeed } from "./live.js";
import type { ClientState } from "./state.js";
import type { NetworkDocument } from "./types.js";

function byId(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

function renderDetail(
  panel: HTMLElement,
  state: ClientState,
  network: NetworkDocument,
  id: string | null,
): void {
  panel.replaceChildren();
  if (id === null) {
    panel.textContent = "click a node to see the item and its neighbors";
    return;
  }
  const item = state.items.get(id);
  if (!item) return;
  const title = document.createElement("h3");
  title.textContent = item.name;
  panel.append(title);

  const fields = document.createElement("dl");
  const addField = (label: string, value: string) => {
    const dt = document.createElement("dt");
    dt.textContent = label;
    const dd = document.createElement("dd");
    dd.textContent = value;
    fields.append(dt, dd);
  };
  addField("kind", item.kind);
  addField("variables", item.variables.join(", "));
  if (item.purpose) addField("purpose", item.purpose);
  if (item.category) addField("category", item.category);
  if (item.outline) addField("outline", item.outline);
  if (item.types?.length) addField("types", item.types.join(", "));
  if (item.formats?.length) addField("formats", item.formats.join(", "));
  if (item.sharing) addField("sharing", item.sharing);
  panel.append(fields);

  const { neighbors, sharedByNeighbor } = adjacency(network, id);
  const heading = document.createElement("h4");
  heading.textContent = `neighbors (${neighbors.size})`;
  panel.append(heading);
  const list = document.createElement("ul");
  for (const neighborId of neighbors) {
    const neighbor = state.items.get(neighborId);
    const row = document.createElement("li");
    row.textContent = `${neighbor?.name ?? neighborId} — shared: ${
      sharedByNeighbor.get(neighborId)?.join(", ") ?? ""
    }`;
    list.append(row);
  }
  panel.append(list);
}

export function boot(): void {
  const api = new Api("..");
  let state = initialState();
  let network: NetworkDocument = { seq: 0, nodes: [], edges: [] };

  const banner = byId("banner");
  const graph = new GraphView(byId("canvas"), {
    onSelect: (id) => renderDetail(byId("detail"), state, network, id),
  });
  const dashboard = new Dashboard(byId("dashboard"), {
    onItemClick: (id) => graph.select(id),
    onVariableClick: (label) => graph.emphasizeVariable(nodesWithVariable(state, label)),
  });
  byId("request-form").append(new EntryForms(api, "request").root);
  byId("providable-form").append(new EntryForms(api, "providable").root);

  let refreshTimer: ReturnType<typeof setTimeout> | null = null;
  async function refreshDerived(): Promise<void> {
    const [nextNetwork, stats] = await Promise.all([api.getNetwork(), api.getStats()]);
    network = nextNetwork;
    graph.setNetwork(network);
    dashboard.renderVariables(stats);
    renderDetail(byId("detail"), state, network, graph.selectedId);
    if ((network.seq ?? 0) < state.seq) {
      scheduleRefresh(); // server snapshot is older than our event state
    }
  }
  function scheduleRefresh(): void {
    if (refreshTimer !== null) return;
    refreshTimer = setTimeout(() => {
      refreshTimer = null;
      void refreshDerived();
    }, 120);
  }

  const feed = new LiveFeed({
    baseUrl: "..",
    since: () => state.seq,
    onStatus: (status) => {
      banner.textContent = status === "live" ? "" : `connection: ${status}`;
      banner.style.display = status === "live" ? "none" : "";
    },
    onEvent: (event) => {
      try {
        state = applyEvent(state, event);
      } catch (error) {
        if (error instanceof EventGapError) {
          feed.stop();
          feed.start(); // resubscribe resumes from state.seq
          return;
        }
        throw error;
      }
      dashboard.renderItems(state);
      scheduleRefresh();
    },
  });
  feed.start();
  void refreshDerived();

  const tabs = document.querySelectorAll<HTMLButtonElement>(".tab-button");
  tabs.forEach((button) => {
    button.addEventListener("click", () => {
      tabs.forEach((other) => other.classList.toggle("active", other === button));
      document.querySelectorAll<HTMLElement>(".tab-pane").forEach((pane) => {
        pane.style.display = pane.id === button.dataset.target ? "" : "none";
      });
    });
  });
}

boot();
