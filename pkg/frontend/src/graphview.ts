// SVG network view: force layout with drag-to-pin, node selection with
// automatic neighbor highlighting, and per-variable emphasis. Edge width
// scales with the number of shared variables.

import { ForceLayout } from "./force.js";
import { adjacency, nodeColor } from "./state.js";
import type { NetworkDocument } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface GraphCallbacks {
  onSelect?: (id: string | null) => void;
}

export class GraphView {
  private readonly svg: SVGSVGElement;
  private readonly edgeLayer: SVGGElement;
  private readonly nodeLayer: SVGGElement;
  private readonly labelLayer: SVGGElement;
  private readonly layout: ForceLayout;
  private network: NetworkDocument = { nodes: [], edges: [] };
  private selected: string | null = null;
  private emphasized = new Set<string>();
  private animating = false;
  private readonly hint: HTMLElement;

  constructor(
    container: HTMLElement,
    private readonly callbacks: GraphCallbacks = {},
  ) {
    const width = container.clientWidth || 800;
    const height = container.clientHeight || 600;
    this.svg = document.createElementNS(SVG_NS, "svg");
    this.svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
    this.edgeLayer = document.createElementNS(SVG_NS, "g");
    this.nodeLayer = document.createElementNS(SVG_NS, "g");
    this.labelLayer = document.createElementNS(SVG_NS, "g");
    this.svg.append(this.edgeLayer, this.nodeLayer, this.labelLayer);
    this.svg.addEventListener("click", (event) => {
      if (event.target === this.svg) this.select(null);
    });
    this.hint = document.createElement("p");
    this.hint.className = "canvas-hint";
    this.hint.textContent = "no data items yet — register one on the right";
    container.append(this.svg, this.hint);
    this.layout = new ForceLayout(width, height);
  }

  setNetwork(network: NetworkDocument): void {
    this.network = network;
    this.hint.style.display = network.nodes.length ? "none" : "";
    this.layout.setGraph(
      network.nodes.map((n) => n.id),
      network.edges.map((e) => ({ source: e.source, target: e.target, weight: e.weight })),
    );
    if (this.selected !== null && !network.nodes.some((n) => n.id === this.selected)) {
      this.selected = null;
      this.callbacks.onSelect?.(null);
    }
    this.rebuild();
    this.animate();
  }

  emphasizeVariable(hits: Set<string>): void {
    this.emphasized = hits;
    this.applyClasses();
  }

  select(id: string | null): void {
    this.selected = id;
    this.applyClasses();
    this.callbacks.onSelect?.(id);
  }

  get selectedId(): string | null {
    return this.selected;
  }

  private rebuild(): void {
    this.edgeLayer.replaceChildren();
    this.nodeLayer.replaceChildren();
    this.labelLayer.replaceChildren();

    for (const edge of this.network.edges) {
      const line = document.createElementNS(SVG_NS, "line");
      line.dataset.source = edge.source;
      line.dataset.target = edge.target;
      line.setAttribute("stroke-width", String(1 + Math.sqrt(edge.weight)));
      line.setAttribute("class", "edge");
      const title = document.createElementNS(SVG_NS, "title");
      title.textContent = `shared: ${edge.shared.join(", ")}`;
      line.append(title);
      this.edgeLayer.append(line);
    }

    for (const node of this.network.nodes) {
      const circle = document.createElementNS(SVG_NS, "circle");
      circle.dataset.id = node.id;
      circle.setAttribute("r", "9");
      circle.setAttribute("fill", nodeColor(node.kind));
      circle.setAttribute("class", `node kind-${node.kind}`);
      const title = document.createElementNS(SVG_NS, "title");
      title.textContent = node.name;
      circle.append(title);
      this.attachDrag(circle, node.id);
      circle.addEventListener("click", (event) => {
        event.stopPropagation();
        this.select(node.id);
      });
      this.nodeLayer.append(circle);

      const label = document.createElementNS(SVG_NS, "text");
      label.dataset.id = node.id;
      label.setAttribute("class", "node-label");
      label.textContent = node.name.length > 24 ? `${node.name.slice(0, 24)}…` : node.name;
      this.labelLayer.append(label);
    }
    this.applyClasses();
    this.position();
  }

  private attachDrag(circle: SVGCircleElement, id: string): void {
    circle.addEventListener("pointerdown", (down) => {
      down.preventDefault();
      circle.setPointerCapture(down.pointerId);
      const move = (event: PointerEvent) => {
        const point = this.toViewBox(event);
        this.layout.pin(id, point.x, point.y);
        this.animate();
      };
      const up = () => {
        // stays where the user left it: keep the pin
        circle.removeEventListener("pointermove", move);
        circle.removeEventListener("pointerup", up);
      };
      circle.addEventListener("pointermove", move);
      circle.addEventListener("pointerup", up);
    });
  }

  private toViewBox(event: PointerEvent): { x: number; y: number } {
    const rect = this.svg.getBoundingClientRect();
    const viewBox = this.svg.viewBox.baseVal;
    return {
      x: ((event.clientX - rect.left) / rect.width) * viewBox.width,
      y: ((event.clientY - rect.top) / rect.height) * viewBox.height,
    };
  }

  private applyClasses(): void {
    const highlight =
      this.selected === null
        ? new Set<string>()
        : adjacency(this.network, this.selected).neighbors;
    for (const circle of this.nodeLayer.querySelectorAll<SVGCircleElement>("circle")) {
      const id = circle.dataset.id!;
      circle.classList.toggle("selected", id === this.selected);
      circle.classList.toggle("neighbor", highlight.has(id));
      circle.classList.toggle("emphasized", this.emphasized.has(id));
    }
    for (const line of this.edgeLayer.querySelectorAll<SVGLineElement>("line")) {
      const incident =
        this.selected !== null &&
        (line.dataset.source === this.selected || line.dataset.target === this.selected);
      line.classList.toggle("incident", incident);
    }
  }

  private position(): void {
    for (const line of this.edgeLayer.querySelectorAll<SVGLineElement>("line")) {
      const a = this.layout.node(line.dataset.source!);
      const b = this.layout.node(line.dataset.target!);
      if (!a || !b) continue;
      line.setAttribute("x1", String(a.x));
      line.setAttribute("y1", String(a.y));
      line.setAttribute("x2", String(b.x));
      line.setAttribute("y2", String(b.y));
    }
    for (const circle of this.nodeLayer.querySelectorAll<SVGCircleElement>("circle")) {
      const node = this.layout.node(circle.dataset.id!);
      if (!node) continue;
      circle.setAttribute("cx", String(node.x));
      circle.setAttribute("cy", String(node.y));
    }
    for (const label of this.labelLayer.querySelectorAll<SVGTextElement>("text")) {
      const node = this.layout.node(label.dataset.id!);
      if (!node) continue;
      label.setAttribute("x", String(node.x + 12));
      label.setAttribute("y", String(node.y + 4));
    }
  }

  private animate(): void {
    if (this.animating) {
      this.layout.reheat(0.5);
      return;
    }
    this.animating = true;
    const tick = () => {
      const alpha = this.layout.step();
      this.position();
      if (alpha > 0.005) {
        requestAnimationFrame(tick);
      } else {
        this.animating = false;
      }
    };
    requestAnimationFrame(tick);
  }
}
