// Small force-directed layout: pairwise repulsion, spring links, weak
// centering, with an alpha that decays until the layout settles. Positions
// are client-local only and never sent to the server. Dragging pins a node
// (fx/fy), matching the manual drag-and-drop override of the layout.

export interface SimNode {
  id: string;
  x: number;
  y: number;
  vx: number;
  vy: number;
  fx: number | null;
  fy: number | null;
}

export interface SimLink {
  source: string;
  target: string;
  weight: number;
}

export interface ForceSettings {
  repulsion: number;
  linkDistance: number;
  linkStrength: number;
  centerStrength: number;
  damping: number;
  alphaDecay: number;
}

const DEFAULTS: ForceSettings = {
  repulsion: 2200,
  linkDistance: 50,
  linkStrength: 0.12,
  centerStrength: 0.015,
  damping: 0.65,
  alphaDecay: 0.985,
};

export class ForceLayout {
  private simNodes = new Map<string, SimNode>();
  private simLinks: SimLink[] = [];
  private alpha = 1;
  readonly settings: ForceSettings;

  constructor(
    private width: number,
    private height: number,
    settings: Partial<ForceSettings> = {},
  ) {
    this.settings = { ...DEFAULTS, ...settings };
  }

  resize(width: number, height: number): void {
    this.width = width;
    this.height = height;
  }

  // Keeps positions of nodes it already knows; new nodes are seeded on a
  // deterministic circle so re-rendering the same graph looks the same.
  setGraph(ids: string[], links: SimLink[]): void {
    const kept = new Map<string, SimNode>();
    ids.forEach((id, index) => {
      const existing = this.simNodes.get(id);
      if (existing) {
        kept.set(id, existing);
        return;
      }
      const angle = (2 * Math.PI * index) / Math.max(ids.length, 1);
      const radius = Math.min(this.width, this.height) * 0.35;
      kept.set(id, {
        id,
        x: this.width / 2 + radius * Math.cos(angle),
        y: this.height / 2 + radius * Math.sin(angle),
        vx: 0,
        vy: 0,
        fx: null,
        fy: null,
      });
    });
    this.simNodes = kept;
    this.simLinks = links.filter((l) => kept.has(l.source) && kept.has(l.target));
    this.reheat();
  }

  nodes(): SimNode[] {
    return [...this.simNodes.values()];
  }

  node(id: string): SimNode | undefined {
    return this.simNodes.get(id);
  }

  pin(id: string, x: number, y: number): void {
    const node = this.simNodes.get(id);
    if (node) {
      node.fx = x;
      node.fy = y;
      this.reheat(0.3);
    }
  }

  unpin(id: string): void {
    const node = this.simNodes.get(id);
    if (node) {
      node.fx = null;
      node.fy = null;
    }
  }

  reheat(alpha = 1): void {
    this.alpha = Math.max(this.alpha, alpha);
  }

  get energy(): number {
    return this.alpha;
  }

  step(): number {
    const nodes = this.nodes();
    const { repulsion, linkDistance, linkStrength, centerStrength, damping } =
      this.settings;

    for (let i = 0; i < nodes.length; i++) {
      for (let j = i + 1; j < nodes.length; j++) {
        const a = nodes[i];
        const b = nodes[j];
        const dx = b.x - a.x;
        const dy = b.y - a.y;
        const distSq = Math.max(dx * dx + dy * dy, 25);
        const dist = Math.sqrt(distSq);
        const force = (repulsion / distSq) * this.alpha;
        const fx = (dx / dist) * force;
        const fy = (dy / dist) * force;
        a.vx -= fx;
        a.vy -= fy;
        b.vx += fx;
        b.vy += fy;
      }
    }

    for (const link of this.simLinks) {
      const a = this.simNodes.get(link.source)!;
      const b = this.simNodes.get(link.target)!;
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const dist = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      // heavier links (more shared variables) pull a bit harder
      const strength = linkStrength * (1 + Math.log(link.weight));
      const stretch = (dist - linkDistance) * strength * this.alpha;
      const fx = (dx / dist) * stretch;
      const fy = (dy / dist) * stretch;
      a.vx += fx;
      a.vy += fy;
      b.vx -= fx;
      b.vy -= fy;
    }

    for (const node of nodes) {
      node.vx += (this.width / 2 - node.x) * centerStrength * this.alpha;
      node.vy += (this.height / 2 - node.y) * centerStrength * this.alpha;
      if (node.fx !== null && node.fy !== null) {
        node.x = node.fx;
        node.y = node.fy;
        node.vx = 0;
        node.vy = 0;
        continue;
      }
      node.vx *= damping;
      node.vy *= damping;
      node.x += node.vx;
      node.y += node.vy;
    }

    this.alpha *= this.settings.alphaDecay;
    return this.alpha;
  }

  run(steps: number): void {
    for (let i = 0; i < steps; i++) this.step();
  }
}
