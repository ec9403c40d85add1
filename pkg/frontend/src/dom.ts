import { View } from "./controller.js";
import { buildScatterScene, DEFAULT_OPTIONS, findAll, ScatterOptions, SceneNode } from "./scatter.js";
import { DiagramPayload, PointPayload, TermSuggestion } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export function materializeScene(node: SceneNode): SVGElement {
  const element = document.createElementNS(SVG_NS, node.tag) as SVGElement;
  for (const [name, value] of Object.entries(node.attrs)) {
    element.setAttribute(name, value);
  }
  if (node.text !== undefined) {
    element.textContent = node.text;
  }
  for (const child of node.children ?? []) {
    element.appendChild(materializeScene(child));
  }
  return element;
}

export interface Handlers {
  onPointClick(term: string): void;
  onSuggestionPick(term: string): void;
  onHistoryPick(seed: string): void;
}

interface Elements {
  plot: HTMLElement;
  meta: HTMLElement;
  detail: HTMLElement;
  suggestions: HTMLElement;
  history: HTMLElement;
  backButton: HTMLButtonElement;
  banner: HTMLElement;
  busy: HTMLElement;
}

/** Binds the exploration view to the page. */
export class DomView implements View {
  options: ScatterOptions = { ...DEFAULT_OPTIONS };
  private lastDiagram: DiagramPayload | null = null;

  constructor(
    private readonly el: Elements,
    private readonly handlers: Handlers,
  ) {}

  renderDiagram(diagram: DiagramPayload): void {
    this.lastDiagram = diagram;
    const scene = buildScatterScene(diagram, this.options);
    const svg = materializeScene(scene);
    for (const group of Array.from(svg.querySelectorAll("[data-term]"))) {
      const term = group.getAttribute("data-term");
      if (term === null) continue;
      group.addEventListener("click", () => this.handlers.onPointClick(term));
      group.addEventListener("mouseenter", () => this.showPointDetail(term));
    }
    this.el.plot.replaceChildren(svg);
    const p = diagram.params;
    this.el.meta.textContent =
      `${diagram.seed} · df=${diagram.seed_df} · N=${diagram.n_docs} · ` +
      `${diagram.points.length} terms · min_co=${p.min_co} base=${p.base} ` +
      `alpha=${p.alpha} gamma=${p.gamma} tau=${p.tau}`;
    this.showSeedDetail(diagram);
    // sanity: every marker drawn corresponds to one payload point
    const markers = findAll(scene, (n) => n.attrs.class === "marker");
    if (markers.length !== diagram.points.length) {
      this.showError("internal: marker/point mismatch");
    }
  }

  renderHistory(trail: readonly string[], canGoBack: boolean): void {
    this.el.history.replaceChildren(
      ...trail.map((seed, i) => {
        const item = document.createElement("li");
        const button = document.createElement("button");
        button.type = "button";
        button.textContent = seed;
        if (i === trail.length - 1) {
          button.disabled = true;
          button.classList.add("current");
        } else {
          button.addEventListener("click", () => this.handlers.onHistoryPick(seed));
        }
        item.appendChild(button);
        return item;
      }),
    );
    this.el.backButton.disabled = !canGoBack;
  }

  renderSuggestions(suggestions: TermSuggestion[]): void {
    this.el.suggestions.replaceChildren(
      ...suggestions.map((s) => {
        const item = document.createElement("li");
        const button = document.createElement("button");
        button.type = "button";
        button.textContent = `${s.term} (${s.df})`;
        button.addEventListener("click", () => this.handlers.onSuggestionPick(s.term));
        item.appendChild(button);
        return item;
      }),
    );
  }

  showError(message: string): void {
    this.el.banner.textContent = message;
    this.el.banner.hidden = false;
  }

  clearError(): void {
    this.el.banner.hidden = true;
    this.el.banner.textContent = "";
  }

  setBusy(busy: boolean): void {
    this.el.busy.hidden = !busy;
  }

  /** Detail panel: every value is the payload's own string, verbatim. */
  private showPointDetail(term: string): void {
    const point = this.lastDiagram?.points.find((p) => p.term === term);
    if (point) this.renderDetail(point.term, detailRows(point));
  }

  private showSeedDetail(diagram: DiagramPayload): void {
    this.renderDetail(diagram.seed, [
      ["role", "seed (tip)"],
      ["df", String(diagram.seed_df)],
      ["x", diagram.seed_x],
      ["y", diagram.seed_y],
      ["N", String(diagram.n_docs)],
    ]);
  }

  private renderDetail(title: string, rows: Array<[string, string]>): void {
    const heading = document.createElement("h3");
    heading.textContent = title;
    const list = document.createElement("dl");
    for (const [key, value] of rows) {
      const dt = document.createElement("dt");
      dt.textContent = key;
      const dd = document.createElement("dd");
      dd.textContent = value;
      list.append(dt, dd);
    }
    this.el.detail.replaceChildren(heading, list);
  }
}

function detailRows(p: PointPayload): Array<[string, string]> {
  return [
    ["co-count", String(p.co_count)],
    ["df", String(p.df)],
    ["x", p.x],
    ["y", p.y],
    ["sector", p.sector],
    ["dominant", p.dominant ? "yes" : "no"],
  ];
}
