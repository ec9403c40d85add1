import { bandEdges, extent, PlotArea, ticks, xToPx, yToPx } from "./geometry.js";
import { LabelBox, layoutLabels } from "./labels.js";
import { DiagramPayload, Sector } from "./types.js";

/**
 * Pure scene builder: turns a diagram payload into a tree of element
 * specs. No DOM access, so the whole layout is testable under node;
 * dom.ts materializes the tree and wires events to [data-term] groups.
 */

export interface SceneNode {
  tag: string;
  attrs: Record<string, string>;
  children?: SceneNode[];
  text?: string;
}

export interface ScatterOptions {
  width: number;
  height: number;
  margin: number;
  showBands: boolean;
  fontSize: number;
  labelMaxChars: number;
}

export const DEFAULT_OPTIONS: ScatterOptions = {
  width: 940,
  height: 560,
  margin: 56,
  showBands: true,
  fontSize: 12,
  labelMaxChars: 32,
};

export const SECTOR_COLOR: Record<Sector, string> = {
  A: "#2e7d32",
  B: "#1f5fa8",
  C: "#b3422e",
};

const BAND_FILL: Record<Sector, string> = {
  A: "#e9f1e9",
  B: "#f7f7f1",
  C: "#f4eaea",
};

const SEED_COLOR = "#111111";

function el(tag: string, attrs: Record<string, string>, children?: SceneNode[], text?: string): SceneNode {
  return { tag, attrs, children, text };
}

function elide(label: string, maxChars: number): string {
  return label.length <= maxChars ? label : label.slice(0, maxChars - 1) + "…";
}

export function buildScatterScene(
  diagram: DiagramPayload,
  options: ScatterOptions = DEFAULT_OPTIONS,
): SceneNode {
  const { width, height, margin, fontSize } = options;
  const area: PlotArea = { width, height, margin };
  const xs = diagram.points.map((p) => Number(p.x)).concat([Number(diagram.seed_x)]);
  const ys = diagram.points.map((p) => Number(p.y)).concat([Number(diagram.seed_y)]);
  const ex = extent(xs);
  const ey = extent(ys);
  const px = (v: number) => xToPx(v, ex, area);
  const py = (v: number) => yToPx(v, ey, area);

  const children: SceneNode[] = [
    el("rect", { width: String(width), height: String(height), fill: "#ffffff" }),
  ];

  if (options.showBands) {
    const { yAB, yBC } = bandEdges(diagram);
    const bands: Array<[Sector, number, number]> = [
      ["A", Math.max(yAB, ey.lo), ey.hi],
      ["B", Math.max(yBC, ey.lo), Math.min(yAB, ey.hi)],
      ["C", ey.lo, Math.min(yBC, ey.hi)],
    ];
    for (const [name, lo, hi] of bands) {
      if (hi <= lo) continue;
      children.push(
        el("rect", {
          class: `band band-${name}`,
          x: String(margin),
          y: py(hi).toFixed(2),
          width: String(width - 2 * margin),
          height: (py(lo) - py(hi)).toFixed(2),
          fill: BAND_FILL[name],
        }),
        el(
          "text",
          {
            class: "band-label",
            x: String(width - margin - 6),
            y: (py(hi) + fontSize + 4).toFixed(2),
            "text-anchor": "end",
            fill: "#999999",
          },
          undefined,
          name,
        ),
      );
    }
  }

  children.push(
    el("rect", {
      class: "frame",
      x: String(margin),
      y: String(margin),
      width: String(width - 2 * margin),
      height: String(height - 2 * margin),
      fill: "none",
      stroke: "#444444",
    }),
  );
  for (const tx of ticks(ex)) {
    children.push(
      el(
        "text",
        {
          class: "tick",
          x: px(tx).toFixed(2),
          y: String(height - margin + fontSize + 6),
          "text-anchor": "middle",
          fill: "#333333",
        },
        undefined,
        tx.toFixed(3),
      ),
    );
  }
  for (const ty of ticks(ey)) {
    children.push(
      el(
        "text",
        {
          class: "tick",
          x: String(margin - 6),
          y: (py(ty) + fontSize * 0.35).toFixed(2),
          "text-anchor": "end",
          fill: "#333333",
        },
        undefined,
        ty.toFixed(3),
      ),
    );
  }

  // labels first compute their collision boxes, then get nudged apart
  const labelBoxes: LabelBox[] = diagram.points.map((p) => ({
    x: px(Number(p.x)) - 6,
    y: py(Number(p.y)) + fontSize * 0.35,
    width: Math.min(p.term.length, options.labelMaxChars) * fontSize * 0.6,
    height: fontSize + 2,
  }));
  const labelYs = layoutLabels(labelBoxes);

  diagram.points.forEach((p, i) => {
    const cx = px(Number(p.x));
    const cy = py(Number(p.y));
    const color = SECTOR_COLOR[p.sector];
    const pointChildren: SceneNode[] = [
      el(
        "title",
        {},
        undefined,
        `${p.term} · co=${p.co_count} df=${p.df} · x=${p.x} y=${p.y} · sector ${p.sector}` +
          (p.dominant ? " · dominant" : ""),
      ),
    ];
    if (p.dominant) {
      pointChildren.push(
        el("circle", {
          class: "ring",
          cx: cx.toFixed(2),
          cy: cy.toFixed(2),
          r: "8",
          fill: "none",
          stroke: color,
          "stroke-width": "1.5",
        }),
      );
    }
    pointChildren.push(
      el("circle", {
        class: "marker",
        cx: cx.toFixed(2),
        cy: cy.toFixed(2),
        r: "4",
        fill: color,
      }),
      el(
        "text",
        {
          class: "label",
          x: (cx - 6).toFixed(2),
          y: labelYs[i].toFixed(2),
          "text-anchor": "end",
          fill: color,
        },
        undefined,
        elide(p.term, options.labelMaxChars),
      ),
    );
    children.push(el("g", { class: "pt", "data-term": p.term }, pointChildren));
  });

  const sx = px(Number(diagram.seed_x));
  const sy = py(Number(diagram.seed_y));
  children.push(
    el("g", { class: "seed" }, [
      el("title", {}, undefined, `${diagram.seed} · df=${diagram.seed_df} · seed`),
      el("circle", {
        class: "seed-ring",
        cx: sx.toFixed(2),
        cy: sy.toFixed(2),
        r: "9",
        fill: "none",
        stroke: SEED_COLOR,
        "stroke-width": "1.5",
      }),
      el("circle", {
        class: "seed-marker",
        cx: sx.toFixed(2),
        cy: sy.toFixed(2),
        r: "5",
        fill: SEED_COLOR,
      }),
      el(
        "text",
        {
          class: "seed-label",
          x: (sx - 12).toFixed(2),
          y: (sy + fontSize * 0.35).toFixed(2),
          "text-anchor": "end",
          "font-weight": "bold",
          fill: SEED_COLOR,
        },
        undefined,
        elide(diagram.seed, options.labelMaxChars),
      ),
    ]),
  );

  return el(
    "svg",
    {
      xmlns: "http://www.w3.org/2000/svg",
      width: String(width),
      height: String(height),
      viewBox: `0 0 ${width} ${height}`,
      "font-size": String(fontSize),
    },
    children,
  );
}

/** Depth-first search helpers used by tests and the DOM layer. */
export function findAll(node: SceneNode, predicate: (n: SceneNode) => boolean): SceneNode[] {
  const out: SceneNode[] = [];
  const walk = (n: SceneNode) => {
    if (predicate(n)) out.push(n);
    (n.children ?? []).forEach(walk);
  };
  walk(node);
  return out;
}
