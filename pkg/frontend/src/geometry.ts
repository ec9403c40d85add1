import { DiagramPayload } from "./types.js";

/**
 * Screen geometry only. Numbers parsed here position markers and bands;
 * anything the user reads comes verbatim from the payload strings.
 */

export interface Extent {
  lo: number;
  hi: number;
}

export function extent(values: number[]): Extent {
  let lo = Math.min(...values);
  let hi = Math.max(...values);
  if (hi - lo === 0) {
    return { lo: lo - 0.5, hi: hi + 0.5 };
  }
  const pad = 0.05 * (hi - lo);
  return { lo: lo - pad, hi: hi + pad };
}

export interface PlotArea {
  width: number;
  height: number;
  margin: number;
}

export function xToPx(x: number, e: Extent, area: PlotArea): number {
  return area.margin + ((x - e.lo) / (e.hi - e.lo)) * (area.width - 2 * area.margin);
}

export function yToPx(y: number, e: Extent, area: PlotArea): number {
  return area.height - area.margin - ((y - e.lo) / (e.hi - e.lo)) * (area.height - 2 * area.margin);
}

export function ticks(e: Extent, count = 5): number[] {
  const out: number[] = [];
  for (let i = 0; i < count; i++) {
    out.push(e.lo + ((e.hi - e.lo) * i) / (count - 1));
  }
  return out;
}

/**
 * Sector band edges in weight space: the y where df/df_seed crosses each
 * ratio bound. Presentation geometry for the background bands, mirroring
 * how the service draws its own SVG.
 */
export function bandEdges(d: DiagramPayload): { yAB: number; yBC: number } {
  const base = Number(d.params.base);
  const logb = (v: number) => Math.log(v) / Math.log(base);
  return {
    yAB: logb(d.n_docs / (Number(d.params.alpha) * d.seed_df)),
    yBC: logb(d.n_docs / (Number(d.params.gamma) * d.seed_df)),
  };
}
