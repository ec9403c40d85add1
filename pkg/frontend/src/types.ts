/**
 * Payload shapes exactly as the service emits them.
 *
 * Real-valued fields (x, y, seed_x, seed_y, base, alpha, gamma, tau) are
 * fixed 6-decimal strings on the wire. The UI displays those strings
 * verbatim and never recomputes any weight; parsing to number happens
 * only for screen geometry.
 */

export type Sector = "A" | "B" | "C";

export interface PointPayload {
  term: string;
  co_count: number;
  df: number;
  x: string;
  y: string;
  sector: Sector;
  dominant: boolean;
}

export interface DiagramParamsPayload {
  base: string;
  n_override: number | null;
  min_co: number;
  top_k: number | null;
  alpha: string;
  gamma: string;
  tau: string;
}

export interface DiagramPayload {
  seed: string;
  seed_df: number;
  seed_x: string;
  seed_y: string;
  n_docs: number;
  params: DiagramParamsPayload;
  points: PointPayload[];
}

export interface TermSuggestion {
  term: string;
  df: number;
}

export interface TermsPayload {
  prefix: string;
  terms: TermSuggestion[];
}

/** Values the parameter panel controls; sent as query parameters. */
export interface QueryParams {
  minCo: number;
  topK: number | null;
  base: number;
  alpha: number;
  gamma: number;
  tau: number;
}

export const DEFAULT_PARAMS: QueryParams = {
  minCo: 50,
  topK: null,
  base: 10,
  alpha: 0.5,
  gamma: 5.0,
  tau: 0.5,
};
