import { DiagramPayload } from "../src/types.js";

/**
 * Frozen service payload: C6 corpus, seed A, min_co 1, defaults
 * otherwise. Byte-for-byte what /pennant returns for that fixture.
 */
export const C6_SEED_A: DiagramPayload = {
  seed: "A",
  seed_df: 4,
  seed_x: "1.602060",
  seed_y: "0.176091",
  n_docs: 6,
  params: {
    base: "10.000000",
    n_override: null,
    min_co: 1,
    top_k: null,
    alpha: "0.500000",
    gamma: "5.000000",
    tau: "0.500000",
  },
  points: [
    { term: "B", co_count: 2, df: 3, x: "1.301030", y: "0.301030", sector: "B", dominant: false },
    { term: "C", co_count: 2, df: 4, x: "1.301030", y: "0.176091", sector: "B", dominant: false },
  ],
};

/** Wide-spread synthetic payload where all three sector bands are visible. */
export const THREE_BANDS: DiagramPayload = {
  seed: "Seed Term",
  seed_df: 10,
  seed_x: "2.000000",
  seed_y: "2.000000",
  n_docs: 1000,
  params: {
    base: "10.000000",
    n_override: null,
    min_co: 1,
    top_k: null,
    alpha: "0.500000",
    gamma: "5.000000",
    tau: "0.500000",
  },
  points: [
    { term: "Narrow One", co_count: 4, df: 1, x: "1.602060", y: "3.000000", sector: "A", dominant: false },
    { term: "Peerish", co_count: 6, df: 12, x: "1.778151", y: "1.920819", sector: "B", dominant: false },
    { term: "Very Broad", co_count: 9, df: 316, x: "1.954243", y: "0.500313", sector: "C", dominant: true },
  ],
};
