import { DiagramPayload, QueryParams } from "./types.js";

/**
 * Exploration session state: where the user is, how they got there, and
 * what is on screen.
 *
 * Invariants: the history trail never holds two equal seeds in a row,
 * and the current seed is always the last trail entry.
 */
export class ExplorationState {
  readonly history: string[] = [];
  diagram: DiagramPayload | null = null;

  constructor(public params: QueryParams) {}

  get currentSeed(): string | null {
    return this.history.length ? this.history[this.history.length - 1] : null;
  }

  get canGoBack(): boolean {
    return this.history.length > 1;
  }

  /** Record a visit; consecutive duplicates collapse. */
  visit(seed: string): void {
    if (this.currentSeed !== seed) {
      this.history.push(seed);
    }
  }

  /** Step back one entry; returns the seed to restore, or null at the start. */
  back(): string | null {
    if (!this.canGoBack) return null;
    this.history.pop();
    return this.currentSeed;
  }
}
