import { ApiError, PennantApi } from "./api.js";
import { ExplorationState } from "./state.js";
import { DEFAULT_PARAMS, DiagramPayload, QueryParams, TermSuggestion } from "./types.js";

/**
 * The browse loop, independent of the DOM: pick a seed, read the
 * pennant, click a term to make it the next seed. A view implementation
 * receives everything to draw; tests plug in a recorder.
 */

export interface View {
  renderDiagram(diagram: DiagramPayload): void;
  renderHistory(trail: readonly string[], canGoBack: boolean): void;
  renderSuggestions(suggestions: TermSuggestion[]): void;
  showError(message: string): void;
  clearError(): void;
  setBusy(busy: boolean): void;
}

export class ExplorationController {
  readonly state: ExplorationState;
  private inflight: AbortController | null = null;

  constructor(
    private readonly api: PennantApi,
    private readonly view: View,
    params: QueryParams = { ...DEFAULT_PARAMS },
  ) {
    this.state = new ExplorationState(params);
  }

  /** Autocomplete: a failed lookup shows a banner but changes nothing. */
  async searchSeeds(prefix: string): Promise<void> {
    try {
      const payload = await this.api.terms(prefix);
      this.view.clearError();
      this.view.renderSuggestions(payload.terms);
    } catch (err) {
      this.view.showError(describe(err));
    }
  }

  /** Load a seed's pennant; on success it becomes the current seed. */
  async selectSeed(seed: string): Promise<void> {
    await this.load(seed, true);
  }

  /** Clicking a plotted point re-seeds on that term: the feedback loop. */
  async clickPoint(term: string): Promise<void> {
    await this.selectSeed(term);
  }

  /** Back along the history trail, restoring the previous diagram. */
  async goBack(): Promise<void> {
    const previous = this.state.back();
    if (previous !== null) {
      await this.load(previous, false);
    }
  }

  /** Change parameters and refetch the current seed under them. */
  async setParams(patch: Partial<QueryParams>): Promise<void> {
    this.state.params = { ...this.state.params, ...patch };
    const seed = this.state.currentSeed;
    if (seed !== null) {
      await this.load(seed, false);
    }
  }

  private async load(seed: string, addToHistory: boolean): Promise<void> {
    // at most one in-flight request: starting a new load cancels the old
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    this.view.setBusy(true);
    try {
      const diagram = await this.api.pennant(seed, this.state.params, controller.signal);
      if (this.inflight !== controller) return; // a newer request took over
      if (addToHistory) this.state.visit(seed);
      this.state.diagram = diagram;
      this.view.clearError();
      this.view.renderDiagram(diagram);
      this.view.renderHistory(this.state.history, this.state.canGoBack);
    } catch (err) {
      if (isAbort(err)) return; // superseded: the newer request renders
      if (err instanceof ApiError && err.isUnknownSeed) {
        this.view.showError(`unknown term: ${seed}`);
      } else {
        this.view.showError(describe(err));
      }
    } finally {
      if (this.inflight === controller) {
        this.inflight = null;
        this.view.setBusy(false);
      }
    }
  }
}

function isAbort(err: unknown): boolean {
  return err instanceof DOMException
    ? err.name === "AbortError"
    : err instanceof Error && err.name === "AbortError";
}

function describe(err: unknown): string {
  if (err instanceof ApiError) return err.message;
  if (err instanceof Error) return `service unreachable: ${err.message}`;
  return String(err);
}
