"use strict";
Object.defineProperty(exports, "__esModule", { value: true });
exports.ExplorationController = void 0;
const api_js_1 = require("./api.js");
const state_js_1 = require("./state.js");
const types_js_1 = require("./types.js");
class ExplorationController {
    constructor(api, view, params = { ...types_js_1.DEFAULT_PARAMS }) {
        this.api = api;
        this.view = view;
        this.inflight = null;
        this.state = new state_js_1.ExplorationState(params);
    }
    /** Autocomplete: a failed lookup shows a banner but changes nothing. */
    async searchSeeds(prefix) {
        try {
            const payload = await this.api.terms(prefix);
            this.view.clearError();
            this.view.renderSuggestions(payload.terms);
        }
        catch (err) {
            this.view.showError(describe(err));
        }
    }
    /** Load a seed's pennant; on success it becomes the current seed. */
    async selectSeed(seed) {
        await this.load(seed, true);
    }
    /** Clicking a plotted point re-seeds on that term: the feedback loop. */
    async clickPoint(term) {
        await this.selectSeed(term);
    }
    /** Back along the history trail, restoring the previous diagram. */
    async goBack() {
        const previous = this.state.back();
        if (previous !== null) {
            await this.load(previous, false);
        }
    }
    /** Change parameters and refetch the current seed under them. */
    async setParams(patch) {
        this.state.params = { ...this.state.params, ...patch };
        const seed = this.state.currentSeed;
        if (seed !== null) {
            await this.load(seed, false);
        }
    }
    async load(seed, addToHistory) {
        // at most one in-flight request: starting a new load cancels the old
        this.inflight?.abort();
        const controller = new AbortController();
        this.inflight = controller;
        this.view.setBusy(true);
        try {
            const diagram = await this.api.pennant(seed, this.state.params, controller.signal);
            if (this.inflight !== controller)
                return; // a newer request took over
            if (addToHistory)
                this.state.visit(seed);
            this.state.diagram = diagram;
            this.view.clearError();
            this.view.renderDiagram(diagram);
            this.view.renderHistory(this.state.history, this.state.canGoBack);
        }
        catch (err) {
            if (isAbort(err))
                return; // superseded: the newer request renders
            if (err instanceof api_js_1.ApiError && err.isUnknownSeed) {
                this.view.showError(`unknown term: ${seed}`);
            }
            else {
                this.view.showError(describe(err));
            }
        }
        finally {
            if (this.inflight === controller) {
                this.inflight = null;
                this.view.setBusy(false);
            }
        }
    }
}
exports.ExplorationController = ExplorationController;
function isAbort(err) {
    return err instanceof DOMException
        ? err.name === "AbortError"
        : err instanceof Error && err.name === "AbortError";
}
function describe(err) {
    if (err instanceof api_js_1.ApiError)
        return err.message;
    if (err instanceof Error)
        return `service unreachable: ${err.message}`;
    return String(err);
}
