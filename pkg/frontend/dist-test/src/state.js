"use strict";
Object.defineProperty(exports, "__esModule", { value: true });
exports.ExplorationState = void 0;
/**
 * Exploration session state: where the user is, how they got there, and
 * what is on screen.
 *
 * Invariants: the history trail never holds two equal seeds in a row,
 * and the current seed is always the last trail entry.
 */
class ExplorationState {
    constructor(params) {
        this.params = params;
        this.history = [];
        this.diagram = null;
    }
    get currentSeed() {
        return this.history.length ? this.history[this.history.length - 1] : null;
    }
    get canGoBack() {
        return this.history.length > 1;
    }
    /** Record a visit; consecutive duplicates collapse. */
    visit(seed) {
        if (this.currentSeed !== seed) {
            this.history.push(seed);
        }
    }
    /** Step back one entry; returns the seed to restore, or null at the start. */
    back() {
        if (!this.canGoBack)
            return null;
        this.history.pop();
        return this.currentSeed;
    }
}
exports.ExplorationState = ExplorationState;
