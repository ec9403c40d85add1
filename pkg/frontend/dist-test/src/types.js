"use strict";
/**
 * Payload shapes exactly as the service emits them.
 *
 * Real-valued fields (x, y, seed_x, seed_y, base, alpha, gamma, tau) are
 * fixed 6-decimal strings on the wire. The UI displays those strings
 * verbatim and never recomputes any weight; parsing to number happens
 * only for screen geometry.
 */
Object.defineProperty(exports, "__esModule", { value: true });
exports.DEFAULT_PARAMS = void 0;
exports.DEFAULT_PARAMS = {
    minCo: 50,
    topK: null,
    base: 10,
    alpha: 0.5,
    gamma: 5.0,
    tau: 0.5,
};
