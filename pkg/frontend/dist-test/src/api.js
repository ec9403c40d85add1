"use strict";
Object.defineProperty(exports, "__esModule", { value: true });
exports.PennantApi = exports.ApiError = void 0;
/** Error from the service, carrying the HTTP status and decoded body. */
class ApiError extends Error {
    constructor(status, message, body = null) {
        super(message);
        this.status = status;
        this.body = body;
        this.name = "ApiError";
    }
    get isUnknownSeed() {
        return this.status === 404;
    }
}
exports.ApiError = ApiError;
class PennantApi {
    constructor(baseUrl, fetchFn) {
        this.baseUrl = baseUrl;
        // wrap instead of referencing fetch directly: browsers require the
        // window receiver
        this.fetchFn = fetchFn ?? ((url, init) => fetch(url, init));
    }
    async terms(prefix, limit = 20) {
        const url = new URL(`${this.baseUrl}/terms`);
        url.searchParams.set("prefix", prefix);
        url.searchParams.set("limit", String(limit));
        return this.request(url.toString());
    }
    async pennant(seed, params, signal) {
        return this.request(this.pennantUrl("/pennant", seed, params), signal);
    }
    pennantSvgUrl(seed, params) {
        return this.pennantUrl("/pennant.svg", seed, params);
    }
    pennantUrl(path, seed, params) {
        const url = new URL(`${this.baseUrl}${path}`);
        url.searchParams.set("seed", seed);
        url.searchParams.set("min_co", String(params.minCo));
        if (params.topK !== null)
            url.searchParams.set("top_k", String(params.topK));
        url.searchParams.set("base", String(params.base));
        url.searchParams.set("alpha", String(params.alpha));
        url.searchParams.set("gamma", String(params.gamma));
        url.searchParams.set("tau", String(params.tau));
        return url.toString();
    }
    async request(url, signal) {
        const response = await this.fetchFn(url, { signal });
        if (!response.ok) {
            let body = null;
            let message = `service returned ${response.status}`;
            try {
                body = await response.json();
                const err = body.error;
                if (err)
                    message = err;
            }
            catch {
                // non-JSON error body: keep the status message
            }
            throw new ApiError(response.status, message, body);
        }
        return (await response.json());
    }
}
exports.PennantApi = PennantApi;
