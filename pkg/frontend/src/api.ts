import { DiagramPayload, QueryParams, TermsPayload } from "./types.js";

/** Error from the service, carrying the HTTP status and decoded body. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
    readonly body: unknown = null,
  ) {
    super(message);
    this.name = "ApiError";
  }

  get isUnknownSeed(): boolean {
    return this.status === 404;
  }
}

type FetchLike = (url: string, init?: { signal?: AbortSignal }) => Promise<Response>;

export class PennantApi {
  private readonly fetchFn: FetchLike;

  constructor(
    readonly baseUrl: string,
    fetchFn?: FetchLike,
  ) {
    // wrap instead of referencing fetch directly: browsers require the
    // window receiver
    this.fetchFn = fetchFn ?? ((url, init) => fetch(url, init));
  }

  async terms(prefix: string, limit = 20): Promise<TermsPayload> {
    const url = new URL(`${this.baseUrl}/terms`);
    url.searchParams.set("prefix", prefix);
    url.searchParams.set("limit", String(limit));
    return this.request<TermsPayload>(url.toString());
  }

  async pennant(seed: string, params: QueryParams, signal?: AbortSignal): Promise<DiagramPayload> {
    return this.request<DiagramPayload>(this.pennantUrl("/pennant", seed, params), signal);
  }

  pennantSvgUrl(seed: string, params: QueryParams): string {
    return this.pennantUrl("/pennant.svg", seed, params);
  }

  private pennantUrl(path: string, seed: string, params: QueryParams): string {
    const url = new URL(`${this.baseUrl}${path}`);
    url.searchParams.set("seed", seed);
    url.searchParams.set("min_co", String(params.minCo));
    if (params.topK !== null) url.searchParams.set("top_k", String(params.topK));
    url.searchParams.set("base", String(params.base));
    url.searchParams.set("alpha", String(params.alpha));
    url.searchParams.set("gamma", String(params.gamma));
    url.searchParams.set("tau", String(params.tau));
    return url.toString();
  }

  private async request<T>(url: string, signal?: AbortSignal): Promise<T> {
    const response = await this.fetchFn(url, { signal });
    if (!response.ok) {
      let body: unknown = null;
      let message = `service returned ${response.status}`;
      try {
        body = await response.json();
        const err = (body as { error?: string }).error;
        if (err) message = err;
      } catch {
        // non-JSON error body: keep the status message
      }
      throw new ApiError(response.status, message, body);
    }
    return (await response.json()) as T;
  }
}
