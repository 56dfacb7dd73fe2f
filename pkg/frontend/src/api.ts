import type { ExplainResponse, Model, SearchResponse } from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiRequestError extends Error {
  constructor(
    message: string,
    readonly status: number,
  ) {
    super(message);
    this.name = "ApiRequestError";
  }
}

/** Marker resolved by requests that were superseded before completing. */
export const STALE: unique symbol = Symbol("stale");
export type Stale = typeof STALE;

async function getJson<T>(
  fetchImpl: FetchLike,
  url: string,
  signal?: AbortSignal,
): Promise<T> {
  const response = await fetchImpl(url, { signal });
  const body = await response.json();
  if (!response.ok) {
    const message =
      typeof body?.error === "string" ? body.error : `HTTP ${response.status}`;
    throw new ApiRequestError(message, response.status);
  }
  return body as T;
}

/**
 * Thin client over the search API. Search and explain calls are
 * sequence-numbered: when a newer call of the same kind starts, every
 * in-flight older call is aborted and resolves to STALE, so the UI can
 * never paint an out-of-date response over a fresh one.
 */
export class SearchClient {
  private searchSeq = 0;
  private explainSeq = 0;
  private searchAbort: AbortController | null = null;
  private explainAbort: AbortController | null = null;

  constructor(
    readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  searchUrl(q: string, model: Model, k: number): string {
    const params = new URLSearchParams({ q, model, k: String(k) });
    return `${this.baseUrl}/api/search?${params}`;
  }

  explainUrl(q: string): string {
    const params = new URLSearchParams({ q });
    return `${this.baseUrl}/api/explain?${params}`;
  }

  async search(
    q: string,
    model: Model,
    k = 10,
  ): Promise<SearchResponse | Stale> {
    const seq = ++this.searchSeq;
    this.searchAbort?.abort();
    const abort = new AbortController();
    this.searchAbort = abort;
    try {
      const body = await getJson<SearchResponse>(
        this.fetchImpl,
        this.searchUrl(q, model, k),
        abort.signal,
      );
      return seq === this.searchSeq ? body : STALE;
    } catch (err) {
      if (seq !== this.searchSeq) return STALE;
      throw err;
    }
  }

  async explain(q: string): Promise<ExplainResponse | Stale> {
    const seq = ++this.explainSeq;
    this.explainAbort?.abort();
    const abort = new AbortController();
    this.explainAbort = abort;
    try {
      const body = await getJson<ExplainResponse>(
        this.fetchImpl,
        this.explainUrl(q),
        abort.signal,
      );
      return seq === this.explainSeq ? body : STALE;
    } catch (err) {
      if (seq !== this.explainSeq) return STALE;
      throw err;
    }
  }
}
