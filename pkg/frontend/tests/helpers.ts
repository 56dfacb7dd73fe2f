import type { FetchLike } from "../src/api.js";
import type { Breakdown, SearchResponse, SearchResult } from "../src/types.js";

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

/** Fetch stub that serves canned bodies keyed by URL substring. */
export function stubFetch(
  routes: Array<[match: string, body: unknown, status?: number]>,
): FetchLike & { calls: string[] } {
  const calls: string[] = [];
  const impl = async (url: string): Promise<Response> => {
    calls.push(url);
    for (const [match, body, status] of routes) {
      if (url.includes(match)) return jsonResponse(body, status ?? 200);
    }
    return jsonResponse({ error: "not stubbed" }, 500);
  };
  return Object.assign(impl, { calls });
}

export function makeBreakdown(overrides: Partial<Breakdown> = {}): Breakdown {
  return {
    platial: 2.0,
    spatial: 0.8,
    concept: 1.1,
    doc: 0.4,
    platial_n: 1.0,
    spatial_n: 0.5,
    concept_n: 0.25,
    doc_n: 0.1,
    lambdas: { platial: 0.25, spatial: 0.25, concept: 0.25, doc: 0.25 },
    matched_terms: { title: ["chicago"] },
    kernel_distances_km: { chicago: 3.2 },
    ...overrides,
  };
}

export function makeResult(overrides: Partial<SearchResult> = {}): SearchResult {
  return {
    id: "item-1",
    title: "Chicago Traffic Counts",
    snippet: "Daily traffic counts",
    score: 0.8123,
    bbox: [-88.0, 41.6, -87.5, 42.1],
    breakdown: makeBreakdown(),
    ...overrides,
  };
}

export function makeSearchResponse(
  results: SearchResult[],
  model: "semantic" | "lucene" = "semantic",
): SearchResponse {
  return { query: "q", model, results };
}
