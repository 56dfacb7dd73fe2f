/** JSON shapes served by the search API. */

export type Model = "semantic" | "lucene";

export const COMPONENTS = ["platial", "spatial", "concept", "doc"] as const;
export type Component = (typeof COMPONENTS)[number];

/** [west, south, east, north] in degrees. */
export type Bbox = [number, number, number, number];

export interface Breakdown {
  platial: number;
  spatial: number;
  concept: number;
  doc: number;
  platial_n: number;
  spatial_n: number;
  concept_n: number;
  doc_n: number;
  lambdas: Partial<Record<Component, number>>;
  matched_terms: Record<string, string[]>;
  kernel_distances_km: Record<string, number>;
}

export interface SearchResult {
  id: string;
  title: string;
  snippet: string;
  score: number;
  bbox: Bbox | null;
  breakdown?: Breakdown;
}

export interface SearchResponse {
  query: string;
  model: Model;
  results: SearchResult[];
}

export interface PlaceExpansionTerm {
  phrase: string;
  weight: number;
  kind: "self" | "subdivision";
}

export interface ExplainPlace {
  place_id: string;
  name: string;
  weight: number;
  expansion: PlaceExpansionTerm[];
}

export interface ThematicExpansionTerm {
  word: string;
  weight: number;
  cosine: number;
}

export interface ExplainTerm {
  term: string;
  weight: number;
  expansion: ThematicExpansionTerm[];
}

export interface ExplainResponse {
  query: string;
  places: ExplainPlace[];
  thematic_terms: ExplainTerm[];
}

export interface ApiError {
  error: string;
}
