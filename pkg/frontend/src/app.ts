import { ApiRequestError, STALE, SearchClient } from "./api.js";
import { renderError, renderExplain, renderResults } from "./render.js";
import type { Model } from "./types.js";

export interface AppElements {
  form: HTMLFormElement;
  queryInput: HTMLInputElement;
  modelSelect: HTMLSelectElement;
  results: HTMLElement;
  explain: HTMLElement;
  status: HTMLElement;
}

export function findElements(doc: Document): AppElements {
  const get = <T extends Element>(selector: string): T => {
    const node = doc.querySelector<T>(selector);
    if (!node) throw new Error(`missing element: ${selector}`);
    return node;
  };
  return {
    form: get<HTMLFormElement>("#search-form"),
    queryInput: get<HTMLInputElement>("#query"),
    modelSelect: get<HTMLSelectElement>("#model"),
    results: get<HTMLElement>("#results"),
    explain: get<HTMLElement>("#explain"),
    status: get<HTMLElement>("#status"),
  };
}

/**
 * Wire the static page to the API. Returns the submit handler so tests
 * can drive a search without synthesizing DOM events.
 */
export function initApp(
  doc: Document,
  client: SearchClient,
  elements: AppElements = findElements(doc),
): () => Promise<void> {
  const run = async (): Promise<void> => {
    const q = elements.queryInput.value.trim();
    if (!q) return;
    const model = elements.modelSelect.value as Model;
    elements.status.textContent = "searching…";
    try {
      const [searchBody, explainBody] = await Promise.all([
        client.search(q, model),
        model === "semantic" ? client.explain(q) : Promise.resolve(STALE),
      ]);
      if (searchBody !== STALE) {
        renderResults(doc, elements.results, searchBody);
        elements.status.textContent = `${searchBody.results.length} result(s) · ${model}`;
      }
      if (explainBody !== STALE) {
        renderExplain(doc, elements.explain, explainBody);
      } else if (model === "lucene") {
        elements.explain.replaceChildren();
      }
    } catch (err) {
      const message =
        err instanceof ApiRequestError ? err.message : "request failed";
      renderError(doc, elements.results, message);
      elements.explain.replaceChildren();
      elements.status.textContent = "error";
    }
  };

  elements.form.addEventListener("submit", (event) => {
    event.preventDefault();
    void run();
  });
  return run;
}

export function main(): void {
  const client = new SearchClient(
    (window as { GEOSEARCH_API?: string }).GEOSEARCH_API ?? "http://127.0.0.1:8080",
  );
  initApp(document, client);
}
