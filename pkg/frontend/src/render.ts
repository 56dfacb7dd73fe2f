import type {
  Bbox,
  Breakdown,
  Component,
  ExplainResponse,
  SearchResponse,
  SearchResult,
} from "./types.js";
import { COMPONENTS } from "./types.js";

const COMPONENT_LABELS: Record<Component, string> = {
  platial: "place names",
  spatial: "distance",
  concept: "related terms",
  doc: "document similarity",
};

function el<K extends keyof HTMLElementTagNameMap>(
  doc: Document,
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = doc.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

/**
 * Horizontal bar chart of the four normalized score components. Bar
 * widths are percentages of the per-query component maximum, so a full
 * bar reads as "best candidate on this signal".
 */
export function renderBreakdown(doc: Document, breakdown: Breakdown): HTMLElement {
  const wrap = el(doc, "div", "breakdown");
  for (const name of COMPONENTS) {
    const normalized = breakdown[`${name}_n`];
    const row = el(doc, "div", "breakdown-row");
    row.dataset.component = name;
    row.appendChild(el(doc, "span", "breakdown-label", COMPONENT_LABELS[name]));
    const track = el(doc, "div", "bar-track");
    const bar = el(doc, "div", `bar bar-${name}`);
    bar.style.width = `${(Math.max(0, Math.min(1, normalized)) * 100).toFixed(1)}%`;
    track.appendChild(bar);
    row.appendChild(track);
    row.appendChild(el(doc, "span", "breakdown-value", normalized.toFixed(3)));
    if (!(name in breakdown.lambdas)) row.classList.add("inactive");
    wrap.appendChild(row);
  }
  return wrap;
}

/**
 * Schematic extent inset: the item's bounding box drawn on a small
 * equirectangular world frame (longitude straight to x, latitude to y).
 */
export function renderBboxInset(doc: Document, bbox: Bbox): SVGSVGElement {
  const [west, south, east, north] = bbox;
  const width = 120;
  const height = 60;
  const x = ((west + 180) / 360) * width;
  const y = ((90 - north) / 180) * height;
  const w = Math.max((((east - west + 360) % 360) / 360) * width, 1.5);
  const h = Math.max(((north - south) / 180) * height, 1.5);

  const svgNs = "http://www.w3.org/2000/svg";
  const svg = doc.createElementNS(svgNs, "svg");
  svg.setAttribute("class", "bbox-inset");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("role", "img");
  const frame = doc.createElementNS(svgNs, "rect");
  frame.setAttribute("class", "bbox-world");
  frame.setAttribute("x", "0");
  frame.setAttribute("y", "0");
  frame.setAttribute("width", String(width));
  frame.setAttribute("height", String(height));
  svg.appendChild(frame);
  const equator = doc.createElementNS(svgNs, "line");
  equator.setAttribute("class", "bbox-equator");
  equator.setAttribute("x1", "0");
  equator.setAttribute("y1", String(height / 2));
  equator.setAttribute("x2", String(width));
  equator.setAttribute("y2", String(height / 2));
  svg.appendChild(equator);
  const box = doc.createElementNS(svgNs, "rect");
  box.setAttribute("class", "bbox-extent");
  box.setAttribute("x", x.toFixed(2));
  box.setAttribute("y", y.toFixed(2));
  box.setAttribute("width", w.toFixed(2));
  box.setAttribute("height", h.toFixed(2));
  svg.appendChild(box);
  return svg;
}

function renderResult(doc: Document, result: SearchResult, rank: number): HTMLElement {
  const card = el(doc, "article", "result");
  card.dataset.itemId = result.id;
  const head = el(doc, "header", "result-head");
  head.appendChild(el(doc, "span", "result-rank", String(rank)));
  head.appendChild(el(doc, "h3", "result-title", result.title));
  head.appendChild(el(doc, "span", "result-score", result.score.toFixed(4)));
  card.appendChild(head);
  if (result.snippet) card.appendChild(el(doc, "p", "result-snippet", result.snippet));
  const detail = el(doc, "div", "result-detail");
  if (result.breakdown) detail.appendChild(renderBreakdown(doc, result.breakdown));
  if (result.bbox) detail.appendChild(renderBboxInset(doc, result.bbox));
  if (detail.childNodes.length) card.appendChild(detail);
  return card;
}

export function renderResults(doc: Document, container: HTMLElement, response: SearchResponse): void {
  container.replaceChildren();
  if (response.results.length === 0) {
    container.appendChild(el(doc, "p", "empty", "No results."));
    return;
  }
  response.results.forEach((result, index) => {
    container.appendChild(renderResult(doc, result, index + 1));
  });
}

export function renderError(doc: Document, container: HTMLElement, message: string): void {
  container.replaceChildren(el(doc, "p", "error", message));
}

/** Query-interpretation panel: recognized places and expanded terms. */
export function renderExplain(doc: Document, container: HTMLElement, response: ExplainResponse): void {
  container.replaceChildren();
  if (response.places.length) {
    container.appendChild(el(doc, "h4", undefined, "Places"));
    for (const place of response.places) {
      const block = el(doc, "div", "explain-place");
      block.appendChild(
        el(doc, "strong", undefined, `${place.name} (${place.weight.toFixed(2)})`),
      );
      const list = el(doc, "ul", "expansion");
      for (const term of place.expansion) {
        list.appendChild(
          el(doc, "li", `expansion-${term.kind}`,
             `${term.phrase} — ${term.weight.toFixed(3)}`),
        );
      }
      block.appendChild(list);
      container.appendChild(block);
    }
  }
  if (response.thematic_terms.length) {
    container.appendChild(el(doc, "h4", undefined, "Terms"));
    for (const term of response.thematic_terms) {
      const block = el(doc, "div", "explain-term");
      block.appendChild(
        el(doc, "strong", undefined, `${term.term} (${term.weight.toFixed(2)})`),
      );
      const list = el(doc, "ul", "expansion");
      for (const neighbor of term.expansion) {
        list.appendChild(
          el(doc, "li", undefined,
             `${neighbor.word} — ${neighbor.weight.toFixed(3)} (cos ${neighbor.cosine.toFixed(2)})`),
        );
      }
      block.appendChild(list);
      container.appendChild(block);
    }
  }
  if (!container.childNodes.length) {
    container.appendChild(el(doc, "p", "empty", "Nothing recognized."));
  }
}
