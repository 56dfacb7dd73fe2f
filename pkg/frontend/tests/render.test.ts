import { describe, expect, it } from "vitest";

import {
  renderBboxInset,
  renderBreakdown,
  renderError,
  renderExplain,
  renderResults,
} from "../src/render.js";
import type { ExplainResponse } from "../src/types.js";
import { makeBreakdown, makeResult, makeSearchResponse } from "./helpers.js";

describe("renderBreakdown", () => {
  it("draws one bar per component with width proportional to the normalized score", () => {
    const node = renderBreakdown(document, makeBreakdown());
    const widths = Array.from(node.querySelectorAll<HTMLElement>(".bar")).map(
      (bar) => bar.style.width,
    );
    expect(widths).toEqual(["100.0%", "50.0%", "25.0%", "10.0%"]);
  });

  it("orders rows platial, spatial, concept, doc", () => {
    const node = renderBreakdown(document, makeBreakdown());
    const names = Array.from(node.querySelectorAll<HTMLElement>(".breakdown-row")).map(
      (row) => row.dataset.component,
    );
    expect(names).toEqual(["platial", "spatial", "concept", "doc"]);
  });

  it("marks components absent from the lambda mix as inactive", () => {
    const breakdown = makeBreakdown({ lambdas: { concept: 0.5, doc: 0.5 } });
    const node = renderBreakdown(document, breakdown);
    const inactive = Array.from(
      node.querySelectorAll<HTMLElement>(".breakdown-row.inactive"),
    ).map((row) => row.dataset.component);
    expect(inactive).toEqual(["platial", "spatial"]);
  });

  it("clamps bar widths into [0, 100]%", () => {
    const node = renderBreakdown(document, makeBreakdown({ platial_n: 1.7, doc_n: -0.2 }));
    const bars = node.querySelectorAll<HTMLElement>(".bar");
    expect(bars[0].style.width).toBe("100.0%");
    expect(bars[3].style.width).toBe("0.0%");
  });
});

describe("renderBboxInset", () => {
  it("projects the box onto the equirectangular frame", () => {
    // a box spanning the west half of the northern hemisphere
    const svg = renderBboxInset(document, [-180, 0, 0, 90]);
    const extent = svg.querySelector(".bbox-extent")!;
    expect(extent.getAttribute("x")).toBe("0.00");
    expect(extent.getAttribute("y")).toBe("0.00");
    expect(extent.getAttribute("width")).toBe("60.00");
    expect(extent.getAttribute("height")).toBe("30.00");
  });

  it("keeps tiny boxes visible with a minimum size", () => {
    const svg = renderBboxInset(document, [10, 10, 10.01, 10.01]);
    const extent = svg.querySelector(".bbox-extent")!;
    expect(Number(extent.getAttribute("width"))).toBeGreaterThanOrEqual(1.5);
    expect(Number(extent.getAttribute("height"))).toBeGreaterThanOrEqual(1.5);
  });
});

describe("renderResults", () => {
  it("renders a ranked card per result", () => {
    const container = document.createElement("div");
    const response = makeSearchResponse([
      makeResult({ id: "a", title: "First" }),
      makeResult({ id: "b", title: "Second", breakdown: undefined, bbox: null }),
    ]);
    renderResults(document, container, response);
    const cards = container.querySelectorAll(".result");
    expect(cards).toHaveLength(2);
    expect(cards[0].querySelector(".result-rank")!.textContent).toBe("1");
    expect(cards[0].querySelector(".result-title")!.textContent).toBe("First");
    expect(cards[0].querySelectorAll(".bar")).toHaveLength(4);
    expect(cards[0].querySelector("svg.bbox-inset")).not.toBeNull();
    // lucene-style results carry no breakdown and may lack a bbox
    expect(cards[1].querySelectorAll(".bar")).toHaveLength(0);
    expect(cards[1].querySelector("svg.bbox-inset")).toBeNull();
  });

  it("replaces previous content and shows an empty notice", () => {
    const container = document.createElement("div");
    renderResults(document, container, makeSearchResponse([makeResult()]));
    renderResults(document, container, makeSearchResponse([]));
    expect(container.querySelectorAll(".result")).toHaveLength(0);
    expect(container.querySelector(".empty")!.textContent).toBe("No results.");
  });
});

describe("renderExplain", () => {
  const response: ExplainResponse = {
    query: "chicago traffic",
    places: [
      {
        place_id: "chicago",
        name: "Chicago",
        weight: 1.0,
        expansion: [
          { phrase: "chicago", weight: 0.5, kind: "self" },
          { phrase: "belmont cragin", weight: 0.25, kind: "subdivision" },
        ],
      },
    ],
    thematic_terms: [
      {
        term: "traffic",
        weight: 1.0,
        expansion: [
          { word: "traffic", weight: 0.6, cosine: 1.0 },
          { word: "congestion", weight: 0.4, cosine: 0.8 },
        ],
      },
    ],
  };

  it("lists place and term expansions with weights", () => {
    const container = document.createElement("aside");
    renderExplain(document, container, response);
    expect(container.querySelector(".explain-place strong")!.textContent).toBe(
      "Chicago (1.00)",
    );
    const placeItems = Array.from(
      container.querySelectorAll(".explain-place .expansion li"),
    ).map((li) => li.textContent);
    expect(placeItems).toEqual(["chicago — 0.500", "belmont cragin — 0.250"]);
    const termItems = Array.from(
      container.querySelectorAll(".explain-term .expansion li"),
    ).map((li) => li.textContent);
    expect(termItems).toEqual([
      "traffic — 0.600 (cos 1.00)",
      "congestion — 0.400 (cos 0.80)",
    ]);
  });

  it("shows a notice when nothing was recognized", () => {
    const container = document.createElement("aside");
    renderExplain(document, container, {
      query: "x",
      places: [],
      thematic_terms: [],
    });
    expect(container.querySelector(".empty")!.textContent).toBe("Nothing recognized.");
  });
});

describe("renderError", () => {
  it("replaces the container with the message", () => {
    const container = document.createElement("div");
    renderResults(document, container, makeSearchResponse([makeResult()]));
    renderError(document, container, "query has no searchable terms");
    expect(container.querySelectorAll(".result")).toHaveLength(0);
    expect(container.querySelector(".error")!.textContent).toBe(
      "query has no searchable terms",
    );
  });
});
