"""HTTP JSON API over an assembled engine (consumed by the web UI)."""
from __future__ import annotations

import logging

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .catalog import CatalogItem
from .errors import EmptyQueryError
from .scoring import ScoreBreakdown
from .service import Engine

logger = logging.getLogger(__name__)

MODELS = ("semantic", "lucene")


def _f(x: float) -> float:
    """Fixed float formatting: 6 decimals, deterministic across runs."""
    return float(f"{x:.6f}")


def _bbox_json(item: CatalogItem) -> list[float] | None:
    if item.bbox is None:
        return None
    b = item.bbox
    return [_f(b.west), _f(b.south), _f(b.east), _f(b.north)]


def _item_json(item: CatalogItem) -> dict:
    record: dict = {
        "id": item.id,
        "title": item.title,
        "snippet": item.snippet,
        "description": item.description,
        "type": item.item_type,
    }
    record["location"] = (
        {"lat": _f(item.location.lat), "lon": _f(item.location.lon)}
        if item.location
        else None
    )
    record["bbox"] = _bbox_json(item)
    return record


def _breakdown_json(b: ScoreBreakdown) -> dict:
    return {
        "platial": _f(b.platial),
        "spatial": _f(b.spatial),
        "concept": _f(b.concept),
        "doc": _f(b.doc),
        "platial_n": _f(b.platial_n),
        "spatial_n": _f(b.spatial_n),
        "concept_n": _f(b.concept_n),
        "doc_n": _f(b.doc_n),
        "lambdas": {name: _f(v) for name, v in sorted(b.lambdas.items())},
        "matched_terms": {f: list(ts) for f, ts in sorted(b.matched_terms.items())},
        "kernel_distances_km": {
            pid: _f(d) for pid, d in sorted(b.kernel_distances_km.items())
        },
    }


def _error(status: int, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": message})


def create_app(engine: Engine) -> FastAPI:
    app = FastAPI(title="geosearch", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    @app.get("/api/health")
    def health() -> JSONResponse:
        return JSONResponse(
            content={"status": "ok", "items": len(engine.catalog), "places": len(engine.gazetteer)}
        )

    @app.get("/api/search")
    def search(q: str = "", model: str = "semantic", k: int = 10) -> JSONResponse:
        q = q.strip()
        if not q:
            return _error(400, "missing query parameter 'q'")
        if model not in MODELS:
            return _error(400, f"unknown model {model!r}; expected one of {list(MODELS)}")
        if k < 1:
            return _error(400, "'k' must be >= 1")
        try:
            if model == "lucene":
                results = [
                    {
                        "id": item_id,
                        "title": engine.catalog.lookup(item_id).title,
                        "snippet": engine.catalog.lookup(item_id).snippet,
                        "score": _f(score),
                        "bbox": _bbox_json(engine.catalog.lookup(item_id)),
                    }
                    for item_id, score in engine.baseline_search(q, k)
                ]
            else:
                _, breakdowns = engine.semantic_search(q, k, explain=True)
                results = []
                for b in breakdowns:
                    item = engine.catalog.lookup(b.item_id)
                    results.append(
                        {
                            "id": b.item_id,
                            "title": item.title,
                            "snippet": item.snippet,
                            "score": _f(b.combined),
                            "breakdown": _breakdown_json(b),
                            "bbox": _bbox_json(item),
                        }
                    )
        except EmptyQueryError:
            return _error(400, "query has no searchable terms")
        except Exception:  # internals never leak to clients
            logger.exception("search failed for q=%r model=%r", q, model)
            return _error(500, "internal error")
        return JSONResponse(content={"query": q, "model": model, "results": results})

    @app.get("/api/explain")
    def explain(q: str = "") -> JSONResponse:
        q = q.strip()
        if not q:
            return _error(400, "missing query parameter 'q'")
        try:
            pq = engine.parse(q)
            platial, thematic = engine.expansions(pq)
        except EmptyQueryError:
            return _error(400, "query has no searchable terms")
        except Exception:
            logger.exception("explain failed for q=%r", q)
            return _error(500, "internal error")
        return JSONResponse(
            content={
                "query": q,
                "places": [
                    {
                        "place_id": place.place_id,
                        "name": place.canonical_name,
                        "weight": _f(w),
                        "expansion": [
                            {"phrase": t.phrase, "weight": _f(t.weight), "kind": t.kind}
                            for t in platial[place.place_id].terms
                        ],
                    }
                    for place, w in pq.places
                ],
                "thematic_terms": [
                    {
                        "term": token.surface,
                        "weight": _f(w),
                        "expansion": [
                            {"word": t.word, "weight": _f(t.weight), "cosine": _f(t.cosine)}
                            for t in thematic[token.surface].terms
                        ],
                    }
                    for token, w in pq.thematic_terms
                ],
            }
        )

    @app.get("/api/item/{item_id}")
    def item(item_id: str) -> JSONResponse:
        found = engine.catalog.lookup(item_id)
        if found is None:
            return _error(404, f"no item with id {item_id!r}")
        return JSONResponse(content=_item_json(found))

    return app
