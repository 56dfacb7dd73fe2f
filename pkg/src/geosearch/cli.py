"""Command-line interface: index, search, explain, eval, serve."""
from __future__ import annotations

import argparse
import json
import sys

from .evaluation import comparison_report, load_judgments, load_runs
from .service import assemble_engine, load_config


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="geosearch")
    sub = parser.add_subparsers(dest="command", required=True)

    p_index = sub.add_parser("index", help="build the engine and report corpus stats")
    p_index.add_argument("--config", required=True)

    p_search = sub.add_parser("search", help="run one query")
    p_search.add_argument("--config", required=True)
    p_search.add_argument("--q", required=True)
    p_search.add_argument("--model", choices=["semantic", "lucene"], default="semantic")
    p_search.add_argument("--k", type=int, default=10)

    p_explain = sub.add_parser("explain", help="show the parsed and expanded query")
    p_explain.add_argument("--config", required=True)
    p_explain.add_argument("--q", required=True)

    p_eval = sub.add_parser("eval", help="compare two run files against judgments")
    p_eval.add_argument("--config", required=False, default=None)
    p_eval.add_argument("--runs", required=True)
    p_eval.add_argument("--judgments", required=True)
    p_eval.add_argument("--k", default="3,5,10", help="comma-separated cutoffs")
    p_eval.add_argument("--out", default=None, help="write the report here instead of stdout")

    p_serve = sub.add_parser("serve", help="run the HTTP API")
    p_serve.add_argument("--config", required=True)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)

    if args.command == "eval":
        runs = load_runs(args.runs)
        judgments = load_judgments(args.judgments)
        ks = [int(v) for v in args.k.split(",")]
        report = comparison_report(runs, judgments, ks)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(report)
        else:
            sys.stdout.write(report)
        return 0

    engine = assemble_engine(load_config(args.config))

    if args.command == "index":
        print(f"items: {len(engine.catalog)}")
        print(f"skipped records: {engine.catalog.skipped}")
        print(f"terms: {len(engine.index.postings)}")
        print(f"places: {len(engine.gazetteer)}")
        print(f"embedding vocabulary: {len(engine.table)} (dim {engine.table.dimension})")
        return 0

    if args.command == "search":
        if args.model == "lucene":
            for rank, (item_id, score) in enumerate(engine.baseline_search(args.q, args.k), 1):
                item = engine.catalog.lookup(item_id)
                print(f"{rank}\t{score:.6f}\t{item_id}\t{item.title}")
        else:
            _, results = engine.semantic_search(args.q, args.k)
            for rank, b in enumerate(results, 1):
                item = engine.catalog.lookup(b.item_id)
                print(f"{rank}\t{b.combined:.6f}\t{b.item_id}\t{item.title}")
        return 0

    if args.command == "explain":
        pq = engine.parse(args.q)
        platial, thematic = engine.expansions(pq)
        payload = {
            "query": args.q,
            "places": [
                {
                    "place_id": place.place_id,
                    "weight": w,
                    "expansion": [
                        {"phrase": t.phrase, "weight": t.weight, "kind": t.kind}
                        for t in platial[place.place_id].terms
                    ],
                }
                for place, w in pq.places
            ],
            "thematic_terms": [
                {
                    "term": token.surface,
                    "weight": w,
                    "expansion": [
                        {"word": t.word, "weight": t.weight, "cosine": t.cosine}
                        for t in thematic[token.surface].terms
                    ],
                }
                for token, w in pq.thematic_terms
            ],
        }
        print(json.dumps(payload, indent=2))
        return 0

    if args.command == "serve":
        import uvicorn

        from .api import create_app

        app = create_app(engine)
        uvicorn.run(app, host=engine.config.host, port=engine.config.port)
        return 0

    return 2


if __name__ == "__main__":
    raise SystemExit(main())
