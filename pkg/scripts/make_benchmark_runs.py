#!/usr/bin/env python3
"""Freeze benchmark run rankings (both models over fixtures/queries.tsv)
into fixtures/runs.tsv, and the comparison report into
fixtures/golden_report.tsv. Run after make_fixtures.py."""
from __future__ import annotations

from pathlib import Path

from geosearch.evaluation import comparison_report, load_judgments, load_runs
from geosearch.service import assemble_engine, load_config

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"


def main() -> None:
    engine = assemble_engine(load_config(FIXTURES / "config.txt"))
    lines = []
    for raw in (FIXTURES / "queries.tsv").read_text("utf-8").splitlines():
        qid, query = raw.split("\t")
        _, results = engine.semantic_search(query, 10)
        for rank, b in enumerate(results, 1):
            lines.append(f"{qid}\tsemantic\t{rank}\t{b.item_id}")
        for rank, (item_id, _) in enumerate(engine.baseline_search(query, 10), 1):
            lines.append(f"{qid}\tlucene\t{rank}\t{item_id}")
    (FIXTURES / "runs.tsv").write_text("\n".join(lines) + "\n", "utf-8")

    runs = load_runs(FIXTURES / "runs.tsv")
    judgments = load_judgments(FIXTURES / "judgments.tsv")
    report = comparison_report(runs, judgments, [3, 5, 10])
    (FIXTURES / "golden_report.tsv").write_text(report, "utf-8")
    print("runs.tsv and golden_report.tsv written")


if __name__ == "__main__":
    main()
