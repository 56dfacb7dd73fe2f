"""Evaluation harness: graded judgments, DCG@K, and side-by-side model
comparison reports."""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import FormatError, QuerySetMismatchError, UnknownQueryError


@dataclass(frozen=True)
class Judgment:
    query_id: str
    item_id: str
    grade: float

    def __post_init__(self):
        if not 0.0 <= self.grade <= 4.0:
            raise ValueError(f"grade out of range [0, 4]: {self.grade}")


@dataclass(frozen=True)
class RunRanking:
    query_id: str
    model: str
    item_ids: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.item_ids)) != len(self.item_ids):
            raise ValueError(f"duplicate item ids in ranking for {self.query_id}")


def dcg_at_k(rels: Sequence[float], k: int) -> float:
    """rel_1 + sum_{i=2..K} rel_i / log2(i); missing ranks contribute 0."""
    if k < 1:
        raise ValueError("k must be >= 1")
    total = 0.0
    for i, rel in enumerate(rels[:k], start=1):
        total += rel if i == 1 else rel / math.log2(i)
    return total


def ndcg_at_k(rels: Sequence[float], k: int) -> float:
    """dcg normalized by the ideal (descending-grade) ordering.

    Convenience metric; the comparison report's primary output is raw DCG.
    """
    ideal = dcg_at_k(sorted(rels, reverse=True), k)
    if ideal == 0.0:
        return 0.0
    return dcg_at_k(rels, k) / ideal


class JudgmentSet:
    def __init__(self, judgments: Iterable[Judgment]):
        self.grades: dict[tuple[str, str], float] = {}
        self.queries: set[str] = set()
        for j in judgments:
            key = (j.query_id, j.item_id)
            if key in self.grades:
                raise ValueError(f"duplicate judgment for {key}")
            self.grades[key] = j.grade
            self.queries.add(j.query_id)

    def grade(self, query_id: str, item_id: str) -> float:
        return self.grades.get((query_id, item_id), 0.0)


def load_judgments(path: str | Path) -> JudgmentSet:
    """Tab-separated columns: query_id, item_id, grade."""
    judgments = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise FormatError("expected query_id<TAB>item_id<TAB>grade", line_no)
            try:
                judgments.append(Judgment(parts[0], parts[1], float(parts[2])))
            except ValueError as exc:
                raise FormatError(str(exc), line_no) from exc
    return JudgmentSet(judgments)


def load_runs(path: str | Path) -> list[RunRanking]:
    """Tab-separated columns: query_id, model, rank, item_id."""
    rows: dict[tuple[str, str], list[tuple[int, str]]] = {}
    order: list[tuple[str, str]] = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 4:
                raise FormatError("expected query_id<TAB>model<TAB>rank<TAB>item_id", line_no)
            key = (parts[0], parts[1])
            if key not in rows:
                rows[key] = []
                order.append(key)
            try:
                rows[key].append((int(parts[2]), parts[3]))
            except ValueError as exc:
                raise FormatError(str(exc), line_no) from exc
    runs = []
    for query_id, model in order:
        ranked = sorted(rows[(query_id, model)])
        runs.append(RunRanking(query_id, model, tuple(item for _, item in ranked)))
    return runs


def evaluate_run(
    run: RunRanking,
    judgments: JudgmentSet,
    ks: Iterable[int],
    strict: bool = False,
) -> dict[int, float]:
    """DCG per requested cutoff; unjudged items count as grade 0."""
    if strict and run.query_id not in judgments.queries:
        raise UnknownQueryError(run.query_id)
    rels = [judgments.grade(run.query_id, item_id) for item_id in run.item_ids]
    return {k: dcg_at_k(rels, k) for k in ks}


def comparison_report(
    runs: Sequence[RunRanking],
    judgments: JudgmentSet,
    ks: Sequence[int],
) -> str:
    """Tab-separated table comparing exactly two model tags query by query,
    with a winner column per cutoff and an average row."""
    models = sorted({run.model for run in runs})
    if len(models) != 2:
        raise QuerySetMismatchError(f"expected exactly 2 model tags, got {models}")
    model_a, model_b = models
    by_model: dict[str, dict[str, RunRanking]] = {model_a: {}, model_b: {}}
    for run in runs:
        by_model[run.model][run.query_id] = run
    if set(by_model[model_a]) != set(by_model[model_b]):
        raise QuerySetMismatchError("models do not cover the same query set")

    ks = sorted(ks)
    header = ["query_id"]
    for model in (model_a, model_b):
        header.extend(f"{model}_dcg@{k}" for k in ks)
    header.extend(f"winner@{k}" for k in ks)
    lines = ["\t".join(header)]

    sums = {model: {k: 0.0 for k in ks} for model in (model_a, model_b)}
    query_ids = sorted(by_model[model_a])
    for query_id in query_ids:
        scores = {
            model: evaluate_run(by_model[model][query_id], judgments, ks)
            for model in (model_a, model_b)
        }
        row = [query_id]
        for model in (model_a, model_b):
            for k in ks:
                row.append(f"{scores[model][k]:.5f}")
                sums[model][k] += scores[model][k]
        for k in ks:
            a, b = scores[model_a][k], scores[model_b][k]
            row.append("tie" if a == b else (model_a if a > b else model_b))
        lines.append("\t".join(row))

    n = len(query_ids)
    avg = {model: {k: sums[model][k] / n for k in ks} for model in (model_a, model_b)} if n else {}
    row = ["average"]
    for model in (model_a, model_b):
        for k in ks:
            row.append(f"{avg[model][k]:.5f}" if n else "0.00000")
    for k in ks:
        if not n:
            row.append("tie")
            continue
        a, b = avg[model_a][k], avg[model_b][k]
        row.append("tie" if a == b else (model_a if a > b else model_b))
    lines.append("\t".join(row))
    return "\n".join(lines) + "\n"


def average_dcg(
    runs: Sequence[RunRanking], judgments: JudgmentSet, model: str, k: int
) -> float:
    selected = [run for run in runs if run.model == model]
    if not selected:
        raise QuerySetMismatchError(f"no runs for model {model}")
    total = sum(evaluate_run(run, judgments, [k])[k] for run in selected)
    return total / len(selected)
