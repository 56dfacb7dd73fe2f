"""In-memory inverted index with per-field statistics and the classic
Lucene practical-scoring baseline.

Postings keep token positions (pre-stopword-removal ordinals), which makes
exact phrase counting work even when a stopword sits inside the phrase.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .catalog import Catalog, TEXT_FIELDS, item_field_text
from .text import AnalyzerConfig, Token, analyze


@dataclass(frozen=True)
class FieldWeights:
    title: float = 0.4
    snippet: float = 0.25
    description: float = 0.25
    item_type: float = 0.1

    def __post_init__(self):
        values = [self.title, self.snippet, self.description, self.item_type]
        if any(v < 0 for v in values):
            raise ValueError("field weights must be non-negative")
        total = sum(values)
        if total <= 0:
            raise ValueError("at least one field weight must be positive")
        # normalize to sum exactly 1
        object.__setattr__(self, "title", self.title / total)
        object.__setattr__(self, "snippet", self.snippet / total)
        object.__setattr__(self, "description", self.description / total)
        object.__setattr__(self, "item_type", self.item_type / total)

    def get(self, field_name: str) -> float:
        return getattr(self, field_name)


@dataclass
class InvertedIndex:
    # term -> field -> sorted list of (item ordinal, positions tuple)
    postings: dict[str, dict[str, list[tuple[int, tuple[int, ...]]]]] = field(default_factory=dict)
    doc_freq: dict[str, int] = field(default_factory=dict)
    field_lengths: dict[tuple[int, str], int] = field(default_factory=dict)
    n_docs: int = 0
    analyzer: AnalyzerConfig = field(default_factory=AnalyzerConfig)

    def tf(self, term: str, item: int, field_name: str) -> int:
        by_field = self.postings.get(term)
        if not by_field:
            return 0
        for ordinal, positions in by_field.get(field_name, ()):
            if ordinal == item:
                return len(positions)
        return 0

    def positions(self, term: str, item: int, field_name: str) -> tuple[int, ...]:
        by_field = self.postings.get(term)
        if not by_field:
            return ()
        for ordinal, positions in by_field.get(field_name, ()):
            if ordinal == item:
                return positions
        return ()

    def idf(self, term: str) -> float:
        if self.n_docs == 0:
            return 0.0
        return 1.0 + math.log(self.n_docs / (self.doc_freq.get(term, 0) + 1))


def build_index(catalog: Catalog, analyzer: AnalyzerConfig | None = None) -> InvertedIndex:
    analyzer = analyzer or AnalyzerConfig()
    index = InvertedIndex(n_docs=len(catalog), analyzer=analyzer)
    seen_in_doc: dict[str, set[int]] = {}
    for ordinal, item in enumerate(catalog):
        for field_name in TEXT_FIELDS:
            tokens = analyze(item_field_text(item, field_name), analyzer)
            index.field_lengths[(ordinal, field_name)] = len(tokens)
            per_term: dict[str, list[int]] = {}
            for token in tokens:
                per_term.setdefault(token.surface, []).append(token.position)
            for term, positions in per_term.items():
                by_field = index.postings.setdefault(term, {})
                by_field.setdefault(field_name, []).append((ordinal, tuple(positions)))
                seen_in_doc.setdefault(term, set()).add(ordinal)
    index.doc_freq = {term: len(docs) for term, docs in seen_in_doc.items()}
    return index


def _phrase_count(index: InvertedIndex, parts: Sequence[Token], item: int, field_name: str) -> int:
    """Occurrences of the full phrase, honoring relative position offsets."""
    if not parts:
        return 0
    if len(parts) == 1:
        return index.tf(parts[0].surface, item, field_name)
    base = parts[0].position
    offsets = [t.position - base for t in parts]
    position_sets = []
    for part in parts:
        positions = index.positions(part.surface, item, field_name)
        if not positions:
            return 0
        position_sets.append(set(positions))
    count = 0
    for start in sorted(position_sets[0]):
        if all(start + off in position_sets[j] for j, off in enumerate(offsets[1:], start=1)):
            count += 1
    return count


def match_count(index: InvertedIndex, phrase: str | Sequence[str], item: int, field_name: str) -> int:
    """M(term, field): tf for single tokens, exact-phrase count otherwise.

    A string phrase is analyzed with the index's analyzer (preserving
    pre-removal positions); a sequence of strings is taken as consecutive
    tokens verbatim.
    """
    if isinstance(phrase, str):
        parts = analyze(phrase, index.analyzer)
    else:
        parts = [Token(surface, i) for i, surface in enumerate(phrase)]
    return _phrase_count(index, parts, item, field_name)


def lucene_baseline_score(
    index: InvertedIndex,
    query_tokens: Sequence[Token],
    item: int,
    weights: FieldWeights,
) -> float:
    """coord * sum over tokens/fields of w_f * sqrt(tf) * idf^2 * fieldNorm.

    queryNorm is omitted: a per-query constant cannot change ranking.
    """
    if not query_tokens:
        return 0.0
    matched = 0
    score = 0.0
    for token in query_tokens:
        token_matched = False
        for field_name in TEXT_FIELDS:
            tf = index.tf(token.surface, item, field_name)
            if tf == 0:
                continue
            token_matched = True
            field_norm = 1.0 / math.sqrt(index.field_lengths[(item, field_name)])
            score += weights.get(field_name) * math.sqrt(tf) * index.idf(token.surface) ** 2 * field_norm
        if token_matched:
            matched += 1
    if matched == 0:
        return 0.0
    coord = matched / len(query_tokens)
    return coord * score


def baseline_search(
    index: InvertedIndex,
    catalog: Catalog,
    query: str,
    k: int,
    weights: FieldWeights,
) -> list[tuple[str, float]]:
    """Top-k (item id, score), zero scores excluded, ties by ascending id."""
    if k < 1:
        raise ValueError("k must be >= 1")
    query_tokens = analyze(query, index.analyzer)
    if not query_tokens:
        return []
    scored = []
    for ordinal, item in enumerate(catalog):
        score = lucene_baseline_score(index, query_tokens, ordinal, weights)
        if score > 0.0:
            scored.append((item.id, score))
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    return scored[:k]
