"""Word-vector table: GloVe-format loading, cosine similarity,
nearest-neighbor lookup, query and document embeddings."""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .errors import DimensionMismatchError, EmptyTableError, FormatError
from .index import InvertedIndex
from .text import Token

# fields that feed the document embedding (item_type is a tag, not prose)
DOC_EMBED_FIELDS = ("title", "snippet", "description")


@dataclass(frozen=True)
class EmbeddingTable:
    dimension: int
    vectors: dict[str, np.ndarray]

    def __contains__(self, word: str) -> bool:
        return word in self.vectors

    def __len__(self) -> int:
        return len(self.vectors)

    def get(self, word: str) -> Optional[np.ndarray]:
        return self.vectors.get(word)


@dataclass(frozen=True)
class DocEmbedding:
    item_id: str
    vector: np.ndarray
    norm: float


def load_embeddings(
    path: str | Path,
    vocab_filter: Optional[set[str]] = None,
    strict: bool = True,
) -> EmbeddingTable:
    """Load "word v1 ... vD" lines; dimension inferred from the first line."""
    dimension: Optional[int] = None
    vectors: dict[str, np.ndarray] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            parts = line.rstrip("\n").split(" ")
            if len(parts) < 2:
                if strict:
                    raise FormatError("not a 'word v1 ... vD' line", line_no)
                continue
            word, values = parts[0], parts[1:]
            if dimension is None:
                dimension = len(values)
            if len(values) != dimension:
                if strict:
                    raise FormatError(
                        f"expected {dimension} values, got {len(values)}", line_no
                    )
                continue
            if vocab_filter is not None and word not in vocab_filter:
                continue
            try:
                vectors[word] = np.array([float(v) for v in values], dtype=np.float64)
            except ValueError as exc:
                if strict:
                    raise FormatError(str(exc), line_no) from exc
    if dimension is None or not vectors:
        raise EmptyTableError(f"no embeddings loaded from {path}")
    return EmbeddingTable(dimension=dimension, vectors=vectors)


def cosine(u: np.ndarray, v: np.ndarray) -> float:
    """u.v / (|u||v|); 0 when either vector has zero norm."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if u.shape != v.shape:
        raise DimensionMismatchError(f"{u.shape} vs {v.shape}")
    nu = float(np.linalg.norm(u))
    nv = float(np.linalg.norm(v))
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return float(np.dot(u, v) / (nu * nv))


def neighbors(
    table: EmbeddingTable, term: str, k: int, min_cos: float
) -> list[tuple[str, float]]:
    """Up to k in-vocabulary words closest to term by cosine.

    Sorted by cosine descending, ties lexicographic; empty when the term is
    out of vocabulary or k = 0.
    """
    anchor = table.get(term)
    if anchor is None or k <= 0:
        return []
    scored = []
    for word, vector in table.vectors.items():
        if word == term:
            continue
        sim = cosine(anchor, vector)
        if sim >= min_cos:
            scored.append((word, sim))
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    return scored[:k]


def query_embedding(table: EmbeddingTable, thematic_tokens: Sequence[Token]) -> np.ndarray:
    """Sum of token vectors (with multiplicity); zero vector when all OOV."""
    total = np.zeros(table.dimension, dtype=np.float64)
    for token in thematic_tokens:
        vector = table.get(token.surface)
        if vector is not None:
            total += vector
    return total


def tfidf_weight(tf: int, doc_freq: int, n_docs: int) -> float:
    """tf * (ln((1+N)/(1+df)) + 1); the +1 floor keeps corpus-universal
    terms from vanishing in tiny corpora."""
    return tf * (math.log((1 + n_docs) / (1 + doc_freq)) + 1.0)


def doc_embedding(table: EmbeddingTable, index: InvertedIndex, item: int, item_id: str) -> DocEmbedding:
    """TF-IDF weighted sum of word vectors over title+snippet+description.

    Terms are visited in sorted order so the float summation is exact
    across runs regardless of postings layout.
    """
    tfs: dict[str, int] = {}
    for term, by_field in index.postings.items():
        if term not in table:
            continue
        total = 0
        for field_name in DOC_EMBED_FIELDS:
            for ordinal, positions in by_field.get(field_name, ()):
                if ordinal == item:
                    total += len(positions)
        if total:
            tfs[term] = total
    vector = np.zeros(table.dimension, dtype=np.float64)
    for term in sorted(tfs):
        weight = tfidf_weight(tfs[term], index.doc_freq[term], index.n_docs)
        vector += weight * table.vectors[term]
    return DocEmbedding(item_id=item_id, vector=vector, norm=float(np.linalg.norm(vector)))
